#include "splicekit/sweep.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace splicekit {

std::vector<std::array<std::int64_t, 4>> valid_quadruples(std::int64_t bound) {
  std::vector<std::array<std::int64_t, 4>> out;
  for (std::int64_t P = 1; P <= bound; ++P)
    for (std::int64_t Q = 1; Q <= bound; ++Q)
      for (std::int64_t p = 1; p <= bound; ++p) {
        // q is forced by Pq = 1 + pQ
        const std::int64_t num = 1 + p * Q;
        if (num % P != 0) continue;
        const std::int64_t q = num / P;
        if (q >= 1 && q <= bound) out.push_back({P, Q, p, q});
      }
  return out;
}

namespace {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

}  // namespace

SimpleTypeParams sample_params(Family family, const SweepBounds& bounds, std::mt19937_64& rng) {
  SimpleTypeParams x;
  x.family = family;
  if (family != Family::F3) {
    static thread_local std::int64_t cached_bound = -1;
    static thread_local std::vector<std::array<std::int64_t, 4>> quads;
    if (cached_bound != bounds.max_pqpq) {
      quads = valid_quadruples(bounds.max_pqpq);
      cached_bound = bounds.max_pqpq;
    }
    const auto& t = quads.at(static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(quads.size()) - 1)));
    x.P = t[0];
    x.Q = t[1];
    x.p = t[2];
    x.q = t[3];
  }
  const int r = static_cast<int>(uniform(rng, family == Family::F1 ? 2 : 1, bounds.max_r));
  for (int i = 1; i < r; ++i) x.a.push_back(uniform(rng, 1, bounds.max_a));
  return x;
}

std::vector<SimpleTypeParams> sample_params(Family family, std::size_t count, std::uint64_t seed,
                                            const SweepBounds& bounds) {
  std::mt19937_64 rng(seed);
  std::vector<SimpleTypeParams> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(sample_params(family, bounds, rng));
  return out;
}

BigRational small_rational(std::mt19937_64& rng, std::int64_t num_bound, std::int64_t den_bound) {
  return make_rational(uniform(rng, -num_bound, num_bound), uniform(rng, 1, den_bound));
}

FamilyInstance sample_instance(const SimpleTypeParams& x, std::mt19937_64& rng) {
  FamilyInstance inst;
  inst.params = x;
  auto nonzero = [&] {
    for (;;) {
      auto v = small_rational(rng, 5, 3);
      if (v != 0) return v;
    }
  };
  std::set<BigRational> used;
  while (inst.betas.size() + 1 < static_cast<std::size_t>(x.r())) {
    auto b = nonzero();
    if (used.insert(b).second) inst.betas.push_back(b);
  }
  if (x.family == Family::F3) {
    const auto A = std::accumulate(x.a.begin(), x.a.end(), std::int64_t{0});
    for (std::int64_t i = 0; i < A; ++i) inst.hcoeffs.push_back(small_rational(rng, 5, 1));
  } else {
    for (std::int64_t j = 0; j < k_of(x); ++j) inst.alphas.push_back(nonzero());
  }
  return inst;
}

}  // namespace splicekit
