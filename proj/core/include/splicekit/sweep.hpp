#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "splicekit/family.hpp"
#include "splicekit/params.hpp"

namespace splicekit {

struct SweepBounds {
  std::int64_t max_pqpq = 30;
  int max_r = 6;
  std::int64_t max_a = 5;
};

// All (P, Q, p, q) with entries in 1..bound and Pq - pQ = 1, lexicographic.
std::vector<std::array<std::int64_t, 4>> valid_quadruples(std::int64_t bound);

// Uniform over valid_quadruples for F1/F2; r is uniform in 2..max_r for F1
// and 1..max_r otherwise, each a_i uniform in 1..max_a.
SimpleTypeParams sample_params(Family family, const SweepBounds& bounds, std::mt19937_64& rng);
std::vector<SimpleTypeParams> sample_params(Family family, std::size_t count, std::uint64_t seed,
                                            const SweepBounds& bounds = {});

// Small nonzero alphas, distinct nonzero betas, h of degree < A for F3.
FamilyInstance sample_instance(const SimpleTypeParams& params, std::mt19937_64& rng);

BigRational small_rational(std::mt19937_64& rng, std::int64_t num_bound = 9, std::int64_t den_bound = 4);

}  // namespace splicekit
