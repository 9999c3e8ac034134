#include "splicekit/monodromy.hpp"

#include <cstdlib>
#include <numeric>

namespace splicekit {

namespace {

void check_letters(const BraidWord& w) {
  if (w.strands < 1) throw BraidError("strand count must be positive");
  for (int l : w.letters)
    if (l == 0 || std::abs(l) > w.strands - 1) throw BraidError("generator index out of range: " + std::to_string(l));
}

}  // namespace

BraidWord BraidWord::operator*(const BraidWord& o) const {
  if (strands != o.strands) throw BraidError("strand counts differ");
  BraidWord out = *this;
  out.letters.insert(out.letters.end(), o.letters.begin(), o.letters.end());
  return out;
}

BraidWord BraidWord::inverse() const {
  BraidWord out{strands, {}};
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.letters.push_back(-*it);
  return out;
}

std::string BraidWord::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < letters.size(); ++i) s += (i ? "," : "") + std::to_string(letters[i]);
  return s + "]";
}

FreeWord free_reduce(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (int l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

FreeWord free_mul(const FreeWord& a, const FreeWord& b) {
  FreeWord out = a;
  for (int l : b) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

FreeWord free_inverse(const FreeWord& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (auto& l : out) l = -l;
  return out;
}

std::string to_string(const FreeWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ";
    s += "x" + std::to_string(std::abs(w[i]));
    if (w[i] < 0) s += "^-1";
  }
  return s;
}

FreeGroupEndo FreeGroupEndo::identity(int rank) {
  FreeGroupEndo e;
  e.rank = rank;
  for (int j = 1; j <= rank; ++j) e.images.push_back({j});
  return e;
}

bool FreeGroupEndo::is_identity() const {
  for (int j = 1; j <= rank; ++j)
    if (images[static_cast<std::size_t>(j - 1)] != FreeWord{j}) return false;
  return true;
}

FreeWord FreeGroupEndo::apply(const FreeWord& w) const {
  FreeWord out;
  for (int l : w) {
    const auto& img = images.at(static_cast<std::size_t>(std::abs(l) - 1));
    out = free_mul(out, l > 0 ? img : free_inverse(img));
  }
  return out;
}

FreeGroupEndo FreeGroupEndo::compose(const FreeGroupEndo& other) const {
  FreeGroupEndo e;
  e.rank = rank;
  for (const auto& img : other.images) e.images.push_back(apply(img));
  return e;
}

FreeGroupEndo artin_generator(int strands, int letter) {
  auto e = FreeGroupEndo::identity(strands);
  const int i = std::abs(letter);
  if (i < 1 || i > strands - 1) throw BraidError("generator index out of range: " + std::to_string(letter));
  auto& xi = e.images[static_cast<std::size_t>(i - 1)];
  auto& xn = e.images[static_cast<std::size_t>(i)];
  if (letter > 0) {
    xi = {i, i + 1, -i};
    xn = {i};
  } else {
    xi = {i + 1};
    xn = {-(i + 1), i, i + 1};
  }
  return e;
}

FreeGroupEndo artin_action(const BraidWord& w) {
  check_letters(w);
  auto e = FreeGroupEndo::identity(w.strands);
  for (int l : w.letters) e = e.compose(artin_generator(w.strands, l));
  return e;
}

bool braids_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw BraidError("strand counts differ");
  return artin_action(a) == artin_action(b);
}

std::vector<int> permutation(const BraidWord& w) {
  check_letters(w);
  // at[p] is the strand currently in position p
  std::vector<int> at(static_cast<std::size_t>(w.strands));
  std::iota(at.begin(), at.end(), 0);
  for (int l : w.letters) std::swap(at[static_cast<std::size_t>(std::abs(l) - 1)], at[static_cast<std::size_t>(std::abs(l))]);
  std::vector<int> perm(at.size());
  for (std::size_t p = 0; p < at.size(); ++p) perm[static_cast<std::size_t>(at[p])] = static_cast<int>(p);
  return perm;
}

bool is_pure(const BraidWord& w) {
  const auto perm = permutation(w);
  for (std::size_t s = 0; s < perm.size(); ++s)
    if (perm[s] != static_cast<int>(s)) return false;
  return true;
}

std::vector<BraidWord> local_monodromies(int r) {
  if (r < 1) throw BraidError("r >= 1 required");
  std::vector<BraidWord> out;
  for (int i = 1; i <= r; ++i) {
    BraidWord h{r + 1, {}};
    for (int j = 1; j < i; ++j) h.letters.push_back(j);
    h.letters.push_back(i);
    h.letters.push_back(i);
    for (int j = i - 1; j >= 1; --j) h.letters.push_back(-j);
    out.push_back(std::move(h));
  }
  return out;
}

BraidWord h_infinity(int r) {
  if (r < 1) throw BraidError("r >= 1 required");
  BraidWord h{r + 1, {}};
  for (int i = 1; i <= r; ++i) h.letters.push_back(i);
  for (int i = r; i >= 1; --i) h.letters.push_back(i);
  return h;
}

BraidWord product_of_locals(int r) {
  const auto hs = local_monodromies(r);
  BraidWord out{r + 1, {}};
  for (int i = r; i >= 1; --i) out = out * hs[static_cast<std::size_t>(i - 1)];
  return out;
}

namespace {

struct Prober {
  int maxlen;
  std::vector<FreeGroupEndo> gens;  // h_1, h_1^{-1}, h_2, ...
  std::vector<int> labels;
  FreeProbeResult res;
  std::vector<int> word;

  void dfs(const FreeGroupEndo& e, int last) {
    if (!res.free || static_cast<int>(word.size()) == maxlen) return;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (last >= 0 && labels[g] == -labels[static_cast<std::size_t>(last)]) continue;
      const auto next = e.compose(gens[g]);
      word.push_back(labels[g]);
      ++res.words_checked;
      if (next.is_identity()) {
        res.free = false;
        res.witness = word;
        return;
      }
      dfs(next, static_cast<int>(g));
      word.pop_back();
      if (!res.free) return;
    }
  }
};

}  // namespace

FreeProbeResult free_probe_report(int r, int maxlen) {
  if (r < 2) throw BraidError("free_probe needs r >= 2");
  if (maxlen < 1) throw BraidError("free_probe needs maxlen >= 1");
  Prober p;
  p.maxlen = maxlen;
  const auto hs = local_monodromies(r);
  for (int i = 1; i <= r; ++i) {
    p.gens.push_back(artin_action(hs[static_cast<std::size_t>(i - 1)]));
    p.labels.push_back(i);
    p.gens.push_back(artin_action(hs[static_cast<std::size_t>(i - 1)].inverse()));
    p.labels.push_back(-i);
  }
  p.dfs(FreeGroupEndo::identity(r + 1), -1);
  return p.res;
}

bool free_probe(int r, int maxlen) { return free_probe_report(r, maxlen).free; }

}  // namespace splicekit
