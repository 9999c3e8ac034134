#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace splicekit {

// Signed letters: +i is sigma_i, -i its inverse; sigma_i exchanges strands
// i-1 and i of strands 0..n-1.
struct BraidWord {
  int strands = 0;
  std::vector<int> letters;

  BraidWord operator*(const BraidWord& o) const;
  BraidWord inverse() const;
  std::string str() const;
  bool operator==(const BraidWord&) const = default;
};

class BraidError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Free group words over x_1..x_n; -j is x_j^{-1}. Always freely reduced.
using FreeWord = std::vector<int>;

FreeWord free_reduce(const FreeWord& w);
FreeWord free_mul(const FreeWord& a, const FreeWord& b);
FreeWord free_inverse(const FreeWord& w);
std::string to_string(const FreeWord& w);

struct FreeGroupEndo {
  int rank = 0;
  std::vector<FreeWord> images;  // images[j - 1] is the image of x_j

  static FreeGroupEndo identity(int rank);
  bool is_identity() const;
  FreeWord apply(const FreeWord& w) const;
  // (*this o other)(x) = this(other(x))
  FreeGroupEndo compose(const FreeGroupEndo& other) const;
  bool operator==(const FreeGroupEndo&) const = default;
};

// Words act left to right: action(w1 w2) = action(w1) o action(w2), where
// sigma_i sends x_i to x_i x_{i+1} x_i^{-1} and x_{i+1} to x_i.
FreeGroupEndo artin_action(const BraidWord& w);
FreeGroupEndo artin_generator(int strands, int letter);

bool braids_equal(const BraidWord& a, const BraidWord& b);
// perm[s] is the strand position that strand s ends at.
std::vector<int> permutation(const BraidWord& w);
bool is_pure(const BraidWord& w);

// h_i = sigma_1..sigma_{i-1} sigma_i^2 sigma_{i-1}^{-1}..sigma_1^{-1} on r+1 strands.
std::vector<BraidWord> local_monodromies(int r);
BraidWord h_infinity(int r);
// h_r ... h_1 as a concatenated word.
BraidWord product_of_locals(int r);

struct FreeProbeResult {
  bool free = true;
  std::uint64_t words_checked = 0;
  std::vector<int> witness;  // +-i for h_i^{+-1}, when a relation is found
};

FreeProbeResult free_probe_report(int r, int maxlen);
bool free_probe(int r, int maxlen);

}  // namespace splicekit
