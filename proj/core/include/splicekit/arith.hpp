#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace splicekit {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Builds num/den in lowest terms; den must be nonzero.
BigRational make_rational(const BigInt& num, const BigInt& den = 1);
BigRational parse_rational(const std::string& text);
std::string to_string(const BigRational& x);
std::string to_string(const BigInt& x);

// Point of the projective rational line: a rational or infinity.
class ProjRational {
 public:
  ProjRational() = default;
  ProjRational(BigRational v) : value_(std::move(v)) {}  // NOLINT: implicit by design
  static ProjRational infinity();

  bool is_infinite() const { return infinite_; }
  const BigRational& value() const;

  bool operator==(const ProjRational& o) const;
  std::string str() const;

 private:
  bool infinite_ = false;
  BigRational value_{0};
};

// c_0, c_1, ..., c_t with c_i >= 2 for i >= 1.
using HJExpansion = std::vector<std::int64_t>;

HJExpansion hj_expand(const BigRational& x);

// Right-to-left evaluation of c_0 - 1/(c_1 - 1/(... - 1/c_t)).
ProjRational cf_eval(const std::vector<BigRational>& cs);
ProjRational cf_eval(const HJExpansion& cs);

class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n);

  std::size_t size() const { return n_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  bool is_symmetric() const;
  bool operator==(const IntMatrix& o) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> a_;
};

using RatVector = std::vector<BigRational>;
using RatMatrix = std::vector<RatVector>;

class SingularMatrix : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Bareiss fraction-free elimination; det of the 0x0 matrix is 1.
BigInt det(const IntMatrix& m);

// Exact solution of m x = b; throws SingularMatrix.
RatVector solve(const IntMatrix& m, const RatVector& b);

// Exact inverse; throws SingularMatrix.
RatMatrix inverse(const IntMatrix& m);

RatVector multiply(const IntMatrix& m, const RatVector& x);

}  // namespace splicekit
