#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splicekit/arith.hpp"

namespace splicekit {

// Sparse polynomial in x, y with exact rational coefficients; the key (i, j)
// is the exponent pair of x^i y^j and no zero coefficient is ever stored.
class MultiPoly {
 public:
  using Exponent = std::pair<std::uint32_t, std::uint32_t>;
  using Terms = std::map<Exponent, BigRational>;

  MultiPoly() = default;
  MultiPoly(const BigRational& c);  // NOLINT: constants convert implicitly
  MultiPoly(long c) : MultiPoly(BigRational(c)) {}  // NOLINT

  static MultiPoly x();
  static MultiPoly y();
  static MultiPoly monomial(const BigRational& c, std::uint32_t i, std::uint32_t j);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  BigRational coeff(std::uint32_t i, std::uint32_t j) const;
  void add_term(const BigRational& c, std::uint32_t i, std::uint32_t j);

  // nullopt for the zero polynomial
  std::optional<std::int64_t> total_degree() const;
  std::optional<std::int64_t> degree_x() const;
  std::optional<std::int64_t> degree_y() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const BigRational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const BigRational& c) { return a *= c; }
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

  MultiPoly pow(std::uint64_t e) const;
  MultiPoly swapped() const;  // exchanges x and y
  // f(ax, by) for rationals a, b
  MultiPoly scaled(const BigRational& a, const BigRational& b) const;
  BigRational eval(const BigRational& x, const BigRational& y) const;

  // Canonical text: terms by descending total degree then x-degree, written
  // "c x^i y^j" and joined by " + "; "0" for the zero polynomial.
  std::string str() const;
  static MultiPoly parse(const std::string& text);

 private:
  Terms terms_;
};

MultiPoly substitute(const MultiPoly& f, const MultiPoly& gx, const MultiPoly& gy);

// Dense univariate polynomial, lowest degree first.
using UniPoly = std::vector<BigRational>;

UniPoly uni_mul(const UniPoly& a, const UniPoly& b);
UniPoly uni_pow(const UniPoly& a, std::uint64_t e);
BigRational uni_eval(const UniPoly& a, const BigRational& x);

}  // namespace splicekit
