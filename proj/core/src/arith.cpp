#include "splicekit/arith.hpp"

#include <utility>

namespace splicekit {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

BigRational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  if (s.empty()) throw std::invalid_argument("empty rational");
  const auto slash = s.find('/');
  auto parse_int = [](const std::string& part) {
    if (part.empty() || part == "-" || part == "+") throw std::invalid_argument("malformed rational");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    for (std::size_t i = start; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw std::invalid_argument("malformed rational: " + part);
    return BigInt(part[0] == '+' ? part.substr(1) : part, 10);
  };
  if (slash == std::string::npos) return make_rational(parse_int(s));
  return make_rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

std::string to_string(const BigRational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const BigInt& x) { return x.get_str(); }

ProjRational ProjRational::infinity() {
  ProjRational p;
  p.infinite_ = true;
  return p;
}

const BigRational& ProjRational::value() const {
  if (infinite_) throw std::domain_error("value of infinity");
  return value_;
}

bool ProjRational::operator==(const ProjRational& o) const {
  if (infinite_ || o.infinite_) return infinite_ == o.infinite_;
  return value_ == o.value_;
}

std::string ProjRational::str() const { return infinite_ ? "inf" : to_string(value_); }

namespace {

BigInt ceil_of(const BigRational& x) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

std::int64_t narrow(const BigInt& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("continued fraction entry out of range");
  return v.get_si();
}

}  // namespace

HJExpansion hj_expand(const BigRational& x_in) {
  if (x_in <= 0) throw std::invalid_argument("hj_expand needs a positive rational");
  HJExpansion out;
  BigRational x = x_in;
  for (;;) {
    if (x.get_den() == 1) {
      out.push_back(narrow(x.get_num()));
      return out;
    }
    BigInt c = ceil_of(x);
    out.push_back(narrow(c));
    // c - x lies in (0,1), so the next value exceeds 1
    x = 1 / (BigRational(c) - x);
  }
}

ProjRational cf_eval(const std::vector<BigRational>& cs) {
  if (cs.empty()) throw std::invalid_argument("cf_eval needs a nonempty sequence");
  ProjRational v(cs.back());
  for (std::size_t i = cs.size() - 1; i-- > 0;) {
    if (v.is_infinite()) {
      v = ProjRational(cs[i]);
    } else if (v.value() == 0) {
      v = ProjRational::infinity();
    } else {
      v = ProjRational(cs[i] - 1 / v.value());
    }
  }
  return v;
}

ProjRational cf_eval(const HJExpansion& cs) {
  std::vector<BigRational> q;
  q.reserve(cs.size());
  for (auto c : cs) q.emplace_back(static_cast<long>(c));
  return cf_eval(q);
}

IntMatrix::IntMatrix(std::size_t n) : n_(n), a_(n * n, BigInt(0)) {}

bool IntMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

BigInt det(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<BigInt> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return a[i * n + j]; };

  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = at(k, k);
  }
  BigInt d = at(n - 1, n - 1);
  return sign < 0 ? BigInt(-d) : d;
}

namespace {

// Gauss-Jordan on [m | rhs]; rhs is transformed in place into the solution.
void eliminate(const IntMatrix& m, RatMatrix& rhs) {
  const std::size_t n = m.size();
  RatMatrix a(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = BigRational(m(i, j));
  const std::size_t cols = rhs.empty() ? 0 : rhs[0].size();

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) throw SingularMatrix("singular matrix");
    std::swap(a[k], a[piv]);
    std::swap(rhs[k], rhs[piv]);
    const BigRational inv = 1 / a[k][k];
    for (std::size_t j = k; j < n; ++j) a[k][j] *= inv;
    for (std::size_t j = 0; j < cols; ++j) rhs[k][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      const BigRational f = a[i][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      for (std::size_t j = 0; j < cols; ++j) rhs[i][j] -= f * rhs[k][j];
    }
  }
}

}  // namespace

RatVector solve(const IntMatrix& m, const RatVector& b) {
  if (b.size() != m.size()) throw std::invalid_argument("dimension mismatch");
  RatMatrix rhs(b.size(), RatVector(1));
  for (std::size_t i = 0; i < b.size(); ++i) rhs[i][0] = b[i];
  eliminate(m, rhs);
  RatVector x(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) x[i] = rhs[i][0];
  return x;
}

RatMatrix inverse(const IntMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix rhs(n, RatVector(n, BigRational(0)));
  for (std::size_t i = 0; i < n; ++i) rhs[i][i] = 1;
  eliminate(m, rhs);
  return rhs;
}

RatVector multiply(const IntMatrix& m, const RatVector& x) {
  if (x.size() != m.size()) throw std::invalid_argument("dimension mismatch");
  RatVector y(x.size(), BigRational(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) y[i] += BigRational(m(i, j)) * x[j];
  return y;
}

}  // namespace splicekit
