#include "splicekit/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace splicekit {

MultiPoly::MultiPoly(const BigRational& c) {
  if (c != 0) terms_[{0, 0}] = c;
}

MultiPoly MultiPoly::x() { return monomial(1, 1, 0); }
MultiPoly MultiPoly::y() { return monomial(1, 0, 1); }

MultiPoly MultiPoly::monomial(const BigRational& c, std::uint32_t i, std::uint32_t j) {
  MultiPoly m;
  m.add_term(c, i, j);
  return m;
}

BigRational MultiPoly::coeff(std::uint32_t i, std::uint32_t j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? BigRational(0) : it->second;
}

void MultiPoly::add_term(const BigRational& c, std::uint32_t i, std::uint32_t j) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<std::int64_t> MultiPoly::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  std::int64_t d = 0;
  for (const auto& [e, _] : terms_) d = std::max<std::int64_t>(d, std::int64_t{e.first} + e.second);
  return d;
}

std::optional<std::int64_t> MultiPoly::degree_x() const {
  if (terms_.empty()) return std::nullopt;
  return std::int64_t{terms_.rbegin()->first.first};
}

std::optional<std::int64_t> MultiPoly::degree_y() const {
  if (terms_.empty()) return std::nullopt;
  std::int64_t d = 0;
  for (const auto& [e, _] : terms_) d = std::max<std::int64_t>(d, e.second);
  return d;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly m = *this;
  for (auto& [_, c] : m.terms_) c = -c;
  return m;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(c, e.first, e.second);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(-c, e.first, e.second);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [_, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  BigRational t;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      t = ca * cb;
      out.add_term(t, ea.first + eb.first, ea.second + eb.second);
    }
  return out;
}

MultiPoly MultiPoly::pow(std::uint64_t e) const {
  MultiPoly result(1), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::swapped() const {
  MultiPoly m;
  for (const auto& [e, c] : terms_) m.terms_[{e.second, e.first}] = c;
  return m;
}

MultiPoly MultiPoly::scaled(const BigRational& a, const BigRational& b) const {
  MultiPoly m;
  std::vector<BigRational> ap{BigRational(1)}, bp{BigRational(1)};
  for (const auto& [e, c] : terms_) {
    while (ap.size() <= e.first) ap.push_back(ap.back() * a);
    while (bp.size() <= e.second) bp.push_back(bp.back() * b);
    m.add_term(c * ap[e.first] * bp[e.second], e.first, e.second);
  }
  return m;
}

BigRational MultiPoly::eval(const BigRational& x, const BigRational& y) const {
  // Horner in x over the y-polynomials of each x-degree
  BigRational acc = 0;
  std::uint32_t cur = terms_.empty() ? 0 : terms_.rbegin()->first.first;
  auto it = terms_.rbegin();
  while (it != terms_.rend()) {
    const std::uint32_t i = it->first.first;
    while (cur > i) {
      acc *= x;
      --cur;
    }
    // coefficients of x^i, descending in j
    BigRational inner = 0;
    std::uint32_t jcur = it->first.second;
    while (it != terms_.rend() && it->first.first == i) {
      while (jcur > it->first.second) {
        inner *= y;
        --jcur;
      }
      inner += it->second;
      ++it;
    }
    while (jcur > 0) {
      inner *= y;
      --jcur;
    }
    acc += inner;
  }
  while (cur > 0) {
    acc *= x;
    --cur;
  }
  return acc;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, BigRational>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    const auto da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  std::ostringstream os;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    const auto& [e, c] = ts[k];
    if (k) os << " + ";
    os << (c.get_den() == 1 ? c.get_num().get_str() : to_string(c));
    if (e.first) os << " x^" << e.first;
    if (e.second) os << " y^" << e.second;
  }
  return os.str();
}

MultiPoly MultiPoly::parse(const std::string& text) {
  MultiPoly m;
  std::string trimmed = text;
  trimmed.erase(0, trimmed.find_first_not_of(" \t\n"));
  trimmed.erase(trimmed.find_last_not_of(" \t\n") + 1);
  if (trimmed == "0") return m;
  std::size_t pos = 0;
  while (pos <= trimmed.size()) {
    const std::size_t next = trimmed.find(" + ", pos);
    const std::string term = trimmed.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    std::istringstream is(term);
    std::string tok;
    if (!(is >> tok)) throw std::invalid_argument("empty polynomial term");
    const BigRational c = parse_rational(tok);
    std::uint32_t i = 0, j = 0;
    while (is >> tok) {
      if (tok.size() < 3 || tok[1] != '^' || (tok[0] != 'x' && tok[0] != 'y'))
        throw std::invalid_argument("malformed monomial: " + tok);
      const unsigned long e = std::stoul(tok.substr(2));
      (tok[0] == 'x' ? i : j) += static_cast<std::uint32_t>(e);
    }
    m.add_term(c, i, j);
    if (next == std::string::npos) break;
    pos = next + 3;
  }
  return m;
}

MultiPoly substitute(const MultiPoly& f, const MultiPoly& gx, const MultiPoly& gy) {
  std::vector<MultiPoly> px{MultiPoly(1)}, py{MultiPoly(1)};
  const auto dx = f.degree_x().value_or(0), dy = f.degree_y().value_or(0);
  for (std::int64_t i = 1; i <= dx; ++i) px.push_back(px.back() * gx);
  for (std::int64_t j = 1; j <= dy; ++j) py.push_back(py.back() * gy);
  MultiPoly out;
  for (const auto& [e, c] : f.terms()) out += px[e.first] * py[e.second] * c;
  return out;
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly out(a.size() + b.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

UniPoly uni_pow(const UniPoly& a, std::uint64_t e) {
  UniPoly result{BigRational(1)}, base = a;
  while (e) {
    if (e & 1) result = uni_mul(result, base);
    e >>= 1;
    if (e) base = uni_mul(base, base);
  }
  return result;
}

BigRational uni_eval(const UniPoly& a, const BigRational& x) {
  BigRational acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace splicekit
