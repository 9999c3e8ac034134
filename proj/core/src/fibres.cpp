#include "splicekit/fibres.hpp"

#include <stdexcept>

namespace splicekit {

std::string to_string(Gluing g) { return g == Gluing::AllDisjoint ? "all_disjoint" : "normal_crossing"; }

std::string to_string(Locus l) {
  switch (l) {
    case Locus::Generic: return "generic";
    case Locus::Special: return "special";
    case Locus::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

std::string comp_str(const FibreComponent& c) {
  if (c.punctures == 0) return "C";
  if (c.punctures == 1) return "C*";
  return "C(" + std::to_string(c.punctures) + ")";
}

FibreTopology make(int index, std::string tag, std::vector<std::int64_t> punctures, Gluing gl, bool reduced,
                   Locus locus) {
  FibreTopology t;
  t.index = index;
  t.value_tag = std::move(tag);
  for (auto n : punctures) t.components.push_back({n});
  t.gluing = gl;
  t.reduced = reduced;
  t.locus = locus;
  return t;
}

}  // namespace

std::string FibreTopology::str() const {
  std::string s;
  const auto n = components.size();
  const bool crossing = gluing == Gluing::NormalCrossing && n >= 2;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) s += (crossing && i == n - 1) ? " + " : " u ";
    if (crossing && n > 2 && i == n - 2) s += "(";
    s += comp_str(components[i]);
  }
  if (crossing && n > 2) s += ")";
  return s;
}

std::int64_t FibreTopology::euler_characteristic() const {
  std::int64_t chi = 0;
  for (const auto& c : components) chi += 1 - c.punctures;
  if (gluing == Gluing::NormalCrossing) chi -= 1;
  return chi;
}

std::optional<std::pair<std::int64_t, std::int64_t>> extra_fibre_pair(const SimpleTypeParams& x) {
  if (x.P == 1) return std::make_pair(x.Q, x.p);  // q/p = (Qk+1)/k
  if (x.q == 1) return std::make_pair(x.p, x.Q);  // P/Q = (pk+1)/k
  return std::nullopt;
}

std::vector<FibreTopology> classify_irregular_fibres(const SimpleTypeParams& x, Locus locus) {
  if (x.family != Family::F1) throw std::invalid_argument("fibre classification covers the non-isotrivial family only");
  const auto errs = validate(x);
  if (!errs.empty()) throw std::invalid_argument(errs.front());
  const std::int64_t r = x.r();
  std::vector<FibreTopology> out;
  for (std::int64_t i = 1; i < r; ++i) {
    const int idx = static_cast<int>(i);
    const std::string tag = "beta_" + std::to_string(i);
    if (x.a[static_cast<std::size_t>(i - 1)] == 1)
      out.push_back(make(idx, tag, {r - 1, 1}, Gluing::NormalCrossing, true, Locus::Generic));
    else
      out.push_back(make(idx, tag, {r, 1}, Gluing::AllDisjoint, true, Locus::Generic));
  }
  const int ri = static_cast<int>(r);
  const auto pair = extra_fibre_pair(x);
  if (!pair) {
    if (locus == Locus::Special) {
      out.push_back(make(ri, "zero", {r, 0, 0}, Gluing::NormalCrossing, false, Locus::Special));
    } else {
      out.push_back(make(ri, "zero", {r, 1, 0}, Gluing::AllDisjoint, x.Q == 1 || x.p == 1, Locus::Generic));
    }
    return out;
  }
  const auto [a, k] = *pair;
  // Only the generic shapes are documented here; other loci are flagged.
  const Locus tagged = locus == Locus::Generic ? Locus::Generic : Locus::Unknown;
  auto rth = a > 1 ? make(ri, "zero", {r, 1}, Gluing::AllDisjoint, true, tagged)
                   : make(ri, "zero", {r - 1, 1}, Gluing::NormalCrossing, true, tagged);
  auto extra = k > 1 ? make(ri + 1, "extra", {r + 1, 0}, Gluing::AllDisjoint, true, tagged)
                     : make(ri + 1, "extra", {r, 0}, Gluing::NormalCrossing, true, tagged);
  if (tagged == Locus::Unknown) {
    rth.warnings.push_back("no rule for the special locus when P = 1 or q = 1; generic shape shown");
    extra.warnings.push_back("no rule for the special locus when P = 1 or q = 1; generic shape shown");
  }
  out.push_back(std::move(rth));
  out.push_back(std::move(extra));
  return out;
}

std::vector<FibreTopology> classify_irregular_fibres(const FamilyInstance& inst, Locus locus) {
  auto out = classify_irregular_fibres(inst.params, locus);
  const auto iv = irregular_values(inst);
  for (auto& f : out) {
    if (f.value_tag == "zero") {
      f.value = BigRational(0);
    } else if (f.value_tag == "extra") {
      f.value = iv.extra;
    } else {
      f.value = inst.betas.at(static_cast<std::size_t>(f.index - 1));
    }
    if (iv.non_generic) f.warnings.push_back("non-generic instance: irregular values coincide or alpha_0 = 0");
  }
  return out;
}

bool suzuki_check(const SimpleTypeParams& x, Locus locus) {
  std::int64_t sum = 0;
  for (const auto& f : classify_irregular_fibres(x, locus)) sum += static_cast<std::int64_t>(f.components.size()) - 1;
  return sum == (x.r() + 2) - 1;
}

bool euler_check(const SimpleTypeParams& x, Locus locus) {
  const auto fibres = classify_irregular_fibres(x, locus);
  const std::int64_t chi_regular = 1 - (x.r() + 1);
  std::int64_t total = chi_regular * (1 - static_cast<std::int64_t>(fibres.size()));
  for (const auto& f : fibres) total += f.euler_characteristic();
  return total == 1;
}

}  // namespace splicekit
