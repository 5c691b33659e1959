#include "acdkit/restricted.hpp"

#include <algorithm>
#include <stdexcept>

#include "acdkit/numtheory.hpp"

namespace acdkit {

std::uint64_t compute_t(std::uint64_t group_order, const FieldSpec& k) {
  if (k.is_full()) return group_order;
  return gcd_u64(group_order, k.root_order());
}

FieldSpec adjoin_pth_roots(const FieldSpec& k, std::uint64_t p) {
  if (k.is_full()) return k;
  return FieldSpec::cyclotomic(lcm_u64(k.m, p));
}

std::string RestrictedSelection::str() const {
  std::string s;
  if (p) s += "p=" + std::to_string(*p);
  if (field) s += std::string(s.empty() ? "" : ",") + "k=" + field->str();
  return s.empty() ? "all" : s;
}

std::vector<std::size_t> select(const CharacterTable& t, const RestrictedSelection& sel) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i != 0) {
      if (sel.p && t.characters[i].degree % static_cast<std::int64_t>(*sel.p) == 0) continue;
      if (sel.field && !character_in_field(t, i, *sel.field)) continue;
    }
    out.push_back(i);
  }
  return out;
}

AcdReport acd(const CharacterTable& t, const RestrictedSelection& sel) {
  AcdReport r;
  r.group = t.group.name();
  r.order = t.group.order();
  r.selection = sel;
  auto rows = select(t, sel);
  r.count = rows.size();
  std::int64_t sum = 0;
  for (auto i : rows) sum += t.characters[i].degree;
  r.degree_sum = Rational(sum);
  r.average = Rational(sum, static_cast<std::int64_t>(rows.size()));
  r.t = compute_t(r.order, sel.field.value_or(FieldSpec::full()));
  if (t.group.affine() && is_abelian(t.group.affine_h())) r.l = gcd_u64(r.t, t.group.affine()->h_order());
  if (sel.p) r.p_nilpotent = has_normal_p_complement(t.group, t.classes, *sel.p).has_value();
  return r;
}

nlohmann::json to_json(const AcdReport& r) {
  nlohmann::json j;
  j["group"] = r.group;
  j["order"] = r.order;
  j["p"] = r.selection.p ? nlohmann::json(*r.selection.p) : nlohmann::json(nullptr);
  j["field"] = r.selection.field ? r.selection.field->str() : std::string("full");
  j["t"] = r.t;
  if (r.l) j["l"] = *r.l;
  j["count"] = r.count;
  j["degreeSum"] = r.degree_sum.str();
  j["acd"] = r.average.fraction_str();
  j["pNilpotent"] = r.p_nilpotent ? nlohmann::json(*r.p_nilpotent) : nlohmann::json(nullptr);
  return j;
}

Rational frobenius_acd_formula(std::uint64_t h, std::uint64_t p, unsigned a, std::uint64_t l) {
  const std::uint64_t q = ipow(p, a);
  if (h % 2 == 0 || (q - 1) % h != 0) throw std::invalid_argument("frobenius_acd_formula: need h odd with h | p^a - 1");
  if (l < 1 || l > h || h % l != 0) throw std::invalid_argument("frobenius_acd_formula: need l | h");
  Rational num = Rational(static_cast<std::int64_t>(h)) * Rational(static_cast<std::int64_t>(l + q - 1));
  Rational den = Rational(static_cast<std::int64_t>(h)) * Rational(static_cast<std::int64_t>(l)) + Rational(static_cast<std::int64_t>(q - 1));
  return num / den;
}

namespace {

Subgroup kernel_intersection(const CharacterTable& t, const std::vector<std::size_t>& rows) {
  std::vector<char> keep(t.classes.count(), 1);
  for (auto i : rows)
    for (std::size_t c = 0; c < t.classes.count(); ++c)
      if (!(t.characters[i].values[c] == CyclotomicNumber(1))) keep[c] = 0;
  Subgroup s;
  for (Element x = 0; x < t.group.order(); ++x)
    if (keep[t.classes.class_of[x]]) s.elements.push_back(x);
  return s;
}

// chi^p = 1 for a linear character chi.
bool order_divides(const Character& chi, std::uint64_t p) {
  for (const auto& v : chi.values) {
    CyclotomicNumber w(1);
    for (std::uint64_t k = 0; k < p; ++k) w *= v;
    if (!(w == CyclotomicNumber(1))) return false;
  }
  return true;
}

}  // namespace

Subgroup A_k(const CharacterTable& t, const FieldSpec& k) {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t.characters[i].degree == 1 && character_in_field(t, i, k)) rows.push_back(i);
  return kernel_intersection(t, rows);
}

Subgroup A_p(const CharacterTable& t, std::uint64_t p) {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t.characters[i].degree == 1 && order_divides(t.characters[i], p)) rows.push_back(i);
  return kernel_intersection(t, rows);
}

Subgroup A_p_direct(const FiniteGroup& g, std::uint64_t p) {
  auto gens = derived_subgroup(g).elements;
  for (Element x = 0; x < g.order(); ++x) gens.push_back(g.pow(x, static_cast<std::int64_t>(p)));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return normal_closure(g, gens);
}

void CheckReport::add(std::string name, bool item_ok, std::string detail) {
  ok = ok && item_ok;
  items.push_back({std::move(name), item_ok, std::move(detail)});
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j;
  j["ok"] = ok;
  j["items"] = nlohmann::json::array();
  for (const auto& it : items) j["items"].push_back({{"name", it.name}, {"ok", it.ok}, {"detail", it.detail}});
  return j;
}

namespace {

std::string witness(const Subgroup& a, const Subgroup& b) {
  std::string s = "orders " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
  for (auto x : a.elements)
    if (!b.contains(x)) return s + ", element " + std::to_string(x) + " only in the first";
  for (auto x : b.elements)
    if (!a.contains(x)) return s + ", element " + std::to_string(x) + " only in the second";
  return s;
}

}  // namespace

CheckReport identity_checks(const CharacterTable& t, std::vector<std::uint64_t> primes) {
  CheckReport rep;
  const FiniteGroup& g = t.group;
  if (primes.empty())
    for (auto p : prime_divisors(g.order()))
      if (p != 2) primes.push_back(p);

  auto derived = derived_subgroup(g);
  auto a_full = A_k(t, FieldSpec::full());
  rep.add("A^C = G'", a_full == derived, witness(a_full, derived));

  auto a2 = A_p_direct(g, 2);
  auto a_q = A_k(t, FieldSpec::cyclotomic(1));
  rep.add("A^Q = A^2", a_q == a2, witness(a_q, a2));

  for (auto p : primes) {
    auto direct = A_p_direct(g, p);
    auto via_table = A_p(t, p);
    rep.add("A^" + std::to_string(p) + " from kernels = G'G^" + std::to_string(p), via_table == direct, witness(via_table, direct));
    auto a_qp = A_k(t, FieldSpec::cyclotomic(p));
    auto expect = intersect(a2, direct);
    rep.add("A^Q(zeta_" + std::to_string(p) + ") = A^2 cap A^" + std::to_string(p), a_qp == expect, witness(a_qp, expect));
  }

  std::vector<FieldSpec> fields{FieldSpec::full(), FieldSpec::cyclotomic(1)};
  for (auto p : primes) fields.push_back(FieldSpec::cyclotomic(p));
  for (const auto& k : fields) {
    std::size_t linear = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t.characters[i].degree == 1 && character_in_field(t, i, k)) ++linear;
    auto a = A_k(t, k);
    bool ok = g.order() % a.size() == 0 && g.order() / a.size() == linear && is_normal(g, a) &&
              std::includes(a.elements.begin(), a.elements.end(), derived.elements.begin(), derived.elements.end());
    rep.add("|G:A^k| = #linear k-valued, k=" + k.str(), ok,
            "index " + std::to_string(g.order() / std::max<std::uint64_t>(1, a.size())) + ", linear " + std::to_string(linear));
  }
  return rep;
}

std::vector<Subgroup> minimal_normal_subgroups(const FiniteGroup& g, const ConjugacyClassSet& classes) {
  std::vector<Subgroup> closures;
  for (std::size_t c = 1; c < classes.count(); ++c) {
    auto n = normal_closure(g, {classes.representatives[c]});
    if (std::find(closures.begin(), closures.end(), n) == closures.end()) closures.push_back(std::move(n));
  }
  std::vector<Subgroup> out;
  for (const auto& n : closures) {
    bool minimal = true;
    for (const auto& m : closures)
      if (m.size() < n.size() && std::includes(n.elements.begin(), n.elements.end(), m.elements.begin(), m.elements.end())) minimal = false;
    if (minimal) out.push_back(n);
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) { return a.elements < b.elements; });
  return out;
}

CheckReport quotient_monotonicity_check(const CharacterTable& t, const RestrictedSelection& sel) {
  CheckReport rep;
  const FiniteGroup& g = t.group;
  auto derived = derived_subgroup(g);
  Rational whole = acd(t, sel).average;
  for (const auto& k : minimal_normal_subgroups(g, t.classes)) {
    if (intersect(k, derived).size() != 1) continue;
    std::string name = "K of order " + std::to_string(k.size()) + " (contains " + std::to_string(k.elements[1]) + ")";
    if (whole > Rational(3)) {
      rep.add(name, true, "hypothesis acd <= 3 fails (acd " + whole.fraction_str() + "); not applicable");
      continue;
    }
    auto q = quotient(g, k);
    auto qt = character_table(q.group);
    Rational part = acd(qt, sel).average;
    rep.add(name, part <= whole, "acd(G/K) = " + part.fraction_str() + ", acd(G) = " + whole.fraction_str());
  }
  return rep;
}

}  // namespace acdkit
