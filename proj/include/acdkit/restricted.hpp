#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "acdkit/character.hpp"
#include "json.hpp"

namespace acdkit {

/// Lcm of the orders of the roots of unity in k whose order divides |G|:
/// gcd(|G|, lcm(2, m)) for Q(zeta_m) and |G| for C.
std::uint64_t compute_t(std::uint64_t group_order, const FieldSpec& k);

/// k(zeta_p): Q(zeta_lcm(m, p)), or C for C.
FieldSpec adjoin_pth_roots(const FieldSpec& k, std::uint64_t p);

/// Which irreducible characters to keep: degree prime to p, values in k.
struct RestrictedSelection {
  std::optional<std::uint64_t> p;
  std::optional<FieldSpec> field;

  std::string str() const;
};

/// Rows kept by the selection, in table order. Row 0 (principal) always passes.
std::vector<std::size_t> select(const CharacterTable& t, const RestrictedSelection& sel);

struct AcdReport {
  std::string group;
  std::uint64_t order = 0;
  RestrictedSelection selection;
  std::size_t count = 0;
  Rational degree_sum;
  Rational average;
  std::uint64_t t = 0;
  std::optional<std::uint64_t> l;           // gcd(t, |H|) when G is affine with abelian H
  std::optional<bool> p_nilpotent;          // when a prime is selected
};

AcdReport acd(const CharacterTable& t, const RestrictedSelection& sel);
nlohmann::json to_json(const AcdReport& r);

/// h (l + p^a - 1) / (h l + p^a - 1), the k-average of the Frobenius group
/// C_h |x F_p^a with l = |H : A^k(H)|.
Rational frobenius_acd_formula(std::uint64_t h, std::uint64_t p, unsigned a, std::uint64_t l);

/// Intersection of the kernels of the k-valued linear characters.
Subgroup A_k(const CharacterTable& t, const FieldSpec& k);
/// Intersection of the kernels of the linear characters of order dividing p.
Subgroup A_p(const CharacterTable& t, std::uint64_t p);
/// G' G^p, computed from the group alone.
Subgroup A_p_direct(const FiniteGroup& g, std::uint64_t p);

struct CheckItem {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct CheckReport {
  bool ok = true;
  std::vector<CheckItem> items;

  void add(std::string name, bool ok, std::string detail = {});
  nlohmann::json to_json() const;
};

/// A^C = G', A^Q = A^2 (= G for odd order), A^{Q(zeta_p)} = A^2 cap A^p
/// for each odd prime in `primes` (default: primes dividing |G|), and
/// |G : A^k| equal to the number of k-valued linear characters.
CheckReport identity_checks(const CharacterTable& t, std::vector<std::uint64_t> primes = {});

/// Minimal normal subgroups of g (normal closures of single elements that
/// contain no smaller nontrivial normal closure).
std::vector<Subgroup> minimal_normal_subgroups(const FiniteGroup& g, const ConjugacyClassSet& classes);

/// For each minimal normal K with K cap G' = 1: when acd_sel(G) <= 3, checks
/// acd_sel(G/K) <= acd_sel(G).
CheckReport quotient_monotonicity_check(const CharacterTable& t, const RestrictedSelection& sel);

}  // namespace acdkit
