#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "acdkit/character.hpp"
#include "acdkit/restricted.hpp"
#include "json.hpp"

namespace acdkit {

/// Frobenius group C_h |x F_p^a: closed form against the table.
struct FrobeniusCheck {
  std::string spec;
  std::uint64_t p = 0, h = 0;
  unsigned a = 0;
  FieldSpec requested;
  FieldSpec field;  // requested field with the p-th roots adjoined
  std::uint64_t t = 0;
  std::uint64_t l = 0;  // gcd(t, h)
  std::uint64_t linear_in_k = 0;
  Rational formula;
  Rational table_acd;         // acd_k
  Rational table_acd_pprime;  // acd_{k,p'}
  bool formula_matches = false;
  bool pprime_matches = false;
  bool l_matches = false;  // gcd(t, h) equals the number of k-valued linear characters
  int bound_item = 0;      // 1..5, 0 when p = 3
  Rational bound;
  bool bound_holds = true;

  bool ok() const { return formula_matches && pprime_matches && l_matches && bound_holds; }
  nlohmann::json to_json() const;
};

/// Pass the table of frobenius_cyclic(p, a, h) to avoid recomputing it.
FrobeniusCheck check_frobenius_formula(std::uint64_t p, unsigned a, std::uint64_t h, const FieldSpec& k,
                                       const CharacterTable* table = nullptr);

/// One row of the p = 3 investigation.
struct Lemma32Row {
  unsigned a = 0;
  std::uint64_t h = 0;
  FieldSpec field;
  std::uint64_t l = 0;
  bool a_k_trivial = false;  // A^k(H) = 1
  Rational acd;              // from the table
  Rational formula;
  Rational claimed;          // 13/5 when A^k(H) = 1 and h = 13, else 182/61
  bool below_182_61 = false;
  bool below_13_5 = false;
  bool finding = false;      // acd below the claimed bound
  bool p_nilpotent = false;

  nlohmann::json to_json() const;
};

/// All frobenius_cyclic(3, a, h) with a <= max_a, for k = Q(zeta_3) and for
/// k = Q(zeta_3h) (every root of unity of order dividing |H|).
std::vector<Lemma32Row> lemma_3_2_investigation(unsigned max_a = 5);

struct Lemma41Report {
  std::string spec;
  std::uint64_t p = 0;
  std::vector<std::uint64_t> lengths;  // sorted
  std::vector<std::uint64_t> coprime_lengths;
  bool sum_ok = false;
  bool all_at_least_7 = false;
  bool coprime_exists = false;
  bool refinement = false;        // two coprime orbits of length 7, or one of length >= 9 (>= 11 when p = 3)
  bool not_single_seven = false;  // not exactly one coprime orbit, of length 7
  bool core_free = false;
  bool conventions_agree = false;

  bool ok() const { return sum_ok && all_at_least_7 && coprime_exists && refinement && not_single_seven && core_free && conventions_agree; }
  nlohmann::json to_json() const;
};

Lemma41Report check_lemma_4_1(const FiniteGroup& g);

struct Lemma42Report {
  std::string spec;
  std::uint64_t p = 0;
  FieldSpec field;
  std::uint64_t irr_count = 0;    // |Irr_{k,p'}(G)| by direct filtering
  std::uint64_t h_index = 0;      // |H : A^k(H)|
  std::uint64_t nl_count = 0;     // |nl_{k,p'}(H)|
  struct OrbitTerm {
    std::size_t orbit = 0;
    std::uint64_t length = 0;
    std::uint64_t stabilizer_count = 0;  // |Irr_{k,p'}(T_i)|
    std::uint64_t table_count = 0;       // rows of G over this orbit passing the filter
  };
  std::vector<OrbitTerm> terms;   // orbits of length prime to p
  std::uint64_t rhs_count = 0;
  bool identity_holds = false;
  bool bookkeeping_holds = false;
  std::uint64_t nl_factor = 0;    // 3, or 5 when p = 3
  std::uint64_t degree_sum = 0;
  std::uint64_t degree_rhs = 0;
  bool inequality_holds = false;

  bool ok() const { return identity_holds && bookkeeping_holds && inequality_holds; }
  nlohmann::json to_json() const;
};

/// Requires an affine group with nonabelian H; computes the Clifford table when none is given.
Lemma42Report check_lemma_4_counts(const FiniteGroup& g, const FieldSpec& k, std::uint64_t p, const CharacterTable* table = nullptr);

struct Lemma43Report {
  std::string spec;
  std::uint64_t p = 0;
  FieldSpec field;
  Rational value;  // acd_{k,p'}(G)
  Rational bound;  // 3, or 81/17 when p = 3
  bool holds = false;

  nlohmann::json to_json() const;
};

Lemma43Report check_lemma_4_3(const FiniteGroup& g, const FieldSpec& k, std::uint64_t p, const CharacterTable* table = nullptr);

}  // namespace acdkit
