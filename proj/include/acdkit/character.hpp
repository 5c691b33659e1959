#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "acdkit/constructions.hpp"
#include "acdkit/cyclotomic.hpp"
#include "acdkit/group.hpp"

namespace acdkit {

enum class TableProvenance { Generic, Clifford };

const char* to_string(TableProvenance p);

struct Character {
  std::int64_t degree = 0;
  std::vector<CyclotomicNumber> values;  // one per conjugacy class
};

struct CharacterTable;

/// Where a Clifford-table row came from.
struct CliffordOrigin {
  int orbit = -1;             // -1: inflated from H
  std::size_t source = 0;     // row of the H table, or of the stabilizer table
};

/// Bookkeeping kept by the Clifford engine.
struct CliffordData {
  OrbitAnalysis orbits;
  std::shared_ptr<const CharacterTable> h_table;
  std::vector<std::shared_ptr<const CharacterTable>> stabilizer_tables;  // per orbit
  std::vector<std::vector<Element>> stabilizer_embeddings;              // local index -> H index
  std::vector<CliffordOrigin> origins;                                  // per row of the table
};

/// Irreducible characters of a finite group. Rows are sorted by degree and
/// then lexicographically by the rendering of their values; columns follow
/// the order of `classes`.
struct CharacterTable {
  FiniteGroup group;
  ConjugacyClassSet classes;
  std::vector<Character> characters;
  TableProvenance provenance = TableProvenance::Generic;
  std::shared_ptr<const CliffordData> clifford;

  std::size_t size() const { return characters.size(); }
};

/// Thrown when no suitable prime modulus exists for the modular engine.
struct ModulusSelectionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GenericOptions {
  std::uint64_t seed = 0x5eed5eedULL;
  bool abelian_shortcut = true;
};

/// Modular class-matrix method (Burnside-Dixon) for groups of order <= 4096.
CharacterTable generic_table(const FiniteGroup& g, const GenericOptions& opts = {});
/// Clifford theory over V for affine groups H |x V.
CharacterTable clifford_table(const FiniteGroup& g, const GenericOptions& opts = {});
/// Clifford engine for affine groups, generic engine otherwise.
CharacterTable character_table(const FiniteGroup& g, const GenericOptions& opts = {});

/// (1/|G|) sum |C| chi(C) conj(psi(C)), computed exactly.
Rational inner_product(const CharacterTable& t, const Character& chi, const Character& psi);
Subgroup kernel_of(const CharacterTable& t, const Character& chi);

/// All values of row i lie in k (conductor test).
bool character_in_field(const CharacterTable& t, std::size_t i, const FieldSpec& k);
/// Same question answered through power maps: chi(g^j) = chi(g) for the
/// Galois elements fixing k inside Q(zeta_e).
bool character_in_field_galois(const CharacterTable& t, std::size_t i, const FieldSpec& k);

struct TableCheck {
  bool ok = true;
  std::string orthogonality_method;
  std::vector<std::string> failures;
};

/// Exact consistency checks: squareness, degree sum, Galois stability, row
/// orthogonality (exactly for small tables, otherwise through one large
/// prime after Galois stability has made each inner product a rational
/// integer) and column orthogonality.
TableCheck verify_table(const CharacterTable& t);

/// Same classes and the same rows.
bool tables_agree(const CharacterTable& a, const CharacterTable& b, std::string* why = nullptr);

namespace detail {
/// Characteristic polynomial of a square matrix over F_q (Hessenberg method), low to high.
std::vector<std::uint64_t> charpoly_mod(std::vector<std::vector<std::uint64_t>> a, std::uint64_t q);
/// Basis of the null space of a over F_q.
std::vector<std::vector<std::uint64_t>> nullspace_mod(std::vector<std::vector<std::uint64_t>> a, std::uint64_t q);
/// Smallest prime q = 1 mod e with q > lower_bound.
std::uint64_t prime_one_mod(std::uint64_t e, std::uint64_t lower_bound);
void sort_characters(CharacterTable& t, std::vector<std::size_t>* permutation = nullptr);
}  // namespace detail

}  // namespace acdkit
