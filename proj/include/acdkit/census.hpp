#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "acdkit/bounds.hpp"
#include "acdkit/character.hpp"

namespace acdkit {

/// Every valid frob:p,a,h of order <= max_order, by order then spec.
std::vector<std::string> frobenius_specs(std::uint64_t max_order);
/// Odd-order abelian groups, direct products and non-Frobenius affine groups.
std::vector<std::string> filler_specs();
/// frobenius_specs(max_order) + filler_specs(), plus the curated nonabelian instances when asked.
std::vector<std::string> default_corpus(std::uint64_t max_order = 2523, bool include_nonabelian = true);

/// One group spec per line; blank lines and '#' comments are ignored.
std::vector<std::string> read_manifest(std::istream& in);

struct CensusOptions {
  std::vector<std::uint64_t> primes{3, 5, 7, 11, 13};
  /// Integers, "p" (the prime of the row) or "full".
  std::vector<std::string> fields{"1", "3", "13", "39", "p", "full"};
  unsigned jobs = 1;
  GenericOptions engine;
};

enum class Verdict { Consistent, Tight, Discrepancy };
const char* to_string(Verdict v);

struct CensusRow {
  std::string spec;
  std::uint64_t order = 0;
  std::uint64_t p = 0;
  std::string field;  // effective field: the requested one with zeta_p adjoined
  std::string case_name;
  std::string metric;
  Rational threshold;
  Rational acd;
  bool below = false;
  bool p_nilpotent = false;
  Verdict verdict = Verdict::Consistent;
  std::string error;
};

struct CensusResult {
  std::vector<CensusRow> rows;
  std::size_t discrepancies = 0;
  std::size_t tight = 0;
  std::size_t errors = 0;
};

/// Throws std::invalid_argument for a malformed field token or an even prime.
CensusResult run_census(const std::vector<std::string>& specs, const CensusOptions& opts);

void write_csv(std::ostream& out, const std::vector<CensusRow>& rows);

/// acd_{p'}(G) = 1 forces a normal p-complement; the witness is checked.
struct ThompsonCheck {
  std::uint64_t p = 0;
  Rational acd_pprime;
  bool trivial_average = false;  // acd_{p'} = 1
  bool has_complement = false;
  bool witness_verified = false;  // normal subgroup of order the p'-part of |G|

  bool ok() const { return !trivial_average || (has_complement && witness_verified); }
};

ThompsonCheck thompson_check(const CharacterTable& t, std::uint64_t p);

}  // namespace acdkit
