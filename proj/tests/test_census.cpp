#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "acdkit/census.hpp"
#include "acdkit/group_spec.hpp"

using namespace acdkit;

namespace {

std::string csv_of(const std::vector<CensusRow>& rows) {
  std::ostringstream os;
  write_csv(os, rows);
  return os.str();
}

const CensusRow* find_row(const CensusResult& r, const std::string& spec, std::uint64_t p, const std::string& field, const std::string& metric) {
  for (const auto& row : r.rows)
    if (row.spec == spec && row.p == p && row.field == field && row.metric == metric) return &row;
  return nullptr;
}

}  // namespace

TEST_CASE("manifest parsing") {
  std::istringstream in("# corpus\nfrob:7,1,3\n\n  cyclic:9   # trailing\r\n\t\nelab:3^2\n");
  auto specs = read_manifest(in);
  CHECK(specs == std::vector<std::string>{"frob:7,1,3", "cyclic:9", "elab:3^2"});
}

TEST_CASE("empty corpus") {
  auto r = run_census({}, {});
  CHECK(r.rows.empty());
  CHECK(csv_of(r.rows) == "groupSpec,order,p,field,case,metric,threshold,acd,below,pNilpotent,verdict,error\n");
}

TEST_CASE("default corpus contents") {
  auto specs = frobenius_specs(2523);
  CHECK(specs.front() == "frob:7,1,3");
  for (const auto& s : specs) CHECK(parse_group_spec(s).order() <= 2523);
  auto corpus = default_corpus();
  CHECK(corpus.size() == specs.size() + filler_specs().size() + 2);
  for (const char* needed : {"frob:5,2,3", "frob:11,1,5", "frob:13,1,3", "frob:3,3,13", "frob:23,1,11"})
    CHECK(std::find(corpus.begin(), corpus.end(), needed) != corpus.end());
}

TEST_CASE("families attaining the thresholds") {
  CensusOptions opts;
  auto r = run_census({"frob:7,1,3", "frob:5,2,3", "frob:11,1,5", "frob:13,1,3", "frob:3,3,13"}, opts);
  CHECK(r.errors == 0);
  CHECK(r.discrepancies == 0);
  struct Expect {
    const char* spec;
    std::uint64_t p;
    const char* field;
    Rational value;
  };
  for (const auto& e : std::vector<Expect>{{"frob:7,1,3", 7, "7", Rational(7, 3)},
                                           {"frob:7,1,3", 7, "21", Rational(9, 5)},
                                           {"frob:5,2,3", 5, "5", Rational(25, 9)},
                                           {"frob:5,2,3", 5, "15", Rational(27, 11)},
                                           {"frob:11,1,5", 11, "full", Rational(15, 7)},
                                           {"frob:13,1,3", 13, "13", Rational(13, 5)},
                                           {"frob:13,1,3", 13, "39", Rational(15, 7)}}) {
    for (const char* metric : {"acd_k", "acd_kp'"}) {
      const auto* row = find_row(r, e.spec, e.p, e.field, metric);
      REQUIRE_MESSAGE(row, e.spec, " ", e.field);
      CHECK(row->acd == e.value);
      CHECK(row->threshold == e.value);
      CHECK(row->verdict == Verdict::Tight);
    }
  }
  const auto* row3 = find_row(r, "frob:3,3,13", 3, "39", "acd_k3'");
  REQUIRE(row3);
  CHECK(row3->acd == Rational(13, 5));
  CHECK(row3->verdict == Verdict::Tight);
  CHECK(row3->case_name == "T5.1-6");
}

TEST_CASE("p-nilpotent groups are never discrepancies") {
  auto r = run_census({"cyclic:45", "prod:cyclic:3*frob:7,1,3"}, {});
  CHECK(r.discrepancies == 0);
  for (const auto& row : r.rows) {
    if (row.spec == "cyclic:45") {
      CHECK(row.p_nilpotent);
      CHECK(row.acd == Rational(1));
      CHECK(row.below);
    }
  }
}

TEST_CASE("determinism across thread counts") {
  std::vector<std::string> specs{"frob:7,1,3", "cyclic:15", "frob:5,2,3", "elab:3^3", "frob:13,1,3", "affine:3,2,gens=1 1;0 1", "frob:11,1,5"};
  CensusOptions one, two;
  one.jobs = 1;
  two.jobs = 2;
  CHECK(csv_of(run_census(specs, one).rows) == csv_of(run_census(specs, two).rows));
  one.engine.seed = 99;
  CHECK(csv_of(run_census(specs, one).rows) == csv_of(run_census(specs, two).rows));
}

TEST_CASE("bad inputs become error rows") {
  auto r = run_census({"cyclic:6", "frob:7,1,3", "bogus:1"}, {});
  CHECK(r.errors == 2);
  CHECK(r.rows.front().spec == "cyclic:6");
  CHECK(r.rows.front().error.find("even") != std::string::npos);
  auto csv = csv_of(r.rows);
  CHECK(csv.find("cyclic:6,6,,,,,,,,,,even order 6 rejected\n") != std::string::npos);
  CensusOptions bad;
  bad.primes = {9};
  CHECK_THROWS(run_census({"cyclic:3"}, bad));
  bad.primes = {3};
  bad.fields = {"x"};
  CHECK_THROWS(run_census({"cyclic:3"}, bad));
}

TEST_CASE("the p = 3 family below the stated bound") {
  CensusOptions opts;
  opts.primes = {3};
  opts.fields = {"363"};
  auto r = run_census({"frob:3,5,121"}, opts);
  REQUIRE(r.rows.size() == 1);
  CHECK(r.discrepancies == 1);
  const auto& row = r.rows[0];
  CHECK(row.acd == Rational(1331, 451));
  CHECK(row.threshold == Rational(182, 61));
  CHECK(row.verdict == Verdict::Discrepancy);
  CHECK_FALSE(row.p_nilpotent);
  CHECK(csv_of(r.rows).find("182/61,121/41,true,false,DISCREPANCY") != std::string::npos);
}

TEST_CASE("normal p-complements when the p'-average is one") {
  for (const char* spec : {"cyclic:45", "frob:7,1,3", "prod:cyclic:3*frob:7,1,3", "elab:5^2", "frob:5,2,3"}) {
    auto t = character_table(parse_group_spec(spec));
    for (std::uint64_t p : {3, 5, 7}) {
      auto c = thompson_check(t, p);
      CHECK_MESSAGE(c.ok(), spec, " p=", p);
    }
  }
  auto f21 = character_table(parse_group_spec("frob:7,1,3"));
  auto c = thompson_check(f21, 3);
  CHECK(c.trivial_average);
  CHECK(c.has_complement);
  CHECK(c.witness_verified);
  auto c7 = thompson_check(f21, 7);
  CHECK_FALSE(c7.trivial_average);
  CHECK(c7.acd_pprime == Rational(9, 5));
  CHECK_FALSE(c7.has_complement);
}
