#include "acdkit/census.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <ostream>
#include <set>
#include <stdexcept>
#include <thread>

#include "acdkit/constructions.hpp"
#include "acdkit/group_spec.hpp"
#include "acdkit/numtheory.hpp"
#include "acdkit/restricted.hpp"

namespace acdkit {

std::vector<std::string> frobenius_specs(std::uint64_t max_order) {
  std::vector<std::pair<std::uint64_t, std::string>> found;
  for (std::uint64_t p = 3; 3 * p <= max_order; p += 2) {
    if (!is_prime(p)) continue;
    for (unsigned a = 1;; ++a) {
      const std::uint64_t q = ipow(p, a);
      if (3 * q > max_order) break;
      for (auto h : divisors(q - 1)) {
        if (h * q > max_order) break;
        if (!frobenius_params_valid(p, a, h)) continue;
        found.emplace_back(h * q, "frob:" + std::to_string(p) + "," + std::to_string(a) + "," + std::to_string(h));
      }
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<std::string> out;
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

std::vector<std::string> filler_specs() {
  return {
      "cyclic:1",
      "cyclic:9",
      "cyclic:15",
      "cyclic:21",
      "cyclic:45",
      "cyclic:105",
      "cyclic:243",
      "elab:3^3",
      "elab:5^2",
      "elab:7^2",
      "elab:3^5",
      "prod:cyclic:3*cyclic:9",
      "prod:cyclic:5*elab:3^2",
      "prod:cyclic:3*frob:7,1,3",
      "prod:cyclic:5*frob:7,1,3",
      "prod:frob:7,1,3*cyclic:7",
      "prod:frob:5,2,3*cyclic:3",
      "prod:frob:7,1,3*frob:7,1,3",
      "prod:frob:11,1,5*cyclic:3",
      "prod:frob:13,1,3*cyclic:5",
      "affine:3,2,gens=1 1;0 1",
      "affine:7,2,gens=2 0;0 1",
      "affine:7,2,gens=2 0;0 4",
      "affine:13,2,gens=3 0;0 1",
      "affine:5,3,gens=0 1 0;0 0 1;1 0 0",
      "affine:7,3,gens=0 1 0;0 0 1;1 0 0",
      "affine:3,3,gens=1 1 0;0 1 1;0 0 1",
  };
}

std::vector<std::string> default_corpus(std::uint64_t max_order, bool include_nonabelian) {
  auto out = frobenius_specs(max_order);
  for (auto& s : filler_specs()) out.push_back(std::move(s));
  if (include_nonabelian) {
    out.push_back("nonab:3");
    out.push_back("nonab:5");
  }
  return out;
}

std::vector<std::string> read_manifest(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(b, e - b + 1));
  }
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Tight: return "TIGHT";
    case Verdict::Discrepancy: return "DISCREPANCY";
    default: return "consistent";
  }
}

namespace {

FieldSpec field_for(const std::string& token, std::uint64_t p) {
  if (token == "p") return FieldSpec::cyclotomic(p);
  return FieldSpec::parse(token);
}

std::vector<CensusRow> census_group(const std::string& spec, const CensusOptions& opts) {
  std::vector<CensusRow> rows;
  CensusRow base;
  base.spec = spec;
  try {
    auto g = parse_group_spec(spec);
    base.order = g.order();
    if (g.order() % 2 == 0) throw std::invalid_argument("even order " + std::to_string(g.order()) + " rejected");
    auto table = character_table(g, opts.engine);
    for (auto p : opts.primes) {
      const bool nilpotent = has_normal_p_complement(g, table.classes, p).has_value();
      std::vector<FieldSpec> seen;
      for (const auto& token : opts.fields) {
        FieldSpec k = adjoin_pth_roots(field_for(token, p), p);
        if (std::find(seen.begin(), seen.end(), k) != seen.end()) continue;
        seen.push_back(k);
        for (const auto& c : classify(p, k)) {
          std::vector<std::pair<std::string, RestrictedSelection>> metrics;
          if (c.metric == Metric::AcdK) {
            metrics.push_back({"acd_k", {std::nullopt, k}});
            metrics.push_back({"acd_kp'", {p, k}});
          } else {
            metrics.push_back({"acd_k3'", {3, k}});
          }
          for (const auto& [name, sel] : metrics) {
            CensusRow r = base;
            r.p = p;
            r.field = k.str();
            r.case_name = c.name();
            r.metric = name;
            r.threshold = c.threshold;
            r.acd = acd(table, sel).average;
            r.below = r.acd < r.threshold;
            r.p_nilpotent = nilpotent;
            r.verdict = r.below && !nilpotent ? Verdict::Discrepancy : r.acd == r.threshold ? Verdict::Tight : Verdict::Consistent;
            rows.push_back(std::move(r));
          }
        }
      }
    }
  } catch (const std::exception& e) {
    CensusRow r = base;
    r.error = e.what();
    rows.clear();
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

CensusResult run_census(const std::vector<std::string>& specs, const CensusOptions& opts) {
  for (auto p : opts.primes)
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("census: " + std::to_string(p) + " is not an odd prime");
  for (const auto& token : opts.fields) field_for(token, 3);

  std::vector<std::vector<CensusRow>> per_group(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < specs.size();) per_group[i] = census_group(specs[i], opts);
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(std::max<std::size_t>(1, specs.size()))));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  CensusResult res;
  for (auto& rows : per_group)
    for (auto& r : rows) {
      if (!r.error.empty()) ++res.errors;
      else if (r.verdict == Verdict::Discrepancy) ++res.discrepancies;
      else if (r.verdict == Verdict::Tight) ++res.tight;
      res.rows.push_back(std::move(r));
    }
  return res;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<CensusRow>& rows) {
  out << "groupSpec,order,p,field,case,metric,threshold,acd,below,pNilpotent,verdict,error\n";
  for (const auto& r : rows) {
    out << csv_field(r.spec) << ',' << r.order << ',';
    if (!r.error.empty()) {
      out << ",,,,,,,,," << csv_field(r.error) << '\n';
      continue;
    }
    out << r.p << ',' << r.field << ',' << r.case_name << ',' << csv_field(r.metric) << ',' << r.threshold.fraction_str() << ','
        << r.acd.fraction_str() << ',' << (r.below ? "true" : "false") << ',' << (r.p_nilpotent ? "true" : "false") << ','
        << to_string(r.verdict) << ",\n";
  }
}

ThompsonCheck thompson_check(const CharacterTable& t, std::uint64_t p) {
  ThompsonCheck c;
  c.p = p;
  c.acd_pprime = acd(t, {p, std::nullopt}).average;
  c.trivial_average = c.acd_pprime == Rational(1);
  auto w = has_normal_p_complement(t.group, t.classes, p);
  c.has_complement = w.has_value();
  if (w) c.witness_verified = w->size() == coprime_part(t.group.order(), p) && is_subgroup(t.group, *w) && is_normal(t.group, *w);
  return c;
}

}  // namespace acdkit
