#include "acdkit/cyclotomic.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "acdkit/numtheory.hpp"

namespace acdkit {
namespace {

// Per-prime data for the CRT coordinates of exponents modulo n:
// the p-coordinate of i is i * u mod p^e, where u = (n / p^e)^{-1} mod p^e.
struct PrimeCoord {
  std::uint64_t p = 0;
  unsigned e = 0;
  std::uint64_t pe = 0;
  std::uint64_t u = 0;
  std::uint64_t step = 0;  // n / p

  std::uint64_t coord(std::uint64_t i) const { return static_cast<std::uint64_t>(static_cast<unsigned __int128>(i) * u % pe); }
};

const std::vector<PrimeCoord>& prime_coords(std::uint64_t n) {
  thread_local std::unordered_map<std::uint64_t, std::vector<PrimeCoord>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<PrimeCoord> out;
  for (auto [p, e] : factorize(n)) {
    PrimeCoord c;
    c.p = p;
    c.e = e;
    c.pe = ipow(p, e);
    c.u = invmod((n / c.pe) % c.pe, c.pe);
    c.step = n / p;
    out.push_back(c);
  }
  return cache.emplace(n, std::move(out)).first->second;
}

unsigned valuation(std::uint64_t x, std::uint64_t p, unsigned cap) {
  if (x == 0) return cap;
  unsigned v = 0;
  while (x % p == 0 && v < cap) {
    x /= p;
    ++v;
  }
  return v;
}

std::uint64_t reduce_exponent(std::int64_t k, std::uint64_t n) {
  std::int64_t r = k % static_cast<std::int64_t>(n);
  if (r < 0) r += static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(r);
}

// Rewrites canonical terms at order n (sorted by exponent) into the basis of
// their conductor. Returns the conductor.
std::uint64_t reduce_to_conductor(std::uint64_t n, std::vector<CycloTerm>& terms) {
  if (terms.empty()) return 1;
  const auto& coords = prime_coords(n);
  std::vector<unsigned> target(coords.size());
  std::uint64_t f = 1;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    const PrimeCoord& pc = coords[k];
    unsigned minv = pc.e;
    for (const auto& t : terms) minv = std::min(minv, valuation(pc.coord(t.exponent), pc.p, pc.e));
    unsigned ep = pc.e - minv;
    if (pc.p != 2 && ep == 1) {
      // The p-part might be rational: every block of p-1 terms sharing the
      // other coordinates must carry a common coefficient.
      std::unordered_map<std::uint64_t, std::pair<unsigned, const Rational*>> blocks;
      bool rational_part = true;
      for (const auto& t : terms) {
        auto key = t.exponent % pc.step;
        auto [it, fresh] = blocks.try_emplace(key, 0u, &t.coeff);
        if (!fresh && !(*it->second.second == t.coeff)) {
          rational_part = false;
          break;
        }
        ++it->second.first;
      }
      if (rational_part) {
        for (const auto& [key, b] : blocks) {
          if (b.first != pc.p - 1) {
            rational_part = false;
            break;
          }
        }
      }
      if (rational_part) ep = 0;
    }
    target[k] = ep;
    f *= ipow(pc.p, ep);
  }
  if (f == n) return n;

  std::vector<CycloTerm> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    std::uint64_t expo = 0;
    bool keep = true;
    bool negate = false;
    for (std::size_t k = 0; k < coords.size() && keep; ++k) {
      const PrimeCoord& pc = coords[k];
      std::uint64_t c = pc.coord(t.exponent);
      unsigned ep = target[k];
      if (ep >= 1) {
        std::uint64_t pep = ipow(pc.p, ep);
        std::uint64_t cp = c / ipow(pc.p, pc.e - ep);
        expo = (expo + cp % pep * (f / pep)) % f;
      } else if (pc.p != 2) {
        // 1 = -(sum of the nontrivial p-th roots of unity); keep the a = 1 member.
        if (c / (pc.pe / pc.p) != 1) keep = false;
        negate = !negate;
      }
    }
    if (!keep) continue;
    out.push_back({static_cast<std::uint32_t>(expo), negate ? -t.coeff : std::move(t.coeff)});
  }
  std::sort(out.begin(), out.end(), [](const CycloTerm& a, const CycloTerm& b) { return a.exponent < b.exponent; });
  terms = std::move(out);
  return f;
}

CycloAccumulator& scratch(std::uint64_t n) {
  thread_local std::unordered_map<std::uint64_t, std::unique_ptr<CycloAccumulator>> pool;
  auto& slot = pool[n];
  if (!slot) slot = std::make_unique<CycloAccumulator>(n);
  return *slot;
}

}  // namespace

bool is_zumbroich_exponent(std::uint64_t n, std::uint64_t k) {
  for (const auto& pc : prime_coords(n)) {
    std::uint64_t c = pc.coord(k % n);
    if (pc.p == 2 ? c >= pc.pe / 2 : c < pc.pe / pc.p) return false;
  }
  return true;
}

CycloAccumulator::CycloAccumulator(std::uint64_t n) : n_(n), coef_(n), touched_flag_(n, 0) {
  if (n == 0) throw std::invalid_argument("CycloAccumulator: order must be positive");
  if (n > 0xFFFFFFFFULL) throw std::invalid_argument("CycloAccumulator: order too large");
}

void CycloAccumulator::touch(std::uint64_t i) {
  if (!touched_flag_[i]) {
    touched_flag_[i] = 1;
    touched_.push_back(static_cast<std::uint32_t>(i));
  }
}

void CycloAccumulator::add(std::int64_t exponent, const Rational& c) {
  if (c.is_zero()) return;
  auto i = reduce_exponent(exponent, n_);
  touch(i);
  coef_[i] += c;
}

void CycloAccumulator::add(std::int64_t exponent, std::int64_t c) {
  if (c == 0) return;
  auto i = reduce_exponent(exponent, n_);
  touch(i);
  coef_[i] += Rational(c);
}

void CycloAccumulator::add_shifted(const CyclotomicNumber& v, std::int64_t shift, const Rational& scale) {
  if (n_ % v.order() != 0) throw std::invalid_argument("CycloAccumulator: order mismatch");
  std::uint64_t mult = n_ / v.order();
  bool unit = scale == Rational(1);
  for (const auto& t : v.terms()) {
    std::int64_t k = static_cast<std::int64_t>(reduce_exponent(static_cast<std::int64_t>(t.exponent * mult) + shift, n_));
    add(k, unit ? t.coeff : t.coeff * scale);
  }
}

void CycloAccumulator::basis_rewrite() {
  for (const auto& pc : prime_coords(n_)) {
    std::size_t snapshot = touched_.size();
    for (std::size_t idx = 0; idx < snapshot; ++idx) {
      std::uint64_t i = touched_[idx];
      if (coef_[i].is_zero()) continue;
      std::uint64_t c = pc.coord(i);
      if (pc.p == 2) {
        if (c < pc.pe / 2) continue;
        std::uint64_t j = (i + pc.step) % n_;
        touch(j);
        coef_[j] -= coef_[i];
      } else {
        if (c >= pc.pe / pc.p) continue;
        for (std::uint64_t a = 1; a < pc.p; ++a) {
          std::uint64_t j = (i + a * pc.step) % n_;
          touch(j);
          coef_[j] -= coef_[i];
        }
      }
      coef_[i] = Rational();
    }
  }
}

std::vector<CycloTerm> CycloAccumulator::take_expansion() {
  basis_rewrite();
  std::vector<CycloTerm> out;
  for (auto i : touched_) {
    if (!coef_[i].is_zero()) out.push_back({i, std::move(coef_[i])});
    coef_[i] = Rational();
    touched_flag_[i] = 0;
  }
  touched_.clear();
  std::sort(out.begin(), out.end(), [](const CycloTerm& a, const CycloTerm& b) { return a.exponent < b.exponent; });
  return out;
}

CyclotomicNumber CycloAccumulator::take() {
  CyclotomicNumber v;
  v.terms_ = take_expansion();
  v.order_ = reduce_to_conductor(n_, v.terms_);
  return v;
}

CyclotomicNumber::CyclotomicNumber(const Rational& r) {
  if (!r.is_zero()) terms_.push_back({0, r});
}

CyclotomicNumber::CyclotomicNumber(std::int64_t r) : CyclotomicNumber(Rational(r)) {}

CyclotomicNumber CyclotomicNumber::root_of_unity(std::uint64_t n, std::int64_t k) {
  if (n == 0) throw std::invalid_argument("root_of_unity: n must be positive");
  auto& acc = scratch(n);
  acc.add(k, std::int64_t{1});
  return acc.take();
}

std::optional<Rational> CyclotomicNumber::as_rational() const {
  if (!is_rational()) return std::nullopt;
  if (terms_.empty()) return Rational();
  return terms_.front().coeff;
}

bool CyclotomicNumber::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const CycloTerm& t) { return t.coeff.is_integer(); });
}

CyclotomicNumber CyclotomicNumber::conj() const { return galois_apply(-1, *this); }

std::string CyclotomicNumber::str() const {
  if (is_rational()) return terms_.empty() ? std::string("0") : terms_.front().coeff.str();
  std::string s = "n=" + std::to_string(order_) + ":";
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      s += " ";
      if (c.sign() < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) c = -c;
    }
    first = false;
    if (t.exponent == 0) {
      s += c.str();
    } else if (c == Rational(1)) {
      s += "z^" + std::to_string(t.exponent);
    } else {
      s += c.str() + "*z^" + std::to_string(t.exponent);
    }
  }
  return s;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  auto& acc = scratch(lcm_u64(order_, o.order_));
  acc.add_shifted(*this, 0);
  acc.add_shifted(o, 0);
  return *this = acc.take();
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) { return *this += -o; }

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
  if (is_zero() || o.is_zero()) return *this = CyclotomicNumber();
  if (o.is_rational()) return *this *= o.terms_.front().coeff;
  if (is_rational()) {
    Rational c = terms_.front().coeff;
    *this = o;
    return *this *= c;
  }
  std::uint64_t n = lcm_u64(order_, o.order_);
  std::uint64_t ma = n / order_;
  std::uint64_t mb = n / o.order_;
  auto& acc = scratch(n);
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      acc.add(static_cast<std::int64_t>((a.exponent * ma + b.exponent * mb) % n), a.coeff * b.coeff);
    }
  }
  return *this = acc.take();
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& r) {
  if (r.is_zero()) return *this = CyclotomicNumber();
  for (auto& t : terms_) t.coeff *= r;
  return *this;
}

bool structural_less(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.order_ != b.order_) return a.order_ < b.order_;
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (x.exponent != y.exponent) return x.exponent < y.exponent;
    if (!(x.coeff == y.coeff)) return x.coeff < y.coeff;
  }
  return a.terms_.size() < b.terms_.size();
}

CyclotomicNumber normalize(std::uint64_t n, std::span<const std::pair<std::int64_t, Rational>> raw) {
  auto& acc = scratch(n);
  for (const auto& [k, c] : raw) acc.add(k, c);
  return acc.take();
}

CyclotomicNumber from_exponent_counts(std::uint64_t n, std::span<const std::int64_t> counts) {
  auto& acc = scratch(n);
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] != 0) acc.add(static_cast<std::int64_t>(k), counts[k]);
  }
  return acc.take();
}

std::vector<CycloTerm> expand_in_order(const CyclotomicNumber& v, std::uint64_t n) {
  if (n % v.order() != 0) throw std::invalid_argument("expand_in_order: order does not divide n");
  auto& acc = scratch(n);
  acc.add_shifted(v, 0);
  return acc.take_expansion();
}

GaloisAutomorphism::GaloisAutomorphism(std::uint64_t order, std::int64_t exponent) : order_(order) {
  if (order == 0) throw std::invalid_argument("GaloisAutomorphism: order must be positive");
  exponent_ = reduce_exponent(exponent, order);
  if (order > 1 && std::gcd(exponent_, order) != 1) throw std::invalid_argument("GaloisAutomorphism: exponent not a unit");
}

GaloisAutomorphism GaloisAutomorphism::compose(const GaloisAutomorphism& other) const {
  if (other.order_ != order_) throw std::invalid_argument("GaloisAutomorphism: order mismatch");
  return GaloisAutomorphism(order_, static_cast<std::int64_t>(mulmod(exponent_, other.exponent_, order_)));
}

CyclotomicNumber galois_apply(const GaloisAutomorphism& sigma, const CyclotomicNumber& v) {
  if (sigma.order() % v.order() != 0) throw std::invalid_argument("galois_apply: value order does not divide automorphism order");
  return galois_apply(static_cast<std::int64_t>(sigma.exponent() % v.order()), v);
}

CyclotomicNumber galois_apply(std::int64_t j, const CyclotomicNumber& v) {
  std::uint64_t f = v.order();
  if (f <= 2) return v;
  std::uint64_t jj = reduce_exponent(j, f);
  if (std::gcd(jj, f) != 1) throw std::invalid_argument("galois_apply: exponent not a unit");
  if (jj == 1) return v;
  auto& acc = scratch(f);
  for (const auto& t : v.terms()) acc.add(static_cast<std::int64_t>(mulmod(t.exponent, jj, f)), t.coeff);
  return acc.take();
}

std::uint64_t conductor(const CyclotomicNumber& v) { return v.order(); }

FieldSpec FieldSpec::cyclotomic(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("FieldSpec: m must be positive");
  return {Kind::Cyclotomic, m};
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "full" || text == "C") return full();
  std::size_t pos = 0;
  long long m = 0;
  try {
    m = std::stoll(text, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("FieldSpec: expected 'full' or a positive integer, got '" + text + "'");
  }
  if (pos != text.size() || m <= 0) throw std::invalid_argument("FieldSpec: expected 'full' or a positive integer, got '" + text + "'");
  return cyclotomic(static_cast<std::uint64_t>(m));
}

std::uint64_t FieldSpec::root_order() const { return is_full() ? 0 : lcm_u64(2, m); }

bool FieldSpec::contains_roots_of_unity(std::uint64_t d) const {
  if (is_full()) return true;
  return root_order() % d == 0;
}

std::string FieldSpec::str() const { return is_full() ? std::string("full") : std::to_string(m); }

bool lies_in_field(const CyclotomicNumber& v, const FieldSpec& k) {
  if (k.is_full()) return true;
  return k.root_order() % conductor(v) == 0;
}

}  // namespace acdkit
