#include "acdkit/character.hpp"

#include <numeric>

#include "acdkit/numtheory.hpp"

namespace acdkit {

const char* to_string(TableProvenance p) { return p == TableProvenance::Clifford ? "clifford" : "generic"; }

Rational inner_product(const CharacterTable& t, const Character& chi, const Character& psi) {
  CyclotomicNumber sum;
  for (std::size_t c = 0; c < t.classes.count(); ++c) {
    CyclotomicNumber term = chi.values[c] * psi.values[c].conj();
    term *= Rational(static_cast<std::int64_t>(t.classes.sizes[c]));
    sum += term;
  }
  auto r = sum.as_rational();
  if (!r) throw std::logic_error("inner_product: result is not rational");
  return *r / Rational(static_cast<std::int64_t>(t.group.order()));
}

Subgroup kernel_of(const CharacterTable& t, const Character& chi) {
  std::vector<char> in_kernel(t.classes.count(), 0);
  CyclotomicNumber deg(chi.degree);
  for (std::size_t c = 0; c < t.classes.count(); ++c) in_kernel[c] = chi.values[c] == deg;
  Subgroup k;
  for (Element x = 0; x < t.group.order(); ++x)
    if (in_kernel[t.classes.class_of[x]]) k.elements.push_back(x);
  return k;
}

bool character_in_field(const CharacterTable& t, std::size_t i, const FieldSpec& k) {
  if (k.is_full()) return true;
  for (const auto& v : t.characters[i].values)
    if (!lies_in_field(v, k)) return false;
  return true;
}

bool character_in_field_galois(const CharacterTable& t, std::size_t i, const FieldSpec& k) {
  if (k.is_full()) return true;
  const std::uint64_t e = t.classes.exponent;
  const std::uint64_t d = gcd_u64(e, k.root_order());
  // Generators of {j in (Z/e)^x : j = 1 mod d}, chosen greedily.
  std::vector<std::uint64_t> gens;
  std::vector<char> in(e, 0);
  std::vector<std::uint64_t> elems{1 % e};
  in[1 % e] = 1;
  for (std::uint64_t j = 1; j < e; ++j) {
    if (in[j] || gcd_u64(j, e) != 1 || j % d != 1 % d) continue;
    gens.push_back(j);
    for (std::size_t a = 0; a < elems.size(); ++a)
      for (auto s : gens) {
        auto y = elems[a] * s % e;
        if (!in[y]) {
          in[y] = 1;
          elems.push_back(y);
        }
      }
  }
  const Character& chi = t.characters[i];
  for (auto j : gens) {
    auto pm = t.classes.power_map(t.group, static_cast<std::int64_t>(j));
    for (std::size_t c = 0; c < t.classes.count(); ++c)
      if (!(chi.values[pm[c]] == chi.values[c])) return false;
  }
  return true;
}

namespace {

// Image of an integral value under zeta_e -> z in F_q.
std::uint64_t embed(const CyclotomicNumber& v, std::uint64_t e, const std::vector<std::uint64_t>& zpow, std::uint64_t q) {
  std::uint64_t step = e / v.order();
  std::uint64_t s = 0;
  for (const auto& term : v.terms()) {
    std::int64_t c = term.coeff.to_int64();
    std::uint64_t cm = c >= 0 ? static_cast<std::uint64_t>(c) % q : (q - static_cast<std::uint64_t>(-c) % q) % q;
    s = (s + mulmod(cm, zpow[(term.exponent * step) % e], q)) % q;
  }
  return s;
}

}  // namespace

TableCheck verify_table(const CharacterTable& t) {
  TableCheck out;
  auto fail = [&](std::string msg) {
    out.ok = false;
    if (out.failures.size() < 20) out.failures.push_back(std::move(msg));
  };
  const std::size_t r = t.classes.count();
  const std::uint64_t n = t.group.order();
  const std::uint64_t e = t.classes.exponent;
  if (t.size() != r) {
    fail("table is not square: " + std::to_string(t.size()) + " rows, " + std::to_string(r) + " classes");
    return out;
  }
  std::uint64_t degsum = 0;
  bool have_principal = false;
  for (std::size_t i = 0; i < r; ++i) {
    const Character& chi = t.characters[i];
    if (chi.values.size() != r) {
      fail("row " + std::to_string(i) + " has the wrong length");
      return out;
    }
    if (chi.degree <= 0 || n % static_cast<std::uint64_t>(chi.degree) != 0) fail("row " + std::to_string(i) + ": degree does not divide |G|");
    degsum += static_cast<std::uint64_t>(chi.degree * chi.degree);
    if (!(chi.values[0] == CyclotomicNumber(chi.degree))) fail("row " + std::to_string(i) + ": value at 1 differs from degree");
    bool principal = true;
    for (const auto& v : chi.values) {
      if (!v.is_integral()) fail("row " + std::to_string(i) + ": non-integral value " + v.str());
      if (e % v.order() != 0) fail("row " + std::to_string(i) + ": value outside Q(zeta_e): " + v.str());
      if (!(v == CyclotomicNumber(1))) principal = false;
    }
    have_principal = have_principal || principal;
  }
  if (degsum != n) fail("sum of squared degrees is " + std::to_string(degsum) + ", not " + std::to_string(n));
  if (!have_principal) fail("principal character missing");
  if (!out.ok) return out;

  // Galois stability: sigma_j(chi(g)) = chi(g^j) for generators j of (Z/e)^x.
  for (auto j : unit_group_generators(e)) {
    auto pm = t.classes.power_map(t.group, static_cast<std::int64_t>(j));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t c = 0; c < r; ++c)
        if (!(galois_apply(static_cast<std::int64_t>(j), t.characters[i].values[c]) == t.characters[i].values[pm[c]]))
          fail("Galois instability at row " + std::to_string(i) + ", class " + std::to_string(c) + ", j=" + std::to_string(j));
  }
  if (!out.ok) return out;

  const bool exact = r <= 48;
  if (exact) {
    out.orthogonality_method = "exact";
    std::vector<std::vector<CyclotomicNumber>> conj(r);
    for (std::size_t i = 0; i < r; ++i)
      for (const auto& v : t.characters[i].values) conj[i].push_back(v.conj());
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = i; k < r; ++k) {
        CyclotomicNumber s;
        for (std::size_t c = 0; c < r; ++c) {
          auto term = t.characters[i].values[c] * conj[k][c];
          term *= Rational(static_cast<std::int64_t>(t.classes.sizes[c]));
          s += term;
        }
        if (!(s == CyclotomicNumber(i == k ? static_cast<std::int64_t>(n) : 0)))
          fail("rows " + std::to_string(i) + " and " + std::to_string(k) + " are not orthonormal");
      }
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = a; b < r; ++b) {
        CyclotomicNumber s;
        for (std::size_t i = 0; i < r; ++i) s += t.characters[i].values[a] * conj[i][b];
        CyclotomicNumber expect = a == b ? CyclotomicNumber(Rational(static_cast<std::int64_t>(n / t.classes.sizes[a]))) : CyclotomicNumber();
        if (!(s == expect)) fail("columns " + std::to_string(a) + " and " + std::to_string(b) + " are not orthogonal");
      }
    return out;
  }

  // Each inner product is now a rational integer of absolute value at most
  // |G|^2, so agreement modulo a prime q > 2(|G|^2 + |G|) is equality.
  out.orthogonality_method = "modular";
  const std::uint64_t bound = 2 * (n * n + n);
  const std::uint64_t q = detail::prime_one_mod(e, bound);
  const std::uint64_t z = powmod(primitive_root(q), (q - 1) / e, q);
  std::vector<std::uint64_t> zpow(e);
  zpow[0] = 1;
  for (std::uint64_t k = 1; k < e; ++k) zpow[k] = mulmod(zpow[k - 1], z, q);
  std::vector<std::vector<std::uint64_t>> x(r, std::vector<std::uint64_t>(r)), y(r, std::vector<std::uint64_t>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < r; ++c) x[i][c] = embed(t.characters[i].values[c], e, zpow, q);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < r; ++c) y[i][c] = mulmod(x[i][t.classes.inverse_class[c]], t.classes.sizes[c] % q, q);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = i; k < r; ++k) {
      unsigned __int128 acc = 0;
      for (std::size_t c = 0; c < r; ++c) {
        acc += static_cast<unsigned __int128>(x[i][c]) * y[k][c];
        if ((c & 1023) == 1023) acc %= q;
      }
      std::uint64_t v = static_cast<std::uint64_t>(acc % q);
      if (v != (i == k ? n % q : 0)) fail("rows " + std::to_string(i) + " and " + std::to_string(k) + " are not orthonormal");
    }
  // Square matrix X with X D X* = |G| I is invertible, hence X* X = |G| D^-1:
  // column orthogonality follows from the row relations just established.
  return out;
}

bool tables_agree(const CharacterTable& a, const CharacterTable& b, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (a.group.order() != b.group.order()) return fail("group orders differ");
  if (a.classes.representatives != b.classes.representatives || a.classes.sizes != b.classes.sizes) return fail("class lists differ");
  if (a.size() != b.size()) return fail("row counts differ");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.characters[i].degree != b.characters[i].degree) return fail("degrees differ at row " + std::to_string(i));
    for (std::size_t c = 0; c < a.classes.count(); ++c)
      if (!(a.characters[i].values[c] == b.characters[i].values[c]))
        return fail("row " + std::to_string(i) + ", class " + std::to_string(c) + ": " + a.characters[i].values[c].str() + " vs " +
                    b.characters[i].values[c].str());
  }
  return true;
}

}  // namespace acdkit
