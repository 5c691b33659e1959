#include "acdkit/constructions.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "acdkit/numtheory.hpp"

namespace acdkit {
namespace {

using Poly = std::vector<std::uint64_t>;  // low to high, length a, reduced mod f

// Multiplication in F_p[x]/(x^a + sum c_i x^i).
Poly poly_mulmod(const Poly& x, const Poly& y, const Poly& low, std::uint64_t p) {
  std::size_t a = low.size();
  std::vector<std::uint64_t> prod(2 * a, 0);
  for (std::size_t i = 0; i < a; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < a; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  }
  for (std::size_t d = 2 * a; d-- > a;) {
    std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    // x^d = x^(d-a) * x^a = -x^(d-a) * sum low_i x^i
    for (std::size_t i = 0; i < a; ++i) prod[d - a + i] = (prod[d - a + i] + (p - c) * low[i]) % p;
  }
  prod.resize(a);
  return prod;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& low, std::uint64_t p) {
  Poly r(low.size(), 0);
  r[0] = 1;
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, base, low, p);
    base = poly_mulmod(base, base, low, p);
    e >>= 1;
  }
  return r;
}

Poly poly_x(std::size_t a, std::uint64_t p) {
  Poly x(a, 0);
  if (a == 1) {
    return x;  // caller handles degree one separately
  }
  x[1] = 1 % p;
  return x;
}

Matrix multiplication_matrix(const Poly& g, const Poly& low, std::uint64_t p) {
  // Row i holds the coordinates of x^i * g.
  std::size_t a = low.size();
  Matrix m(a * a);
  Poly basis(a, 0);
  basis[0] = 1;
  for (std::size_t i = 0; i < a; ++i) {
    Poly row = poly_mulmod(basis, g, low, p);
    for (std::size_t j = 0; j < a; ++j) m[i * a + j] = static_cast<std::uint32_t>(row[j]);
    if (i + 1 < a) {
      Poly shifted(a, 0);
      for (std::size_t j = 0; j + 1 < a; ++j) shifted[j + 1] = basis[j];
      basis = shifted;
    }
  }
  return m;
}

}  // namespace

std::vector<std::uint64_t> primitive_polynomial(std::uint64_t p, unsigned a) {
  if (!is_prime(p) || a == 0) throw std::invalid_argument("primitive_polynomial: bad parameters");
  std::uint64_t q = ipow(p, a);
  std::uint64_t n = q - 1;
  auto primes = prime_divisors(n);
  if (a == 1) {
    std::uint64_t g = primitive_root(p);
    return {(p - g) % p};  // x - g
  }
  for (std::uint64_t code = 0; code < q; ++code) {
    Poly low(a);
    std::uint64_t c = code;
    for (unsigned i = 0; i < a; ++i) {
      low[i] = c % p;
      c /= p;
    }
    if (low[0] == 0) continue;
    Poly x = poly_x(a, p);
    Poly one(a, 0);
    one[0] = 1;
    if (poly_powmod(x, n, low, p) != one) continue;
    bool primitive = true;
    for (auto r : primes) {
      if (poly_powmod(x, n / r, low, p) == one) {
        primitive = false;
        break;
      }
    }
    if (primitive) return low;
  }
  throw std::logic_error("primitive_polynomial: none found");
}

bool frobenius_params_valid(std::uint64_t p, unsigned a, std::uint64_t h, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (p < 3 || !is_prime(p)) return fail("p must be an odd prime");
  if (a == 0) return fail("a must be positive");
  if (h <= 1 || h % 2 == 0) return fail("h must be odd and greater than 1");
  std::uint64_t q = ipow(p, a);
  if ((q - 1) % h != 0) return fail("h must divide p^a - 1");
  for (auto b : divisors(a)) {
    if (b == a) continue;
    if ((ipow(p, static_cast<unsigned>(b)) - 1) % h == 0)
      return fail("h divides p^" + std::to_string(b) + " - 1, so F_p^a is reducible");
  }
  return true;
}

FiniteGroup frobenius_cyclic(std::uint64_t p, unsigned a, std::uint64_t h) {
  std::string why;
  if (!frobenius_params_valid(p, a, h, &why)) throw std::invalid_argument("frobenius_cyclic: " + why);
  std::uint64_t n = ipow(p, a) - 1;
  auto low = primitive_polynomial(p, a);
  Matrix gen;
  if (a == 1) {
    std::uint64_t g = (p - low[0]) % p;
    gen = {static_cast<std::uint32_t>(powmod(g, n / h, p))};
  } else {
    Poly x = poly_x(a, p);
    Poly g = poly_powmod(x, n / h, low, p);
    gen = multiplication_matrix(g, low, p);
  }
  std::string name = "frob:" + std::to_string(p) + "," + std::to_string(a) + "," + std::to_string(h);
  return make_affine(p, a, {gen}, AffineOptions{}, name);
}

FiniteGroup example1(std::uint64_t p) {
  if (!is_prime(p) || p % 3 != 1) throw std::invalid_argument("example1: p must be a prime with p = 1 mod 3");
  return frobenius_cyclic(p, 1, 3);
}

FiniteGroup example2(std::uint64_t p) {
  if (!is_prime(p) || p % 3 != 2 || ((p - 1) / 2) % 2 != 0)
    throw std::invalid_argument("example2: p must be a prime with p = 2 mod 3 and (p-1)/2 even");
  return frobenius_cyclic(p, 2, 3);
}

FiniteGroup example3(std::uint64_t p) {
  if (!is_prime(p) || p % 3 != 2 || ((p - 1) / 2) % 2 != 1 || p < 7)
    throw std::invalid_argument("example3: p must be a prime with p = 2 mod 3 and (p-1)/2 odd");
  return frobenius_cyclic(p, 1, (p - 1) / 2);
}

FiniteGroup nonabelian_f21(std::uint64_t p) {
  if (!is_prime(p) || p == 7 || multiplicative_order(p % 7, 7) != 6)
    throw std::invalid_argument("nonabelian_f21: p must have order 6 modulo 7");
  const unsigned a = 6;
  // Phi_7 = 1 + x + ... + x^6, so x^6 = -(1 + x + ... + x^5).
  Poly low(a, 1);
  auto power_of_x = [&](std::uint64_t k) {
    Poly r(a, 0);
    k %= 7;
    if (k < 6) {
      r[k] = 1;
    } else {
      for (auto& c : r) c = p - 1;
    }
    return r;
  };
  Matrix A(a * a), B(a * a);
  std::uint64_t s = p * p % 7;
  for (unsigned i = 0; i < a; ++i) {
    Poly ra = power_of_x(i + 1);
    Poly rb = power_of_x(i * s);
    for (unsigned j = 0; j < a; ++j) {
      A[i * a + j] = static_cast<std::uint32_t>(ra[j]);
      B[i * a + j] = static_cast<std::uint32_t>(rb[j]);
    }
  }
  auto g = make_affine(p, a, {A, B}, AffineOptions{}, "nonab:" + std::to_string(p));
  if (g.affine()->h_order() != 21) throw std::logic_error("nonabelian_f21: complement does not have order 21");
  return g;
}

std::vector<NonabelianInstance> nonabelian_H_instances(std::uint64_t budget) {
  std::vector<NonabelianInstance> out;
  for (std::uint64_t p : {3ULL, 5ULL}) {
    std::uint64_t order = 21 * ipow(p, 6);
    if (order > budget) continue;
    out.push_back({"nonab:" + std::to_string(p), nonabelian_f21(p), p, 6});
  }
  return out;
}

std::size_t OrbitAnalysis::regular_count() const {
  return static_cast<std::size_t>(std::count_if(orbits.begin(), orbits.end(), [&](const OrbitInfo& o) { return o.length == h_order; }));
}

std::vector<std::uint64_t> OrbitAnalysis::length_multiset() const {
  std::vector<std::uint64_t> out;
  for (const auto& o : orbits) out.push_back(o.length);
  std::sort(out.begin(), out.end());
  return out;
}

OrbitAnalysis orbit_analysis(const FiniteGroup& g, DualConvention convention) {
  const AffineData* A = g.affine();
  if (!A) throw std::invalid_argument("orbit_analysis: group is not affine");
  const FiniteGroup& H = g.affine_h();
  OrbitAnalysis out;
  out.p = A->p;
  out.a = A->a;
  out.h_order = A->h_order();
  out.convention = convention;

  // Matrix used for each h: lambda -> lambda * M_h.
  std::vector<Matrix> mats(A->h_order());
  unsigned a = A->a;
  for (std::uint32_t h = 0; h < A->h_order(); ++h) {
    const Matrix& src = convention == DualConvention::InverseTranspose ? A->h_elements[H.inv(h)] : A->h_elements[h];
    Matrix m(a * a);
    for (unsigned i = 0; i < a; ++i)
      for (unsigned j = 0; j < a; ++j) m[i * a + j] = convention == DualConvention::Natural ? src[i * a + j] : src[j * a + i];
    mats[h] = std::move(m);
  }
  auto apply = [&](std::uint32_t h, std::uint32_t lambda) {
    if (convention == DualConvention::Natural) return A->apply(h, lambda);
    auto d = A->digits(lambda);
    std::vector<std::uint32_t> r(a, 0);
    for (unsigned i = 0; i < a; ++i) {
      if (d[i] == 0) continue;
      for (unsigned j = 0; j < a; ++j) r[j] = static_cast<std::uint32_t>((r[j] + static_cast<std::uint64_t>(d[i]) * mats[h][i * a + j]) % A->p);
    }
    return A->encode(r);
  };

  const std::uint32_t none = std::numeric_limits<std::uint32_t>::max();
  out.orbit_of.assign(A->q, none);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t lambda = 1; lambda < A->q; ++lambda) {
    if (out.orbit_of[lambda] != none) continue;
    auto id = static_cast<std::uint32_t>(out.orbits.size());
    out.orbit_of[lambda] = id;
    queue.assign(1, lambda);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (Element s : H.generators()) {
        std::uint32_t mu = apply(s, queue[i]);
        if (out.orbit_of[mu] == none) {
          out.orbit_of[mu] = id;
          queue.push_back(mu);
        }
      }
    }
    OrbitInfo info;
    info.representative = lambda;
    info.length = queue.size();
    for (std::uint32_t h = 0; h < A->h_order(); ++h)
      if (apply(h, lambda) == lambda) info.stabilizer.elements.push_back(h);
    if (info.stabilizer.size() * info.length != A->h_order()) throw std::logic_error("orbit_analysis: orbit-stabilizer mismatch");
    info.coprime_to_p = info.length % A->p != 0;
    bool core_trivial = true;
    for (Element t : info.stabilizer.elements) {
      if (t == 0) continue;
      bool in_core = true;
      for (std::uint32_t h = 0; h < A->h_order() && in_core; ++h)
        if (!info.stabilizer.contains(H.conj(t, h))) in_core = false;
      if (in_core) {
        core_trivial = false;
        break;
      }
    }
    info.core_free = core_trivial;
    out.orbits.push_back(std::move(info));
  }
  return out;
}

}  // namespace acdkit
