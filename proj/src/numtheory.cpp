#include "acdkit/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace acdkit {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t r = 1;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin bases for 64-bit integers.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<PrimePower> out;
  if (n == 0) throw std::domain_error("factorize(0)");
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (auto [p, e] : factorize(n)) {
    std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

bool prime_power_decompose(std::uint64_t n, std::uint64_t& p, unsigned& e) {
  if (n < 2) return false;
  auto f = factorize(n);
  if (f.size() != 1) return false;
  p = f[0].first;
  e = f[0].second;
  return true;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  __int128 t = 0, nt = 1, r = m, nr = a % m;
  while (nr != 0) {
    __int128 q = r / nr;
    __int128 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::domain_error("invmod: not invertible");
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

std::uint64_t primitive_root(std::uint64_t q) {
  if (q == 2) return 1;
  auto ps = prime_divisors(q - 1);
  for (std::uint64_t g = 2; g < q; ++g) {
    bool ok = true;
    for (auto p : ps) {
      if (powmod(g, (q - 1) / p, q) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::domain_error("primitive_root: none found");
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 1;
  if (std::gcd(a % m, m) != 1) throw std::domain_error("multiplicative_order: not a unit");
  std::uint64_t ord = euler_phi(m);
  for (auto [p, e] : factorize(ord)) {
    for (unsigned i = 0; i < e; ++i) {
      if (powmod(a, ord / p, m) == 1) {
        ord /= p;
      } else {
        break;
      }
    }
  }
  return ord;
}

std::vector<std::uint64_t> unit_group_generators(std::uint64_t n) {
  // Greedy: add the smallest unit outside the subgroup generated so far.
  std::vector<std::uint64_t> gens;
  if (n <= 2) return gens;
  std::vector<char> in(n, 0);
  std::vector<std::uint64_t> elems{1};
  in[1] = 1;
  std::uint64_t total = euler_phi(n);
  for (std::uint64_t j = 2; j < n && elems.size() < total; ++j) {
    if (in[j] || std::gcd(j, n) != 1) continue;
    gens.push_back(j);
    // close under multiplication by all generators
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (auto g : gens) {
        std::uint64_t x = elems[i] * g % n;
        if (!in[x]) {
          in[x] = 1;
          elems.push_back(x);
        }
      }
    }
  }
  return gens;
}

std::uint64_t coprime_part(std::uint64_t n, std::uint64_t p) {
  if (p < 2) return n;
  while (n % p == 0) n /= p;
  return n;
}

}  // namespace acdkit
