#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace acdkit {

using PrimePower = std::pair<std::uint64_t, unsigned>;  // (p, e)

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

bool is_prime(std::uint64_t n);
/// Prime factorisation in increasing order of p.
std::vector<PrimePower> factorize(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
/// All positive divisors, sorted.
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
/// Returns (p, e) if n = p^e with p prime and e >= 1.
bool prime_power_decompose(std::uint64_t n, std::uint64_t& p, unsigned& e);
std::uint64_t ipow(std::uint64_t b, unsigned e);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
/// Inverse of a modulo m; throws std::domain_error if not invertible.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);
/// Smallest primitive root modulo the prime q.
std::uint64_t primitive_root(std::uint64_t q);
/// Multiplicative order of a modulo m (gcd(a, m) must be 1).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);
/// Generators of the unit group (Z/n)^x; they generate but need not be independent.
std::vector<std::uint64_t> unit_group_generators(std::uint64_t n);

/// The part of n coprime to p.
std::uint64_t coprime_part(std::uint64_t n, std::uint64_t p);

}  // namespace acdkit
