#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "acdkit/group.hpp"

namespace acdkit {

/// Checks that (p, a, h) describes a Frobenius group C_h |x F_p^a with an
/// irreducible cyclic complement: p odd prime, h > 1 odd, h | p^a - 1 and
/// h does not divide p^b - 1 for any proper divisor b of a.
bool frobenius_params_valid(std::uint64_t p, unsigned a, std::uint64_t h, std::string* why = nullptr);

/// C_h acting on F_{p^a} by multiplication with an element of order h,
/// written as matrices over F_p. Name "frob:p,a,h".
FiniteGroup frobenius_cyclic(std::uint64_t p, unsigned a, std::uint64_t h);

/// Monic irreducible polynomial of degree a over F_p whose root x is primitive;
/// returns the low coefficients c_0..c_{a-1} of x^a + sum c_i x^i.
std::vector<std::uint64_t> primitive_polynomial(std::uint64_t p, unsigned a);

/// frob(p, 1, 3) for p = 1 mod 3.
FiniteGroup example1(std::uint64_t p);
/// frob(p, 2, 3) for p = 2 mod 3 with (p-1)/2 even.
FiniteGroup example2(std::uint64_t p);
/// frob(p, 1, (p-1)/2) for p = 2 mod 3 with (p-1)/2 odd.
FiniteGroup example3(std::uint64_t p);

/// The Frobenius group of order 21 acting on F_{p^6} = F_p[x]/(Phi_7):
/// multiplication by x and the field automorphism y -> y^(p^2).
/// Requires p to have multiplicative order 6 modulo 7. Name "nonab:p".
FiniteGroup nonabelian_f21(std::uint64_t p);

struct NonabelianInstance {
  std::string name;
  FiniteGroup group;
  std::uint64_t p = 0;
  unsigned a = 0;
};

/// Curated affine groups with nonabelian H whose order fits `budget`, by order.
std::vector<NonabelianInstance> nonabelian_H_instances(std::uint64_t budget);

enum class DualConvention { InverseTranspose, Transpose, Natural };

struct OrbitInfo {
  std::uint32_t representative = 0;  // smallest encoded vector in the orbit
  std::uint64_t length = 0;
  Subgroup stabilizer;               // indices into the H element list
  bool coprime_to_p = false;         // p does not divide the orbit length
  bool core_free = false;            // stabilizer has trivial core in H
};

/// Orbits of H on the nonzero vectors of the dual module (or of V itself).
struct OrbitAnalysis {
  std::uint64_t p = 0;
  unsigned a = 0;
  std::uint64_t h_order = 0;
  DualConvention convention = DualConvention::InverseTranspose;
  std::vector<OrbitInfo> orbits;        // in order of representatives
  std::vector<std::uint32_t> orbit_of;  // per encoded vector; UINT32_MAX for 0

  std::size_t regular_count() const;
  std::vector<std::uint64_t> length_multiset() const;  // sorted
};

OrbitAnalysis orbit_analysis(const FiniteGroup& g, DualConvention convention = DualConvention::InverseTranspose);

}  // namespace acdkit
