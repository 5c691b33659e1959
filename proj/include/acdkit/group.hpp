#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace acdkit {

using Element = std::uint32_t;

enum class GroupModel { ExplicitTable, Affine };

/// Square matrix over F_p, row-major, entries in [0, p).
using Matrix = std::vector<std::uint32_t>;

class FiniteGroup;

/// Vectors of F_p^a are encoded as integers sum_i v_i p^i.
struct AffineData {
  std::uint64_t p = 0;
  unsigned a = 0;
  std::uint64_t q = 0;  // p^a
  std::vector<Matrix> h_generators;
  std::vector<Matrix> h_elements;    // h_elements[0] is the identity
  std::vector<std::uint32_t> act;    // act[h * q + v] = v * h_elements[h]

  std::uint64_t h_order() const { return h_elements.size(); }
  std::uint32_t apply(std::uint32_t h, std::uint32_t v) const { return act[static_cast<std::size_t>(h) * q + v]; }
  std::uint32_t add(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t neg(std::uint32_t x) const;
  std::vector<std::uint32_t> digits(std::uint32_t v) const;
  std::uint32_t encode(const std::vector<std::uint32_t>& d) const;
  /// Standard dot product of two encoded vectors, mod p.
  std::uint32_t dot(std::uint32_t x, std::uint32_t y) const;
};

/// An immutable finite group with elements 0..order-1 and identity 0.
///
/// Two models: an explicit multiplication table (order <= 4096) and an
/// affine group H |x F_p^a with element index h * p^a + v and product
/// (h1, v1)(h2, v2) = (h1 h2, v1 h2 + v2).
class FiniteGroup {
 public:
  FiniteGroup();  // trivial group

  std::uint64_t order() const;
  Element identity() const { return 0; }
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element pow(Element a, std::int64_t k) const;
  Element conj(Element x, Element g) const { return mul(inv(g), mul(x, g)); }  // g^-1 x g
  Element commutator(Element a, Element b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }

  GroupModel model() const;
  const std::vector<Element>& generators() const;
  const std::string& name() const;
  FiniteGroup with_name(std::string name) const;

  /// Affine data; nullptr for explicit tables.
  const AffineData* affine() const;
  /// H as an explicit group whose indices match AffineData::h_elements.
  const FiniteGroup& affine_h() const;
  Element affine_element(std::uint32_t h, std::uint32_t v) const;
  std::uint32_t affine_h_part(Element g) const;
  std::uint32_t affine_v_part(Element g) const;

  std::string describe(Element g) const;

  struct Impl;

 private:
  explicit FiniteGroup(std::shared_ptr<const Impl> impl);
  friend FiniteGroup make_group_from_impl(std::shared_ptr<const Impl>);
  std::shared_ptr<const Impl> impl_;
};

inline constexpr std::uint64_t kExplicitOrderCap = 4096;

/// Builds an explicit group from a multiplication table (row-major, 0 = identity).
FiniteGroup make_explicit(std::uint64_t n, std::vector<std::uint16_t> table, std::string name, bool check_axioms = true);
FiniteGroup make_cyclic(std::uint64_t n);
FiniteGroup make_elementary_abelian(std::uint64_t p, unsigned a);
FiniteGroup make_direct_product(const FiniteGroup& a, const FiniteGroup& b);

struct AffineOptions {
  bool require_irreducible = false;
  bool require_faithful = false;
  std::uint64_t h_cap = kExplicitOrderCap;
  std::uint64_t order_cap = 4'000'000;
};

/// H |x F_p^a for the matrix group H generated by `generators` acting on row vectors.
FiniteGroup make_affine(std::uint64_t p, unsigned a, const std::vector<Matrix>& generators, const AffineOptions& opts = {},
                        std::string name = {});

/// Whether F_p^a is an irreducible module for the matrices in `group` (a full list of elements or a generating set).
bool is_irreducible_module(std::uint64_t p, unsigned a, const std::vector<Matrix>& group);

/// Subgroup of a parent group, stored as a sorted element list.
struct Subgroup {
  std::vector<Element> elements;

  std::uint64_t size() const { return elements.size(); }
  bool contains(Element g) const;
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

Subgroup whole_group(const FiniteGroup& g);
Subgroup trivial_subgroup();
Subgroup generate_subgroup(const FiniteGroup& g, const std::vector<Element>& gens);
Subgroup normal_closure(const FiniteGroup& g, const std::vector<Element>& gens);
Subgroup derived_subgroup(const FiniteGroup& g);
Subgroup center(const FiniteGroup& g);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
bool is_subgroup(const FiniteGroup& g, const Subgroup& s);
bool is_normal(const FiniteGroup& g, const Subgroup& s);

std::uint64_t element_order(const FiniteGroup& g, Element x);
bool is_abelian(const FiniteGroup& g);

/// Conjugacy classes; the identity class is first and classes are ordered by
/// their smallest element.
struct ConjugacyClassSet {
  std::vector<Element> representatives;
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint32_t> class_of;  // indexed by element
  std::vector<std::uint64_t> rep_orders;
  std::vector<std::uint32_t> inverse_class;
  std::map<std::uint64_t, std::vector<std::uint32_t>> prime_power_maps;  // primes dividing |G|
  std::uint64_t exponent = 1;

  std::size_t count() const { return representatives.size(); }
  /// Class of g^j for g in each class.
  std::vector<std::uint32_t> power_map(const FiniteGroup& g, std::int64_t j) const;
  /// Element lists per class.
  std::vector<std::vector<Element>> members() const;
};

ConjugacyClassSet conjugacy_classes(const FiniteGroup& g);
std::uint64_t exponent(const FiniteGroup& g);

/// A normal p-complement if one exists.
std::optional<Subgroup> has_normal_p_complement(const FiniteGroup& g, std::uint64_t p);
std::optional<Subgroup> has_normal_p_complement(const FiniteGroup& g, const ConjugacyClassSet& classes, std::uint64_t p);

/// A subgroup realised as a group in its own right.
struct EmbeddedGroup {
  FiniteGroup group;
  std::vector<Element> to_parent;  // local index -> parent element
};
EmbeddedGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& s, std::string name = {});

struct QuotientGroup {
  FiniteGroup group;
  std::vector<Element> projection;  // parent element -> coset index
};
QuotientGroup quotient(const FiniteGroup& g, const Subgroup& n);

}  // namespace acdkit
