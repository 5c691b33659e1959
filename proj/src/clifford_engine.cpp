#include <map>
#include <stdexcept>

#include "acdkit/character.hpp"
#include "acdkit/numtheory.hpp"

namespace acdkit {

CharacterTable clifford_table(const FiniteGroup& g, const GenericOptions& opts) {
  const AffineData* A = g.affine();
  if (!A) throw std::invalid_argument("clifford_table: group is not affine");
  const FiniteGroup& H = g.affine_h();

  CharacterTable t;
  t.group = g;
  t.classes = conjugacy_classes(g);
  t.provenance = TableProvenance::Clifford;
  auto data = std::make_shared<CliffordData>();
  auto htab = std::make_shared<CharacterTable>(generic_table(H, opts));
  data->h_table = htab;
  data->orbits = orbit_analysis(g);

  const auto& cs = t.classes;
  const std::size_t r = cs.count();
  std::vector<std::uint32_t> rep_h(r), rep_v(r);
  for (std::size_t c = 0; c < r; ++c) {
    rep_h[c] = g.affine_h_part(cs.representatives[c]);
    rep_v[c] = g.affine_v_part(cs.representatives[c]);
  }

  std::vector<Character> chars;
  std::vector<CliffordOrigin> origins;
  for (std::size_t i = 0; i < htab->size(); ++i) {
    const Character& gamma = htab->characters[i];
    Character chi;
    chi.degree = gamma.degree;
    chi.values.reserve(r);
    for (std::size_t c = 0; c < r; ++c) chi.values.push_back(gamma.values[htab->classes.class_of[rep_h[c]]]);
    chars.push_back(std::move(chi));
    origins.push_back({-1, i});
  }

  std::vector<Element> h_inv(H.order());
  for (Element h = 0; h < H.order(); ++h) h_inv[h] = H.inv(h);

  std::map<std::vector<Element>, std::pair<std::shared_ptr<const CharacterTable>, std::vector<Element>>> cache;
  for (std::size_t o = 0; o < data->orbits.orbits.size(); ++o) {
    const OrbitInfo& orbit = data->orbits.orbits[o];
    auto& slot = cache[orbit.stabilizer.elements];
    if (!slot.first) {
      auto emb = subgroup_as_group(H, orbit.stabilizer, H.name() + "/T" + std::to_string(orbit.stabilizer.size()));
      slot.first = std::make_shared<CharacterTable>(generic_table(emb.group, opts));
      slot.second = emb.to_parent;
    }
    const CharacterTable& ttab = *slot.first;
    data->stabilizer_tables.push_back(slot.first);
    data->stabilizer_embeddings.push_back(slot.second);

    std::vector<std::int64_t> local(H.order(), -1);
    for (std::size_t k = 0; k < slot.second.size(); ++k) local[slot.second[k]] = static_cast<std::int64_t>(k);

    // Right transversal of T in H.
    std::vector<Element> transversal;
    std::vector<char> covered(H.order(), 0);
    for (Element x = 0; x < H.order(); ++x) {
      if (covered[x]) continue;
      transversal.push_back(x);
      for (Element s : orbit.stabilizer.elements) covered[H.mul(s, x)] = 1;
    }

    const std::uint64_t order = lcm_u64(ttab.classes.exponent, A->p);
    const std::int64_t vstep = static_cast<std::int64_t>(order / A->p);
    const std::size_t ntau = ttab.size();
    std::vector<CycloAccumulator> acc(ntau, CycloAccumulator(order));
    std::vector<Character> induced(ntau);
    for (std::size_t k = 0; k < ntau; ++k) {
      induced[k].degree = static_cast<std::int64_t>(transversal.size()) * ttab.characters[k].degree;
      induced[k].values.reserve(r);
    }
    const std::uint32_t lambda = orbit.representative;
    for (std::size_t c = 0; c < r; ++c) {
      for (Element x : transversal) {
        Element xi = h_inv[x];
        Element conj = H.mul(H.mul(x, rep_h[c]), xi);
        if (local[conj] < 0) continue;
        auto tclass = ttab.classes.class_of[static_cast<std::size_t>(local[conj])];
        std::uint32_t w = A->apply(xi, rep_v[c]);
        std::int64_t shift = static_cast<std::int64_t>(A->dot(lambda, w)) * vstep;
        for (std::size_t k = 0; k < ntau; ++k) acc[k].add_shifted(ttab.characters[k].values[tclass], shift);
      }
      for (std::size_t k = 0; k < ntau; ++k) induced[k].values.push_back(acc[k].take());
    }
    for (std::size_t k = 0; k < ntau; ++k) {
      chars.push_back(std::move(induced[k]));
      origins.push_back({static_cast<int>(o), k});
    }
  }
  if (chars.size() != r) throw std::logic_error("clifford_table: character count does not match class count");

  t.characters = std::move(chars);
  std::vector<std::size_t> perm;
  detail::sort_characters(t, &perm);
  for (auto i : perm) data->origins.push_back(origins[i]);
  t.clifford = std::move(data);
  return t;
}

}  // namespace acdkit
