#include "acdkit/group.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "acdkit/numtheory.hpp"

namespace acdkit {

namespace {

struct ExplicitData {
  std::vector<std::uint16_t> table;
  std::vector<std::uint16_t> inv;
};

constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();

}  // namespace

struct FiniteGroup::Impl {
  GroupModel model = GroupModel::ExplicitTable;
  std::uint64_t order = 1;
  std::string name;
  std::vector<Element> gens;
  std::shared_ptr<const ExplicitData> ex;
  std::shared_ptr<const AffineData> af;
  std::shared_ptr<const FiniteGroup> h;
  const ExplicitData* hx = nullptr;
};

FiniteGroup make_group_from_impl(std::shared_ptr<const FiniteGroup::Impl> impl) { return FiniteGroup(std::move(impl)); }

namespace {

// Incrementally maintained closure <gens> inside a parent group.
class ClosureBuilder {
 public:
  explicit ClosureBuilder(const FiniteGroup& g) : g_(g), in_(g.order(), 0), elems_{0} { in_[0] = 1; }

  // Adds a generator and closes. `accept` may veto new elements; returns false
  // if it did (the builder is then left in an unspecified state).
  template <class Accept>
  bool add_generator(Element x, Accept&& accept) {
    if (in_[x]) return true;
    gens_.push_back(x);
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      for (Element s : gens_) {
        Element y = g_.mul(elems_[i], s);
        if (!in_[y]) {
          if (!accept(y, elems_.size() + 1)) return false;
          in_[y] = 1;
          elems_.push_back(y);
        }
      }
    }
    return true;
  }
  void add_generator(Element x) {
    add_generator(x, [](Element, std::size_t) { return true; });
  }

  bool contains(Element x) const { return in_[x] != 0; }
  const std::vector<Element>& gens() const { return gens_; }
  std::size_t size() const { return elems_.size(); }

  Subgroup take() {
    Subgroup s{std::move(elems_)};
    std::sort(s.elements.begin(), s.elements.end());
    return s;
  }

 private:
  const FiniteGroup& g_;
  std::vector<char> in_;
  std::vector<Element> elems_;
  std::vector<Element> gens_;
};

std::vector<Element> greedy_generators(const FiniteGroup& g) {
  ClosureBuilder b(g);
  for (Element x = 1; x < g.order(); ++x) {
    if (b.size() == g.order()) break;
    if (!b.contains(x)) b.add_generator(x);
  }
  return b.gens();
}

std::shared_ptr<FiniteGroup::Impl> explicit_impl(std::uint64_t n, std::vector<std::uint16_t> table, std::string name) {
  auto ex = std::make_shared<ExplicitData>();
  ex->table = std::move(table);
  ex->inv.assign(n, 0);
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) {
      if (ex->table[a * n + b] == 0) {
        ex->inv[a] = static_cast<std::uint16_t>(b);
        break;
      }
    }
  }
  auto impl = std::make_shared<FiniteGroup::Impl>();
  impl->model = GroupModel::ExplicitTable;
  impl->order = n;
  impl->name = std::move(name);
  impl->ex = std::move(ex);
  return impl;
}

std::uint32_t matrix_rank(std::vector<std::vector<std::uint32_t>> rows, std::uint64_t p) {
  std::uint32_t rank = 0;
  std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    std::uint64_t inv = invmod(rows[rank][col], p);
    for (auto& x : rows[rank]) x = static_cast<std::uint32_t>(x * inv % p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      std::uint64_t f = rows[r][col];
      for (std::size_t c = 0; c < ncols; ++c) rows[r][c] = static_cast<std::uint32_t>((rows[r][c] + p * p - f * rows[rank][c]) % p);
    }
    ++rank;
  }
  return rank;
}

Matrix mat_mul(const Matrix& x, const Matrix& y, unsigned a, std::uint64_t p) {
  Matrix z(static_cast<std::size_t>(a) * a, 0);
  for (unsigned i = 0; i < a; ++i) {
    for (unsigned k = 0; k < a; ++k) {
      std::uint64_t xik = x[i * a + k];
      if (xik == 0) continue;
      for (unsigned j = 0; j < a; ++j) z[i * a + j] = static_cast<std::uint32_t>((z[i * a + j] + xik * y[k * a + j]) % p);
    }
  }
  return z;
}

Matrix identity_matrix(unsigned a) {
  Matrix m(static_cast<std::size_t>(a) * a, 0);
  for (unsigned i = 0; i < a; ++i) m[i * a + i] = 1;
  return m;
}

std::string matrix_list_str(const std::vector<Matrix>& gens, unsigned a) {
  std::string s;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (g) s += "|";
    for (unsigned i = 0; i < a; ++i) {
      if (i) s += ";";
      for (unsigned j = 0; j < a; ++j) {
        if (j) s += " ";
        s += std::to_string(gens[g][i * a + j]);
      }
    }
  }
  return s;
}

}  // namespace

// ---- AffineData ----

std::uint32_t AffineData::add(std::uint32_t x, std::uint32_t y) const {
  std::uint32_t r = 0, base = 1;
  for (unsigned i = 0; i < a; ++i) {
    std::uint32_t d = static_cast<std::uint32_t>((x % p + y % p) % p);
    r += d * base;
    base *= static_cast<std::uint32_t>(p);
    x /= static_cast<std::uint32_t>(p);
    y /= static_cast<std::uint32_t>(p);
  }
  return r;
}

std::uint32_t AffineData::neg(std::uint32_t x) const {
  std::uint32_t r = 0, base = 1;
  for (unsigned i = 0; i < a; ++i) {
    std::uint32_t d = static_cast<std::uint32_t>((p - x % p) % p);
    r += d * base;
    base *= static_cast<std::uint32_t>(p);
    x /= static_cast<std::uint32_t>(p);
  }
  return r;
}

std::vector<std::uint32_t> AffineData::digits(std::uint32_t v) const {
  std::vector<std::uint32_t> d(a);
  for (unsigned i = 0; i < a; ++i) {
    d[i] = static_cast<std::uint32_t>(v % p);
    v /= static_cast<std::uint32_t>(p);
  }
  return d;
}

std::uint32_t AffineData::encode(const std::vector<std::uint32_t>& d) const {
  std::uint32_t r = 0, base = 1;
  for (unsigned i = 0; i < a; ++i) {
    r += static_cast<std::uint32_t>(d[i] % p) * base;
    base *= static_cast<std::uint32_t>(p);
  }
  return r;
}

std::uint32_t AffineData::dot(std::uint32_t x, std::uint32_t y) const {
  std::uint64_t s = 0;
  for (unsigned i = 0; i < a; ++i) {
    s += static_cast<std::uint64_t>(x % p) * (y % p);
    x /= static_cast<std::uint32_t>(p);
    y /= static_cast<std::uint32_t>(p);
  }
  return static_cast<std::uint32_t>(s % p);
}

// ---- FiniteGroup ----

FiniteGroup::FiniteGroup() : impl_(explicit_impl(1, {0}, "cyclic:1")) {}

FiniteGroup::FiniteGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

std::uint64_t FiniteGroup::order() const { return impl_->order; }

Element FiniteGroup::mul(Element x, Element y) const {
  const Impl& I = *impl_;
  if (I.model == GroupModel::ExplicitTable) return I.ex->table[static_cast<std::size_t>(x) * I.order + y];
  const AffineData& A = *I.af;
  std::uint32_t h1 = static_cast<std::uint32_t>(x / A.q), v1 = static_cast<std::uint32_t>(x % A.q);
  std::uint32_t h2 = static_cast<std::uint32_t>(y / A.q), v2 = static_cast<std::uint32_t>(y % A.q);
  std::uint32_t h = I.hx->table[static_cast<std::size_t>(h1) * A.h_order() + h2];
  return static_cast<Element>(h * A.q + A.add(A.apply(h2, v1), v2));
}

Element FiniteGroup::inv(Element x) const {
  const Impl& I = *impl_;
  if (I.model == GroupModel::ExplicitTable) return I.ex->inv[x];
  const AffineData& A = *I.af;
  std::uint32_t h = static_cast<std::uint32_t>(x / A.q), v = static_cast<std::uint32_t>(x % A.q);
  std::uint32_t hi = I.hx->inv[h];
  return static_cast<Element>(hi * A.q + A.neg(A.apply(hi, v)));
}

Element FiniteGroup::pow(Element x, std::int64_t k) const {
  if (k < 0) {
    x = inv(x);
    k = -k;
  }
  Element r = 0;
  while (k > 0) {
    if (k & 1) r = mul(r, x);
    x = mul(x, x);
    k >>= 1;
  }
  return r;
}

GroupModel FiniteGroup::model() const { return impl_->model; }
const std::vector<Element>& FiniteGroup::generators() const { return impl_->gens; }
const std::string& FiniteGroup::name() const { return impl_->name; }

FiniteGroup FiniteGroup::with_name(std::string name) const {
  auto copy = std::make_shared<Impl>(*impl_);
  copy->name = std::move(name);
  return FiniteGroup(std::move(copy));
}

const AffineData* FiniteGroup::affine() const { return impl_->af.get(); }

const FiniteGroup& FiniteGroup::affine_h() const {
  if (!impl_->h) throw std::logic_error("affine_h: not an affine group");
  return *impl_->h;
}

Element FiniteGroup::affine_element(std::uint32_t h, std::uint32_t v) const {
  return static_cast<Element>(h * impl_->af->q + v);
}
std::uint32_t FiniteGroup::affine_h_part(Element g) const { return static_cast<std::uint32_t>(g / impl_->af->q); }
std::uint32_t FiniteGroup::affine_v_part(Element g) const { return static_cast<std::uint32_t>(g % impl_->af->q); }

std::string FiniteGroup::describe(Element g) const {
  if (model() == GroupModel::ExplicitTable) return std::to_string(g);
  const AffineData& A = *impl_->af;
  std::string s = "(h" + std::to_string(affine_h_part(g)) + ",[";
  auto d = A.digits(affine_v_part(g));
  for (unsigned i = 0; i < A.a; ++i) s += (i ? " " : "") + std::to_string(d[i]);
  return s + "])";
}

// ---- constructors ----

FiniteGroup make_explicit(std::uint64_t n, std::vector<std::uint16_t> table, std::string name, bool check_axioms) {
  if (n == 0 || n > kExplicitOrderCap) throw std::invalid_argument("make_explicit: order must be in [1, 4096]");
  if (table.size() != n * n) throw std::invalid_argument("make_explicit: table size mismatch");
  if (check_axioms) {
    for (std::uint64_t a = 0; a < n; ++a) {
      if (table[a] != a || table[a * n] != a) throw std::invalid_argument("make_explicit: 0 is not the identity");
      std::vector<char> row(n, 0), col(n, 0);
      for (std::uint64_t b = 0; b < n; ++b) {
        if (table[a * n + b] >= n) throw std::invalid_argument("make_explicit: entry out of range");
        row[table[a * n + b]] = 1;
        col[table[b * n + a]] = 1;
      }
      if (std::count(row.begin(), row.end(), 1) != static_cast<long>(n) || std::count(col.begin(), col.end(), 1) != static_cast<long>(n))
        throw std::invalid_argument("make_explicit: not a Latin square");
    }
    if (n <= 128) {
      for (std::uint64_t a = 0; a < n; ++a)
        for (std::uint64_t b = 0; b < n; ++b)
          for (std::uint64_t c = 0; c < n; ++c)
            if (table[table[a * n + b] * n + c] != table[a * n + table[b * n + c]])
              throw std::invalid_argument("make_explicit: not associative");
    }
  }
  auto impl = explicit_impl(n, std::move(table), std::move(name));
  FiniteGroup tmp = make_group_from_impl(impl);
  impl->gens = greedy_generators(tmp);
  return make_group_from_impl(std::move(impl));
}

FiniteGroup make_cyclic(std::uint64_t n) {
  if (n == 0 || n > kExplicitOrderCap) throw std::invalid_argument("make_cyclic: order must be in [1, 4096]");
  std::vector<std::uint16_t> t(n * n);
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b) t[a * n + b] = static_cast<std::uint16_t>((a + b) % n);
  auto impl = explicit_impl(n, std::move(t), "cyclic:" + std::to_string(n));
  if (n > 1) impl->gens = {1};
  return make_group_from_impl(std::move(impl));
}

FiniteGroup make_elementary_abelian(std::uint64_t p, unsigned a) {
  if (!is_prime(p)) throw std::invalid_argument("make_elementary_abelian: p must be prime");
  std::uint64_t n = ipow(p, a);
  if (n > kExplicitOrderCap) throw std::invalid_argument("make_elementary_abelian: order exceeds 4096");
  AffineData tmp;
  tmp.p = p;
  tmp.a = a;
  tmp.q = n;
  std::vector<std::uint16_t> t(n * n);
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t y = 0; y < n; ++y)
      t[x * n + y] = static_cast<std::uint16_t>(tmp.add(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)));
  auto impl = explicit_impl(n, std::move(t), "elab:" + std::to_string(p) + "^" + std::to_string(a));
  for (unsigned i = 0; i < a; ++i) impl->gens.push_back(static_cast<Element>(ipow(p, i)));
  return make_group_from_impl(std::move(impl));
}

FiniteGroup make_direct_product(const FiniteGroup& x, const FiniteGroup& y) {
  std::uint64_t nx = x.order(), ny = y.order(), n = nx * ny;
  if (n > kExplicitOrderCap) throw std::invalid_argument("make_direct_product: order exceeds 4096");
  std::vector<std::uint16_t> t(n * n);
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b)
      t[a * n + b] = static_cast<std::uint16_t>(x.mul(static_cast<Element>(a / ny), static_cast<Element>(b / ny)) * ny +
                                                y.mul(static_cast<Element>(a % ny), static_cast<Element>(b % ny)));
  auto impl = explicit_impl(n, std::move(t), "prod:" + x.name() + "*" + y.name());
  for (Element g : x.generators()) impl->gens.push_back(static_cast<Element>(g * ny));
  for (Element g : y.generators()) impl->gens.push_back(g);
  return make_group_from_impl(std::move(impl));
}

bool is_irreducible_module(std::uint64_t p, unsigned a, const std::vector<Matrix>& group) {
  // For every projective point v, the submodule generated by v must be everything.
  std::uint64_t q = ipow(p, a);
  AffineData V;
  V.p = p;
  V.a = a;
  V.q = q;
  auto vec_times = [&](const std::vector<std::uint32_t>& v, const Matrix& m) {
    std::vector<std::uint32_t> r(a, 0);
    for (unsigned i = 0; i < a; ++i) {
      if (v[i] == 0) continue;
      for (unsigned j = 0; j < a; ++j) r[j] = static_cast<std::uint32_t>((r[j] + static_cast<std::uint64_t>(v[i]) * m[i * a + j]) % p);
    }
    return r;
  };
  for (std::uint32_t code = 1; code < q; ++code) {
    auto v = V.digits(code);
    // projective representative: last nonzero digit equal to 1
    unsigned last = a;
    for (unsigned i = a; i-- > 0;)
      if (v[i] != 0) {
        last = i;
        break;
      }
    if (v[last] != 1) continue;
    std::vector<std::vector<std::uint32_t>> basis{v};
    for (std::size_t k = 0; k < basis.size() && basis.size() < a; ++k) {
      for (const auto& m : group) {
        auto w = vec_times(basis[k], m);
        auto trial = basis;
        trial.push_back(w);
        if (matrix_rank(trial, p) > basis.size()) basis.push_back(w);
        if (basis.size() == a) break;
      }
    }
    if (basis.size() < a) return false;
  }
  return true;
}

FiniteGroup make_affine(std::uint64_t p, unsigned a, const std::vector<Matrix>& generators, const AffineOptions& opts, std::string name) {
  if (!is_prime(p)) throw std::invalid_argument("make_affine: p must be prime");
  if (p == 2) throw std::invalid_argument("make_affine: even order (p = 2)");
  if (a == 0) throw std::invalid_argument("make_affine: dimension must be positive");
  std::uint64_t q = ipow(p, a);
  if (q > opts.order_cap) throw std::invalid_argument("make_affine: p^a exceeds the order cap");
  std::vector<Matrix> gens;
  for (const auto& g : generators) {
    if (g.size() != static_cast<std::size_t>(a) * a) throw std::invalid_argument("make_affine: generator has wrong size");
    Matrix m(g);
    for (auto& x : m) x = static_cast<std::uint32_t>(x % p);
    std::vector<std::vector<std::uint32_t>> rows(a);
    for (unsigned i = 0; i < a; ++i) rows[i].assign(m.begin() + i * a, m.begin() + (i + 1) * a);
    if (matrix_rank(rows, p) != a) throw std::invalid_argument("make_affine: generator is not invertible");
    gens.push_back(std::move(m));
  }

  auto A = std::make_shared<AffineData>();
  A->p = p;
  A->a = a;
  A->q = q;
  A->h_generators = gens;

  // Enumerate H by BFS; parent/gen links give the multiplication table row by row.
  std::map<Matrix, std::uint32_t> index;
  std::vector<std::uint32_t> parent{0}, via{0};
  A->h_elements.push_back(identity_matrix(a));
  index.emplace(A->h_elements[0], 0);
  std::vector<std::vector<std::uint32_t>> right(gens.size());  // right[k][h] = h * gens[k]
  for (std::size_t i = 0; i < A->h_elements.size(); ++i) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Matrix prod = mat_mul(A->h_elements[i], gens[k], a, p);
      auto [it, fresh] = index.emplace(prod, static_cast<std::uint32_t>(A->h_elements.size()));
      if (fresh) {
        if (A->h_elements.size() >= opts.h_cap) throw std::invalid_argument("make_affine: |H| exceeds the enumeration cap");
        A->h_elements.push_back(std::move(prod));
        parent.push_back(static_cast<std::uint32_t>(i));
        via.push_back(static_cast<std::uint32_t>(k));
      }
      if (right[k].size() <= i) right[k].resize(i + 1);
      right[k][i] = it->second;
    }
  }
  std::uint64_t nh = A->h_elements.size();
  if (nh % 2 == 0) throw std::invalid_argument("make_affine: even order (|H| even)");
  if (nh * q > opts.order_cap) throw std::invalid_argument("make_affine: group order exceeds the cap");
  for (auto& r : right) r.resize(nh);
  std::vector<std::uint16_t> htab(nh * nh);
  for (std::uint64_t x = 0; x < nh; ++x) {
    htab[x * nh] = static_cast<std::uint16_t>(x);
    for (std::uint64_t y = 1; y < nh; ++y) htab[x * nh + y] = static_cast<std::uint16_t>(right[via[y]][htab[x * nh + parent[y]]]);
  }

  if (opts.require_irreducible && !is_irreducible_module(p, a, gens.empty() ? std::vector<Matrix>{identity_matrix(a)} : gens))
    throw std::invalid_argument("make_affine: module is not irreducible");
  // Distinct matrices act distinctly, so the action is faithful by construction.

  A->act.resize(nh * q);
  for (std::uint64_t h = 0; h < nh; ++h) {
    const Matrix& m = A->h_elements[h];
    for (std::uint32_t v = 0; v < q; ++v) {
      auto d = A->digits(v);
      std::vector<std::uint32_t> r(a, 0);
      for (unsigned i = 0; i < a; ++i) {
        if (d[i] == 0) continue;
        for (unsigned j = 0; j < a; ++j) r[j] = static_cast<std::uint32_t>((r[j] + static_cast<std::uint64_t>(d[i]) * m[i * a + j]) % p);
      }
      A->act[h * q + v] = A->encode(r);
    }
  }

  if (name.empty()) name = "affine:" + std::to_string(p) + "," + std::to_string(a) + ",gens=" + matrix_list_str(gens, a);
  auto himpl = explicit_impl(nh, std::move(htab), name + "/H");
  for (std::size_t k = 0; k < gens.size(); ++k) {
    Element g = right[k][0];
    if (g != 0 && std::find(himpl->gens.begin(), himpl->gens.end(), g) == himpl->gens.end()) himpl->gens.push_back(g);
  }
  auto hgroup = std::make_shared<const FiniteGroup>(make_group_from_impl(himpl));

  auto impl = std::make_shared<FiniteGroup::Impl>();
  impl->model = GroupModel::Affine;
  impl->order = nh * q;
  impl->name = std::move(name);
  impl->af = A;
  impl->h = hgroup;
  impl->hx = himpl->ex.get();
  for (Element g : hgroup->generators()) impl->gens.push_back(static_cast<Element>(g * q));
  for (unsigned i = 0; i < a; ++i) impl->gens.push_back(static_cast<Element>(ipow(p, i)));
  (void)opts.require_faithful;
  return make_group_from_impl(std::move(impl));
}

// ---- subgroups ----

bool Subgroup::contains(Element g) const { return std::binary_search(elements.begin(), elements.end(), g); }

Subgroup whole_group(const FiniteGroup& g) {
  Subgroup s;
  s.elements.resize(g.order());
  for (std::uint64_t i = 0; i < g.order(); ++i) s.elements[i] = static_cast<Element>(i);
  return s;
}

Subgroup trivial_subgroup() { return Subgroup{{0}}; }

Subgroup generate_subgroup(const FiniteGroup& g, const std::vector<Element>& gens) {
  ClosureBuilder b(g);
  for (Element x : gens) b.add_generator(x);
  return b.take();
}

Subgroup normal_closure(const FiniteGroup& g, const std::vector<Element>& gens) {
  ClosureBuilder b(g);
  for (Element x : gens) b.add_generator(x);
  for (std::size_t k = 0; k < b.gens().size(); ++k) {
    for (Element s : g.generators()) {
      Element y = g.conj(b.gens()[k], s);
      if (!b.contains(y)) b.add_generator(y);
    }
  }
  return b.take();
}

Subgroup derived_subgroup(const FiniteGroup& g) {
  std::vector<Element> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Element c = g.commutator(gens[i], gens[j]);
      if (c != 0) comms.push_back(c);
    }
  return normal_closure(g, comms);
}

Subgroup center(const FiniteGroup& g) {
  Subgroup z;
  for (Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Element s : g.generators()) {
      if (g.mul(x, s) != g.mul(s, x)) {
        central = false;
        break;
      }
    }
    if (central) z.elements.push_back(x);
  }
  return z;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  Subgroup r;
  std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(), std::back_inserter(r.elements));
  return r;
}

bool is_subgroup(const FiniteGroup& g, const Subgroup& s) {
  if (s.elements.empty() || !s.contains(0)) return false;
  return generate_subgroup(g, s.elements).size() == s.size();
}

bool is_normal(const FiniteGroup& g, const Subgroup& s) {
  for (Element x : s.elements)
    for (Element t : g.generators())
      if (!s.contains(g.conj(x, t))) return false;
  return true;
}

std::uint64_t element_order(const FiniteGroup& g, Element x) {
  std::uint64_t k = 1;
  Element y = x;
  while (y != 0) {
    y = g.mul(y, x);
    ++k;
  }
  return k;
}

bool is_abelian(const FiniteGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
  return true;
}

// ---- conjugacy classes ----

ConjugacyClassSet conjugacy_classes(const FiniteGroup& g) {
  ConjugacyClassSet cs;
  std::uint64_t n = g.order();
  cs.class_of.assign(n, kUnassigned);
  std::vector<Element> gens = g.generators();
  std::vector<Element> gens_inv;
  for (Element s : gens) gens_inv.push_back(g.inv(s));
  std::vector<Element> queue;
  for (Element x = 0; x < n; ++x) {
    if (cs.class_of[x] != kUnassigned) continue;
    auto c = static_cast<std::uint32_t>(cs.representatives.size());
    cs.representatives.push_back(x);
    cs.class_of[x] = c;
    queue.assign(1, x);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (std::size_t k = 0; k < gens.size(); ++k) {
        Element y = g.mul(gens_inv[k], g.mul(queue[i], gens[k]));
        if (cs.class_of[y] == kUnassigned) {
          cs.class_of[y] = c;
          queue.push_back(y);
        }
      }
    }
    cs.sizes.push_back(queue.size());
  }
  for (Element r : cs.representatives) {
    std::uint64_t o = element_order(g, r);
    cs.rep_orders.push_back(o);
    cs.exponent = lcm_u64(cs.exponent, o);
    cs.inverse_class.push_back(cs.class_of[g.inv(r)]);
  }
  for (auto pr : prime_divisors(n)) cs.prime_power_maps.emplace(pr, cs.power_map(g, static_cast<std::int64_t>(pr)));
  return cs;
}

std::vector<std::uint32_t> ConjugacyClassSet::power_map(const FiniteGroup& g, std::int64_t j) const {
  std::vector<std::uint32_t> out(count());
  for (std::size_t c = 0; c < count(); ++c) out[c] = class_of[g.pow(representatives[c], j)];
  return out;
}

std::vector<std::vector<Element>> ConjugacyClassSet::members() const {
  std::vector<std::vector<Element>> out(count());
  for (std::size_t c = 0; c < count(); ++c) out[c].reserve(sizes[c]);
  for (Element x = 0; x < class_of.size(); ++x) out[class_of[x]].push_back(x);
  return out;
}

std::uint64_t exponent(const FiniteGroup& g) {
  std::uint64_t e = 1;
  for (Element x = 0; x < g.order(); ++x) e = lcm_u64(e, element_order(g, x));
  return e;
}

std::optional<Subgroup> has_normal_p_complement(const FiniteGroup& g, std::uint64_t p) {
  return has_normal_p_complement(g, conjugacy_classes(g), p);
}

std::optional<Subgroup> has_normal_p_complement(const FiniteGroup& g, const ConjugacyClassSet& classes, std::uint64_t p) {
  std::uint64_t n = g.order();
  std::uint64_t target = coprime_part(n, p);
  if (target == n) return whole_group(g);
  // A normal p-complement must be exactly the set of p'-elements.
  std::vector<char> pprime(n, 0);
  std::uint64_t count = 0;
  for (Element x = 0; x < n; ++x) {
    if (classes.rep_orders[classes.class_of[x]] % p != 0) {
      pprime[x] = 1;
      ++count;
    }
  }
  if (count != target) return std::nullopt;
  ClosureBuilder b(g);
  for (Element x = 0; x < n; ++x) {
    if (!pprime[x] || b.contains(x)) continue;
    bool ok = b.add_generator(x, [&](Element y, std::size_t size) { return pprime[y] && size <= target; });
    if (!ok) return std::nullopt;
  }
  if (b.size() != target) return std::nullopt;
  return b.take();
}

EmbeddedGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& s, std::string name) {
  std::uint64_t m = s.size();
  if (m > kExplicitOrderCap) throw std::invalid_argument("subgroup_as_group: subgroup order exceeds 4096");
  auto local = [&](Element x) {
    auto it = std::lower_bound(s.elements.begin(), s.elements.end(), x);
    if (it == s.elements.end() || *it != x) throw std::invalid_argument("subgroup_as_group: not closed");
    return static_cast<std::uint16_t>(it - s.elements.begin());
  };
  std::vector<std::uint16_t> t(m * m);
  for (std::uint64_t i = 0; i < m; ++i)
    for (std::uint64_t j = 0; j < m; ++j) t[i * m + j] = local(g.mul(s.elements[i], s.elements[j]));
  if (name.empty()) name = g.name() + "/sub" + std::to_string(m);
  return {make_explicit(m, std::move(t), std::move(name), false), s.elements};
}

QuotientGroup quotient(const FiniteGroup& g, const Subgroup& nsub) {
  std::uint64_t n = g.order();
  if (n % nsub.size() != 0) throw std::invalid_argument("quotient: not a subgroup");
  std::uint64_t k = n / nsub.size();
  if (k > kExplicitOrderCap) throw std::invalid_argument("quotient: quotient order exceeds 4096");
  if (!is_normal(g, nsub)) throw std::invalid_argument("quotient: subgroup is not normal");
  QuotientGroup out;
  out.projection.assign(n, kUnassigned);
  std::vector<Element> reps;
  for (Element x = 0; x < n; ++x) {
    if (out.projection[x] != kUnassigned) continue;
    auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (Element y : nsub.elements) out.projection[g.mul(x, y)] = id;
  }
  std::vector<std::uint16_t> t(k * k);
  for (std::uint64_t a = 0; a < k; ++a)
    for (std::uint64_t b = 0; b < k; ++b) t[a * k + b] = static_cast<std::uint16_t>(out.projection[g.mul(reps[a], reps[b])]);
  out.group = make_explicit(k, std::move(t), g.name() + "/N" + std::to_string(nsub.size()), false);
  return out;
}

}  // namespace acdkit
