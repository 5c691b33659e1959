#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "acdkit/character.hpp"
#include "acdkit/numtheory.hpp"

namespace acdkit {

using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>;

namespace detail {

std::uint64_t prime_one_mod(std::uint64_t e, std::uint64_t lower_bound) {
  const std::uint64_t limit = std::uint64_t{1} << 62;
  std::uint64_t k = lower_bound / e + 1;
  for (; k * e + 1 < limit; ++k) {
    std::uint64_t q = k * e + 1;
    if (q > lower_bound && is_prime(q)) return q;
  }
  throw ModulusSelectionError("no prime q = 1 mod " + std::to_string(e) + " above " + std::to_string(lower_bound));
}

std::vector<std::uint64_t> charpoly_mod(Mat a, std::uint64_t q) {
  const std::size_t n = a.size();
  auto sub = [q](std::uint64_t x, std::uint64_t y) { return x >= y ? x - y : x + q - y; };
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && a[piv][m - 1] == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      std::swap(a[piv], a[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(a[r][piv], a[r][m]);
    }
    std::uint64_t inv = invmod(a[m][m - 1], q);
    for (std::size_t i = m + 1; i < n; ++i) {
      if (a[i][m - 1] == 0) continue;
      std::uint64_t u = mulmod(a[i][m - 1], inv, q);
      for (std::size_t c = 0; c < n; ++c) a[i][c] = sub(a[i][c], mulmod(u, a[m][c], q));
      for (std::size_t r = 0; r < n; ++r) a[r][m] = (a[r][m] + mulmod(u, a[r][i], q)) % q;
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_i (h_{m-i,m} prod h_{j,j-1}) p_{m-i-1}
  std::vector<Vec> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    Vec cur(m + 1, 0);
    for (std::size_t k = 0; k < p[m - 1].size(); ++k) {
      cur[k + 1] = (cur[k + 1] + p[m - 1][k]) % q;
      cur[k] = sub(cur[k], mulmod(a[m - 1][m - 1], p[m - 1][k], q));
    }
    std::uint64_t t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = mulmod(t, a[m - i][m - i - 1], q);
      if (t == 0) break;
      std::uint64_t f = mulmod(t, a[m - i - 1][m - 1], q);
      if (f == 0) continue;
      const Vec& prev = p[m - i - 1];
      for (std::size_t k = 0; k < prev.size(); ++k) cur[k] = sub(cur[k], mulmod(f, prev[k], q));
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

Mat nullspace_mod(Mat a, std::uint64_t q) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::uint64_t inv = invmod(a[r][c], q);
    for (auto& x : a[r]) x = mulmod(x, inv, q);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      std::uint64_t f = a[i][c];
      for (std::size_t k = 0; k < cols; ++k) a[i][k] = (a[i][k] + q - mulmod(f, a[r][k], q)) % q;
    }
    pivots.push_back(c);
    ++r;
  }
  Mat basis;
  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = (q - a[i][free]) % q;
    basis.push_back(std::move(v));
  }
  return basis;
}

void sort_characters(CharacterTable& t, std::vector<std::size_t>* permutation) {
  std::vector<std::vector<std::string>> keys(t.characters.size());
  for (std::size_t i = 0; i < keys.size(); ++i)
    for (const auto& v : t.characters[i].values) keys[i].push_back(v.str());
  std::vector<std::size_t> idx(keys.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    if (t.characters[x].degree != t.characters[y].degree) return t.characters[x].degree < t.characters[y].degree;
    return keys[x] < keys[y];
  });
  std::vector<Character> sorted;
  sorted.reserve(idx.size());
  for (auto i : idx) sorted.push_back(std::move(t.characters[i]));
  t.characters = std::move(sorted);
  if (permutation) *permutation = std::move(idx);
}

}  // namespace detail

namespace {

// Reduced row echelon basis of a subspace of F_q^r.
struct Space {
  Mat basis;
  std::vector<std::size_t> pivots;
};

Space rref_space(Mat vecs, std::uint64_t q) {
  Space s;
  std::size_t rows = vecs.size();
  std::size_t cols = rows ? vecs[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && vecs[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(vecs[piv], vecs[r]);
    std::uint64_t inv = invmod(vecs[r][c], q);
    for (auto& x : vecs[r]) x = mulmod(x, inv, q);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || vecs[i][c] == 0) continue;
      std::uint64_t f = vecs[i][c];
      for (std::size_t k = 0; k < cols; ++k) vecs[i][k] = (vecs[i][k] + q - mulmod(f, vecs[r][k], q)) % q;
    }
    s.pivots.push_back(c);
    ++r;
  }
  vecs.resize(r);
  s.basis = std::move(vecs);
  return s;
}

class DixonSolver {
 public:
  DixonSolver(const FiniteGroup& g, const ConjugacyClassSet& cs, std::uint64_t q)
      : g_(g), cs_(cs), q_(q), r_(cs.count()), members_(cs.members()) {}

  // (M)_{ik} = sum_j w_j #{x in C_j : x^-1 z_k in C_i}
  Mat class_matrix(const Vec& w) const {
    Mat m(r_, Vec(r_, 0));
    for (std::size_t j = 0; j < r_; ++j) {
      if (w[j] == 0) continue;
      for (Element x : members_[j]) {
        Element xi = g_.inv(x);
        for (std::size_t k = 0; k < r_; ++k) {
          auto i = cs_.class_of[g_.mul(xi, cs_.representatives[k])];
          m[i][k] += w[j];
        }
      }
      for (auto& row : m)
        for (auto& x : row) x %= q_;
    }
    return m;
  }

  // Splits `s` into eigenspaces of m restricted to it.
  std::vector<Space> split(const Space& s, const Mat& m) const {
    std::size_t d = s.basis.size();
    Mat a(d, Vec(d, 0));
    for (std::size_t col = 0; col < d; ++col) {
      const Vec& b = s.basis[col];
      for (std::size_t t = 0; t < d; ++t) {
        std::size_t row = s.pivots[t];
        unsigned __int128 acc = 0;
        for (std::size_t k = 0; k < r_; ++k)
          if (b[k]) acc += static_cast<unsigned __int128>(m[row][k]) * b[k];
        a[t][col] = static_cast<std::uint64_t>(acc % q_);
      }
    }
    auto poly = detail::charpoly_mod(a, q_);
    std::vector<std::uint64_t> roots;
    for (std::uint64_t x = 0; x < q_ && roots.size() < d; ++x) {
      std::uint64_t v = 0;
      for (std::size_t k = poly.size(); k-- > 0;) v = (mulmod(v, x, q_) + poly[k]) % q_;
      if (v == 0) roots.push_back(x);
    }
    if (roots.size() <= 1) return {s};
    std::vector<Space> out;
    std::size_t total = 0;
    for (auto lambda : roots) {
      Mat shifted = a;
      for (std::size_t i = 0; i < d; ++i) shifted[i][i] = (shifted[i][i] + q_ - lambda) % q_;
      auto ker = detail::nullspace_mod(shifted, q_);
      Mat ambient;
      for (const auto& c : ker) {
        Vec v(r_, 0);
        for (std::size_t t = 0; t < d; ++t) {
          if (c[t] == 0) continue;
          for (std::size_t k = 0; k < r_; ++k) v[k] = (v[k] + mulmod(c[t], s.basis[t][k], q_)) % q_;
        }
        ambient.push_back(std::move(v));
      }
      total += ambient.size();
      out.push_back(rref_space(std::move(ambient), q_));
    }
    if (total != d) throw std::runtime_error("generic_table: class matrix not diagonalizable modulo q");
    return out;
  }

 private:
  const FiniteGroup& g_;
  const ConjugacyClassSet& cs_;
  std::uint64_t q_;
  std::size_t r_;
  std::vector<std::vector<Element>> members_;
};

std::vector<Character> abelian_characters(const FiniteGroup& g, const ConjugacyClassSet& cs) {
  const std::uint64_t n = g.order();
  const std::uint64_t e = cs.exponent;
  // Each element is its own class; exps[c][x] is the exponent k with chi_c(x) = zeta_e^k.
  std::vector<Element> elems{0};
  std::vector<char> in(n, 0);
  in[0] = 1;
  std::vector<std::vector<std::int64_t>> exps{std::vector<std::int64_t>(n, -1)};
  exps[0][0] = 0;
  for (Element s : g.generators()) {
    if (in[s]) continue;
    std::uint64_t m = 1;
    Element pw = s;
    while (!in[pw]) {
      pw = g.mul(pw, s);
      ++m;
    }
    std::vector<Element> grown;
    grown.reserve(elems.size() * m);
    Element sj = 0;
    std::vector<Element> spow(m);
    for (std::uint64_t j = 0; j < m; ++j) {
      spow[j] = sj;
      sj = g.mul(sj, s);
    }
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& chi : exps) {
      std::int64_t c = chi[pw];
      if (c % static_cast<std::int64_t>(m) != 0) throw std::logic_error("abelian_characters: root extraction failed");
      for (std::uint64_t j = 0; j < m; ++j) {
        std::int64_t t = c / static_cast<std::int64_t>(m) + static_cast<std::int64_t>(j * (e / m));
        std::vector<std::int64_t> ext(n, -1);
        for (Element x : elems)
          for (std::uint64_t k = 0; k < m; ++k)
            ext[g.mul(x, spow[k])] = static_cast<std::int64_t>((static_cast<std::uint64_t>(chi[x]) + k * static_cast<std::uint64_t>(t)) % e);
        next.push_back(std::move(ext));
      }
    }
    for (Element x : elems)
      for (std::uint64_t k = 0; k < m; ++k) {
        Element y = g.mul(x, spow[k]);
        if (!in[y]) {
          in[y] = 1;
          grown.push_back(y);
        }
      }
    for (Element y : grown) elems.push_back(y);
    exps = std::move(next);
  }
  if (elems.size() != n) throw std::logic_error("abelian_characters: generators do not generate");
  std::vector<CyclotomicNumber> roots;
  for (std::uint64_t k = 0; k < e; ++k) roots.push_back(CyclotomicNumber::root_of_unity(e, static_cast<std::int64_t>(k)));
  std::vector<Character> out;
  for (const auto& chi : exps) {
    Character c;
    c.degree = 1;
    for (std::size_t cl = 0; cl < cs.count(); ++cl) c.values.push_back(roots[chi[cs.representatives[cl]]]);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Character> dixon_characters(const FiniteGroup& g, const ConjugacyClassSet& cs, const GenericOptions& opts) {
  const std::uint64_t n = g.order();
  const std::uint64_t e = cs.exponent;
  const std::size_t r = cs.count();
  auto bound = static_cast<std::uint64_t>(2.0 * std::sqrt(static_cast<double>(n)));
  while (bound * bound < 4 * n) ++bound;
  const std::uint64_t q = detail::prime_one_mod(e, bound);
  if (q >= (std::uint64_t{1} << 40)) throw ModulusSelectionError("generic_table: modulus too large");
  const std::uint64_t z = powmod(primitive_root(q), (q - 1) / e, q);

  DixonSolver solver(g, cs, q);
  Mat ident(r, Vec(r, 0));
  for (std::size_t i = 0; i < r; ++i) ident[i][i] = 1;
  std::vector<Space> spaces{rref_space(ident, q)};
  auto unsplit = [&] { return std::any_of(spaces.begin(), spaces.end(), [](const Space& s) { return s.basis.size() > 1; }); };
  auto split_all = [&](const Mat& m) {
    std::vector<Space> next;
    for (const auto& s : spaces) {
      if (s.basis.size() == 1) {
        next.push_back(s);
        continue;
      }
      for (auto& t : solver.split(s, m)) next.push_back(std::move(t));
    }
    spaces = std::move(next);
  };

  std::mt19937_64 rng(opts.seed);
  auto random_weights = [&] {
    Vec w(r);
    for (auto& x : w) x = rng() % q;
    return w;
  };
  if (r > 1) split_all(solver.class_matrix(random_weights()));
  for (std::size_t j = 1; j < r && unsplit(); ++j) {
    Vec w(r, 0);
    w[j] = 1;
    split_all(solver.class_matrix(w));
  }
  for (int attempt = 0; attempt < 32 && unsplit(); ++attempt) split_all(solver.class_matrix(random_weights()));
  if (unsplit()) throw std::runtime_error("generic_table: eigenspaces did not split");
  if (spaces.size() != r) throw std::runtime_error("generic_table: wrong number of characters");

  std::vector<std::uint64_t> inv_size(r);
  for (std::size_t i = 0; i < r; ++i) inv_size[i] = invmod(cs.sizes[i] % q, q);
  auto divs = divisors(n);

  std::vector<Character> out;
  for (const auto& s : spaces) {
    Vec w = s.basis[0];
    if (w[0] == 0) throw std::runtime_error("generic_table: eigenvector vanishes on the identity class");
    std::uint64_t scale = invmod(w[0], q);
    for (auto& x : w) x = mulmod(x, scale, q);
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < r; ++i) sum = (sum + mulmod(mulmod(w[i], w[cs.inverse_class[i]], q), inv_size[i], q)) % q;
    std::uint64_t target = mulmod(n % q, invmod(sum, q), q);
    std::int64_t degree = -1;
    for (auto d : divs) {
      if (d * d > n) break;
      if (d * d % q == target) {
        degree = static_cast<std::int64_t>(d);
        break;
      }
    }
    if (degree < 0) throw std::runtime_error("generic_table: degree recovery failed");

    Vec modval(r);
    for (std::size_t i = 0; i < r; ++i) modval[i] = mulmod(mulmod(static_cast<std::uint64_t>(degree), w[i], q), inv_size[i], q);

    Character chi;
    chi.degree = degree;
    for (std::size_t i = 0; i < r; ++i) {
      std::uint64_t o = cs.rep_orders[i];
      std::uint64_t y = powmod(z, e / o, q);
      std::uint64_t yinv = invmod(y, q);
      Vec yinv_pow(o);
      yinv_pow[0] = 1;
      for (std::uint64_t k = 1; k < o; ++k) yinv_pow[k] = mulmod(yinv_pow[k - 1], yinv, q);
      std::vector<std::uint64_t> pcls(o);
      Element x = 0;
      for (std::uint64_t s2 = 0; s2 < o; ++s2) {
        pcls[s2] = modval[cs.class_of[x]];
        x = g.mul(x, cs.representatives[i]);
      }
      std::uint64_t oinv = invmod(o % q, q);
      std::vector<std::int64_t> counts(o);
      for (std::uint64_t l = 0; l < o; ++l) {
        unsigned __int128 acc = 0;
        for (std::uint64_t s2 = 0; s2 < o; ++s2) acc += static_cast<unsigned __int128>(pcls[s2]) * yinv_pow[(l * s2) % o];
        std::uint64_t ml = mulmod(static_cast<std::uint64_t>(acc % q), oinv, q);
        if (ml > static_cast<std::uint64_t>(degree)) throw std::runtime_error("generic_table: eigenvalue multiplicity out of range");
        counts[l] = static_cast<std::int64_t>(ml);
      }
      chi.values.push_back(from_exponent_counts(o, counts));
    }
    out.push_back(std::move(chi));
  }
  return out;
}

}  // namespace

CharacterTable generic_table(const FiniteGroup& g, const GenericOptions& opts) {
  if (g.order() > kExplicitOrderCap) throw std::invalid_argument("generic_table: group order exceeds 4096");
  CharacterTable t;
  t.group = g;
  t.classes = conjugacy_classes(g);
  t.provenance = TableProvenance::Generic;
  if (opts.abelian_shortcut && is_abelian(g)) {
    t.characters = abelian_characters(g, t.classes);
  } else {
    t.characters = dixon_characters(g, t.classes, opts);
  }
  detail::sort_characters(t);
  return t;
}

CharacterTable character_table(const FiniteGroup& g, const GenericOptions& opts) {
  if (g.model() == GroupModel::Affine) return clifford_table(g, opts);
  return generic_table(g, opts);
}

}  // namespace acdkit
