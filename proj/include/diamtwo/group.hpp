#pragma once

// Explicit generator sets, brute-forced form-preserving groups, and orbit
// computation by closure on lexicographically numbered vectors.

#include <cstdint>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "diamtwo/forms.hpp"
#include "diamtwo/linalg.hpp"

namespace diamtwo {

/// Largest space the orbit oracle will index.
inline constexpr std::uint64_t kOrbitCap = std::uint64_t{1} << 22;
/// Largest matrix count the brute-force group search will scan.
inline constexpr std::uint64_t kBruteForceCap = std::uint64_t{1} << 24;

struct GroupSpec {
  std::string name;
  Field field;
  std::size_t dim = 0;
  std::vector<SemilinearMap> generators;
};

namespace detail {

inline Mat elementary(const Field& f, std::size_t n, std::size_t i, std::size_t j, Elem lambda) {
  Mat m = Mat::identity(f, n);
  m(i, j) = f.add(m(i, j), lambda);
  return m;
}

inline Mat diag_first(const Field& f, std::size_t n, Elem a) {
  Mat m = Mat::identity(f, n);
  m(0, 0) = a;
  return m;
}

/// Elements 1, x, ..., x^(e-1): a GF(p)-basis of F_q.
inline std::vector<Elem> prime_basis(const Field& f) {
  std::vector<Elem> out;
  for (unsigned k = 0; k < f.degree(); ++k) {
    std::vector<std::uint32_t> c(f.degree(), 0);
    c[k] = 1;
    out.push_back(f.from_coeffs(c));
  }
  return out;
}

inline Vec first_nonzero_normalised(const Field& f, Vec v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i].id != 0) {
      const Elem inv = f.inv(v[i]);
      for (auto& x : v.entries) x = f.mul(inv, x);
      return v;
    }
  return v;
}

inline std::size_t block_swap_index(std::size_t idx, std::size_t m, std::size_t a, std::size_t b) {
  const std::size_t blk = idx / m, off = idx % m;
  if (blk == a) return b * m + off;
  if (blk == b) return a * m + off;
  return idx;
}

inline Mat permutation_matrix(const Field& f, const std::vector<std::size_t>& image) {
  Mat m(image.size(), image.size());
  for (std::size_t i = 0; i < image.size(); ++i) m(i, image[i]) = f.one();
  return m;
}

}  // namespace detail

/// Generators of GL(n) over the subfield spanned by `scalars`: diag(w, 1, ..., 1) with w
/// primitive in that subfield, and the elementary transvections I + lambda E_ij with
/// lambda running over a GF(p)-basis of it.
inline std::vector<Mat> gl_generators(const Field& f, std::size_t n, Elem primitive, const std::vector<Elem>& scalars) {
  std::vector<Mat> out;
  if (primitive != f.one()) out.push_back(detail::diag_first(f, n, primitive));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (Elem l : scalars) out.push_back(detail::elementary(f, n, i, j, l));
    }
  return out;
}

inline std::vector<Mat> gl_generators(const Field& f, std::size_t n) {
  return gl_generators(f, n, f.primitive(), detail::prime_basis(f));
}

/// Standard symplectic Gram matrix: x_i paired with y_i, x's first.
inline Mat symplectic_gram(const Field& f, std::size_t n) { return standard_form(FormKind::symplectic, n, f).gram; }

/// Symplectic transvections v -> v + lambda (v G a^T) a, a over projective points whose
/// entries lie in `point_entries`, lambda over `scalars`.
inline std::vector<Mat> sp_generators(const Field& f, const Mat& gram, const std::vector<Elem>& scalars,
                                      const std::vector<Elem>& point_entries) {
  const std::size_t n = gram.rows();
  std::vector<Mat> out;
  const std::uint64_t base = point_entries.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= base;
  std::set<std::vector<Elem>> seen;
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    Vec a = Vec::zeros(n);
    std::uint64_t x = idx;
    for (std::size_t i = n; i-- > 0;) {
      a[i] = point_entries[x % base];
      x /= base;
    }
    if (a.is_zero()) continue;
    a = detail::first_nonzero_normalised(f, a);
    if (!seen.insert(a.entries).second) continue;
    const Vec ga = vec_mat(f, a, transpose(gram));  // column G a^T as a row
    for (Elem l : scalars) {
      Mat m = Mat::identity(f, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = f.add(m(i, j), f.mul(l, f.mul(ga[i], a[j])));
      out.push_back(std::move(m));
    }
  }
  return out;
}

/// The similarity x_i -> mu x_i, y_i -> y_i of the standard symplectic basis.
inline Mat delta_mu(const Field& f, std::size_t n, Elem mu) {
  Mat m = Mat::identity(f, n);
  for (std::size_t i = 0; i < n / 2; ++i) m(i, i) = mu;
  return m;
}

inline void add_frobenius(GroupSpec& g) {
  if (g.field.degree() > 1) g.generators.push_back(SemilinearMap::pure_frobenius(g.field, g.dim));
}

/// GL(m,q) wr Sym(t) extended by field automorphisms; blocks are consecutive.
inline GroupSpec generators_c2_linear(const Field& f, std::size_t m, std::size_t t) {
  if (m < 1 || t < 2) throw std::invalid_argument("c2: need m >= 1 and t >= 2");
  const std::size_t n = m * t;
  GroupSpec g{"C2(GL(" + std::to_string(m) + "," + std::to_string(f.order()) + ") wr S" + std::to_string(t) + ")", f, n, {}};
  for (const Mat& h : gl_generators(f, m)) g.generators.push_back(SemilinearMap::linear(embed_block(f, n, 0, h)));
  std::vector<std::size_t> swap(n), cycle(n);
  for (std::size_t i = 0; i < n; ++i) {
    swap[i] = detail::block_swap_index(i, m, 0, 1);
    cycle[i] = ((i / m + 1) % t) * m + i % m;
  }
  g.generators.push_back(SemilinearMap::linear(detail::permutation_matrix(f, swap)));
  if (t > 2) g.generators.push_back(SemilinearMap::linear(detail::permutation_matrix(f, cycle)));
  add_frobenius(g);
  return g;
}

/// Gram matrix of t orthogonal standard symplectic blocks of size m.
inline Mat block_symplectic_gram(const Field& f, std::size_t m, std::size_t t) {
  Mat out(m * t, m * t);
  const Mat j = symplectic_gram(f, m);
  for (std::size_t b = 0; b < t; ++b)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < m; ++k) out(b * m + i, b * m + k) = j(i, k);
  return out;
}

/// Sp(m,q)^t with a common similarity factor, block permutations and field automorphisms.
inline GroupSpec generators_c2_sp_case1(const Field& f, std::size_t m, std::size_t t) {
  if (m < 2 || m % 2 || t < 2) throw std::invalid_argument("c2sp1: need m even and t >= 2");
  const std::size_t n = m * t;
  GroupSpec g{"C2Sp1(Sp(" + std::to_string(m) + "," + std::to_string(f.order()) + ")^" + std::to_string(t) + ")", f, n, {}};
  std::vector<Elem> all;
  for (std::uint32_t i = 0; i < f.order(); ++i) all.push_back(Elem{i});
  for (const Mat& h : sp_generators(f, symplectic_gram(f, m), detail::prime_basis(f), all))
    g.generators.push_back(SemilinearMap::linear(embed_block(f, n, 0, h)));
  Mat delta = Mat::identity(f, n);
  for (std::size_t b = 0; b < t; ++b)
    for (std::size_t i = 0; i < m / 2; ++i) delta(b * m + i, b * m + i) = f.primitive();
  if (f.order() > 2) g.generators.push_back(SemilinearMap::linear(delta));
  std::vector<std::size_t> swap(n), cycle(n);
  for (std::size_t i = 0; i < n; ++i) {
    swap[i] = detail::block_swap_index(i, m, 0, 1);
    cycle[i] = ((i / m + 1) % t) * m + i % m;
  }
  g.generators.push_back(SemilinearMap::linear(detail::permutation_matrix(f, swap)));
  if (t > 2) g.generators.push_back(SemilinearMap::linear(detail::permutation_matrix(f, cycle)));
  add_frobenius(g);
  return g;
}

/// Pairs (g, g^-T) on the two totally singular halves, the half swap, and field automorphisms.
inline GroupSpec generators_c2_sp_case2(const Field& f, std::size_t m) {
  if (m < 1) throw std::invalid_argument("c2sp2: need m >= 1");
  const std::size_t n = 2 * m;
  GroupSpec g{"C2Sp2(GL(" + std::to_string(m) + "," + std::to_string(f.order()) + ").2)", f, n, {}};
  for (const Mat& h : gl_generators(f, m)) {
    const Mat hit = inverse(f, transpose(h));
    Mat x = Mat::identity(f, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        x(i, j) = h(i, j);
        x(m + i, m + j) = hit(i, j);
      }
    g.generators.push_back(SemilinearMap::linear(std::move(x)));
  }
  std::vector<std::size_t> swap(n);
  for (std::size_t i = 0; i < n; ++i) swap[i] = (i + m) % n;
  g.generators.push_back(SemilinearMap::linear(detail::permutation_matrix(f, swap)));
  add_frobenius(g);
  return g;
}

/// GL(k,q) (x) GL(m,q) extended by field automorphisms; for k = m also the factor swap.
inline GroupSpec generators_tensor(const Field& f, std::size_t k, std::size_t m) {
  if (k < 2 || m < 2) throw std::invalid_argument("tensor: need k, m >= 2");
  const std::size_t n = k * m;
  GroupSpec g{"C4(GL(" + std::to_string(k) + ")xGL(" + std::to_string(m) + ")," + std::to_string(f.order()) + ")", f, n, {}};
  const Mat ik = Mat::identity(f, k), im = Mat::identity(f, m);
  for (const Mat& h : gl_generators(f, k)) g.generators.push_back(SemilinearMap::linear(kron(f, h, im)));
  for (const Mat& h : gl_generators(f, m)) g.generators.push_back(SemilinearMap::linear(kron(f, ik, h)));
  if (k == m) {
    std::vector<std::size_t> sw(n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < m; ++j) sw[i * m + j] = j * m + i;
    g.generators.push_back(SemilinearMap::linear(detail::permutation_matrix(f, sw)));
    g.name = "C7(GL(" + std::to_string(m) + "," + std::to_string(f.order()) + ") wr_tensor S2)";
  }
  add_frobenius(g);
  return g;
}

/// Subfield of index r in a field of order q0^r.
inline Subfield subfield_of_index(const Field& f, unsigned r) {
  if (r < 2 || f.degree() % r) throw std::invalid_argument("subfield index must divide the field degree");
  return Subfield(f, f.degree() / r);
}

/// GL(n,q0) o Z_{q-1} extended by field automorphisms of F_q.
inline GroupSpec generators_c5(const Field& f, std::size_t n, unsigned r) {
  const Subfield sub = subfield_of_index(f, r);
  GroupSpec g{"C5(GL(" + std::to_string(n) + "," + std::to_string(sub.order()) + ")oZ" + std::to_string(f.order() - 1) + ")", f, n, {}};
  const Field gfp = Field::make(f.characteristic(), 1);
  std::vector<Elem> sub_scalars;
  {
    Elem x = f.one();
    std::vector<Vec> rows;
    for (std::uint32_t i = 0; sub_scalars.size() < sub.degree() && i < f.order(); ++i) {
      rows.push_back(prime_coords(gfp, f, x));
      if (rank_of(gfp, rows) == rows.size())
        sub_scalars.push_back(x);
      else
        rows.pop_back();
      x = f.mul(x, sub.primitive());
    }
  }
  for (const Mat& h : gl_generators(f, n, sub.primitive(), sub_scalars)) g.generators.push_back(SemilinearMap::linear(h));
  g.generators.push_back(SemilinearMap::linear(scale(f, f.primitive(), Mat::identity(f, n))));
  add_frobenius(g);
  return g;
}

/// GSp(n,q0) o Z_{q-1} extended by field automorphisms of F_q.
inline GroupSpec generators_c5_sp(const Field& f, std::size_t n, unsigned r) {
  if (n % 2) throw std::invalid_argument("c5sp: need n even");
  const Subfield sub = subfield_of_index(f, r);
  GroupSpec g{"C5Sp(GSp(" + std::to_string(n) + "," + std::to_string(sub.order()) + ")oZ" + std::to_string(f.order() - 1) + ")", f, n, {}};
  const Field gfp = Field::make(f.characteristic(), 1);
  std::vector<Elem> sub_scalars;
  {
    Elem x = f.one();
    std::vector<Vec> rows;
    for (std::uint32_t i = 0; sub_scalars.size() < sub.degree() && i < f.order(); ++i) {
      rows.push_back(prime_coords(gfp, f, x));
      if (rank_of(gfp, rows) == rows.size())
        sub_scalars.push_back(x);
      else
        rows.pop_back();
      x = f.mul(x, sub.primitive());
    }
  }
  for (const Mat& h : sp_generators(f, symplectic_gram(f, n), sub_scalars, sub.elements()))
    g.generators.push_back(SemilinearMap::linear(h));
  if (sub.order() > 2) g.generators.push_back(SemilinearMap::linear(delta_mu(f, n, sub.primitive())));
  g.generators.push_back(SemilinearMap::linear(scale(f, f.primitive(), Mat::identity(f, n))));
  add_frobenius(g);
  return g;
}

/// First (beta, gamma) in enumeration order with beta^2 + gamma^2 = -1.
inline std::pair<Elem, Elem> c6_beta_gamma(const Field& f) {
  const Elem minus_one = f.neg(f.one());
  for (std::uint32_t b = 0; b < f.order(); ++b)
    for (std::uint32_t c = 0; c < f.order(); ++c) {
      const Elem bb{b}, cc{c};
      if (f.add(f.mul(bb, bb), f.mul(cc, cc)) == minus_one) return {bb, cc};
    }
  throw std::logic_error("no solution to beta^2 + gamma^2 = -1");
}

/// Scalars extended by the quaternion pair a, c on F_q^2 (q odd prime).
inline GroupSpec generators_c6_t1_type4(std::uint32_t q) {
  if (q % 2 == 0 || !is_prime(q)) throw std::invalid_argument("c6: q must be an odd prime");
  const Field f = Field::make(q, 1);
  GroupSpec g{"C6(Zo2^(1+2)," + std::to_string(q) + ")", f, 2, {}};
  const auto [b, c] = c6_beta_gamma(f);
  g.generators.push_back(SemilinearMap::linear(Mat::from_ints(f, 2, 2, {0, 1, -1, 0})));
  Mat cm(2, 2);
  cm(0, 0) = b;
  cm(0, 1) = c;
  cm(1, 0) = c;
  cm(1, 1) = f.neg(b);
  g.generators.push_back(SemilinearMap::linear(cm));
  g.generators.push_back(SemilinearMap::linear(scale(f, f.primitive(), Mat::identity(f, 2))));
  return g;
}

// ---------------------------------------------------------------------------
// Brute force over all matrices.

enum class Preservation { isometry, similarity, semisimilarity };

namespace detail {

/// Coefficient matrix of v -> Q(v M): upper-triangular normalisation of M A M^T.
inline Mat upper_normalise(const Field& f, const Mat& m) {
  Mat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out(i, i) = m(i, i);
    for (std::size_t j = i + 1; j < m.cols(); ++j) out(i, j) = f.add(m(i, j), m(j, i));
  }
  return out;
}

}  // namespace detail

/// Does the semilinear map scale the form by lambda up to its own field automorphism?
inline bool preserves_form(const ClassicalForm& form, const SemilinearMap& g, Elem lambda) {
  const Field& f = form.field;
  if (is_quadratic(form.kind)) {
    const Mat img = detail::upper_normalise(f, mat_mul(f, mat_mul(f, g.matrix, form.quad), transpose(g.matrix)));
    return img == scale(f, lambda, frobenius(f, form.quad, g.frob));
  }
  const Mat right = form.kind == FormKind::unitary ? frobenius(f, transpose(g.matrix), form.conj_iterate()) : transpose(g.matrix);
  return mat_mul(f, mat_mul(f, g.matrix, form.gram), right) == scale(f, lambda, frobenius(f, form.gram, g.frob));
}

/// All invertible (semi)linear maps preserving the form in the requested sense.
///
/// Rows are chosen one at a time and every form value among chosen rows is checked
/// as soon as it is determined.
inline std::vector<SemilinearMap> brute_force_group(const ClassicalForm& form, Preservation kind) {
  const Field& f = form.field;
  const std::size_t n = form.n;
  const std::uint64_t q = f.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n * n; ++i) {
    total *= q;
    if (total > kBruteForceCap) throw std::invalid_argument("brute-force group search exceeds cap q^(n^2) <= 2^24");
  }
  const Space row_space(f, n);
  const bool quad = is_quadratic(form.kind);
  const bool unitary = form.kind == FormKind::unitary;

  auto value = [&](const Vec& u, const Vec& v) {
    Elem s = f.zero();
    const Vec w = unitary ? frobenius(f, v, form.conj_iterate()) : v;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s = f.add(s, f.mul(u[i], f.mul(form.gram(i, j), w[j])));
    return s;
  };

  std::vector<SemilinearMap> out;
  const unsigned frobs = kind == Preservation::semisimilarity ? f.degree() : 1;
  std::vector<Elem> lambdas;
  if (kind == Preservation::isometry)
    lambdas.push_back(f.one());
  else
    for (std::uint32_t l = 1; l < q; ++l) lambdas.push_back(Elem{l});

  std::vector<Vec> all_rows;
  for (std::uint64_t id = 1; id < row_space.size(); ++id) all_rows.push_back(row_space.decode(id));

  for (unsigned k = 0; k < frobs; ++k) {
    const Mat tgt_gram = frobenius(f, form.gram, k);
    const Mat tgt_quad = quad ? frobenius(f, form.quad, k) : Mat();
    for (Elem lambda : lambdas) {
      std::vector<Vec> rows(n);
      std::function<void(std::size_t)> extend = [&](std::size_t i) {
        if (i == n) {
          Mat m = Mat::from_rows(rows);
          if (rank(f, m) == n) out.push_back({std::move(m), k});
          return;
        }
        for (const Vec& r : all_rows) {
          if (quad) {
            if (eval_quadratic(form, r) != f.mul(lambda, tgt_quad(i, i))) continue;
          } else if (value(r, r) != f.mul(lambda, tgt_gram(i, i))) {
            continue;
          }
          bool ok = true;
          for (std::size_t j = 0; j < i && ok; ++j) {
            ok = value(rows[j], r) == f.mul(lambda, tgt_gram(j, i)) && value(r, rows[j]) == f.mul(lambda, tgt_gram(i, j));
          }
          if (!ok) continue;
          rows[i] = r;
          extend(i + 1);
        }
      };
      extend(0);
    }
  }
  return out;
}

inline GroupSpec brute_force_isometry_group(const ClassicalForm& form, Preservation kind = Preservation::isometry) {
  const char* tag = kind == Preservation::isometry ? "I" : kind == Preservation::similarity ? "GI" : "GammaI";
  return {std::string(tag) + "(" + to_string(form.kind) + "," + std::to_string(form.n) + "," + std::to_string(form.field.order()) + ")",
          form.field, form.n, brute_force_group(form, kind)};
}

// ---------------------------------------------------------------------------
// Orbits.

inline std::uint64_t apply_id(const Space& space, const SemilinearMap& g, std::uint64_t id) {
  return space.encode(apply(space.field(), g, space.decode(id)));
}

struct OrbitPartition {
  std::vector<std::int32_t> orbit_of;  // per vector id; -1 for the zero vector
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint64_t> representatives;  // least vector id in each orbit

  std::size_t count() const { return sizes.size(); }
  std::vector<std::uint64_t> members(std::size_t orbit) const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 0; i < orbit_of.size(); ++i)
      if (orbit_of[i] == static_cast<std::int32_t>(orbit)) out.push_back(i);
    return out;
  }
};

inline void check_orbit_cap(const Space& space) {
  if (space.size() > kOrbitCap) throw std::invalid_argument("orbit computation exceeds cap q^n <= 2^22");
}

/// Sorted vector ids in the orbit of v.
inline std::vector<std::uint64_t> orbit_closure(const GroupSpec& g, const Vec& v) {
  const Space space(g.field, g.dim);
  check_orbit_cap(space);
  std::vector<char> seen(space.size(), 0);
  std::deque<std::uint64_t> queue{space.encode(v)};
  seen[queue.front()] = 1;
  std::vector<std::uint64_t> out;
  while (!queue.empty()) {
    const std::uint64_t x = queue.front();
    queue.pop_front();
    out.push_back(x);
    for (const auto& h : g.generators) {
      const std::uint64_t y = apply_id(space, h, x);
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline OrbitPartition all_orbits(const GroupSpec& g) {
  const Space space(g.field, g.dim);
  check_orbit_cap(space);
  OrbitPartition p;
  p.orbit_of.assign(space.size(), -1);
  std::vector<std::uint64_t> queue;
  for (std::uint64_t start = 1; start < space.size(); ++start) {
    if (p.orbit_of[start] >= 0) continue;
    const auto id = static_cast<std::int32_t>(p.sizes.size());
    p.orbit_of[start] = id;
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vec x = space.decode(queue[head]);
      for (const auto& h : g.generators) {
        const std::uint64_t y = space.encode(apply(g.field, h, x));
        if (p.orbit_of[y] < 0) {
          p.orbit_of[y] = id;
          queue.push_back(y);
        }
      }
    }
    p.sizes.push_back(queue.size());
    p.representatives.push_back(start);
  }
  return p;
}

/// Order of the group generated, by closure on group elements (small groups only).
inline std::uint64_t group_order_by_closure(const GroupSpec& g, std::uint64_t cap = 2'000'000) {
  const SemilinearMap id{Mat::identity(g.field, g.dim), 0};
  std::set<SemilinearMap> seen{id};
  std::vector<SemilinearMap> queue{id};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& h : g.generators) {
      SemilinearMap y = compose(g.field, queue[head], h);
      if (seen.insert(y).second) {
        if (seen.size() > cap) throw std::invalid_argument("group closure exceeds element cap");
        queue.push_back(std::move(y));
      }
    }
  }
  return seen.size();
}

/// Every orbit spans V. Any proper invariant subspace would contain a whole orbit, so this
/// is the irreducibility test for the group.
inline bool orbits_span(const GroupSpec& g, const OrbitPartition& p) {
  const Space space(g.field, g.dim);
  for (std::size_t o = 0; o < p.count(); ++o) {
    Mat basis(0, g.dim);
    std::vector<Vec> rows;
    for (auto id : p.members(o)) {
      rows.push_back(space.decode(id));
      if (rows.size() >= 2 * g.dim) {
        for (std::size_t i = 0; i < basis.rows(); ++i) rows.push_back(basis.row(i));
        basis = rref(g.field, Mat::from_rows(rows));
        rows.clear();
        if (basis.rows() == g.dim) break;
      }
    }
    for (std::size_t i = 0; i < basis.rows(); ++i) rows.push_back(basis.row(i));
    if (rank_of(g.field, rows) != g.dim) return false;
  }
  return true;
}

}  // namespace diamtwo
