#pragma once

// Closed-form orbit invariants for the imprimitive, tensor, subfield and
// classical families, and the subfield-family counting formulas.

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "diamtwo/forms.hpp"
#include "diamtwo/linalg.hpp"

namespace diamtwo {

enum class LabelKind { c2_weight, c2sp_x1, c2sp_beta, tensor_weight, c5_class, form_class };

/// Tagged orbit invariant; equal labels mean the same orbit.
struct OrbitLabel {
  LabelKind kind;
  std::vector<std::uint32_t> data;
  std::string text;  // display form, derived from kind and data

  friend bool operator==(const OrbitLabel& a, const OrbitLabel& b) { return a.kind == b.kind && a.data == b.data; }
  friend auto operator<=>(const OrbitLabel& a, const OrbitLabel& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    return a.data <=> b.data;
  }
};

namespace detail {
inline void require_nonzero(const Vec& v) {
  if (v.is_zero()) throw std::invalid_argument("orbit label of the zero vector");
}
}  // namespace detail

/// Number of nonzero length-m blocks.
inline std::size_t block_weight(const Vec& v, std::size_t m, std::size_t t) {
  if (m == 0 || v.size() != m * t) throw std::invalid_argument("vector length is not m*t");
  std::size_t s = 0;
  for (std::size_t b = 0; b < t; ++b)
    for (std::size_t i = 0; i < m; ++i)
      if (v[b * m + i].id != 0) {
        ++s;
        break;
      }
  return s;
}

inline OrbitLabel classify_c2_linear(const Vec& v, std::size_t m, std::size_t t) {
  detail::require_nonzero(v);
  const auto s = static_cast<std::uint32_t>(block_weight(v, m, t));
  return {LabelKind::c2_weight, {s}, "X" + std::to_string(s)};
}

/// Blocks are nondegenerate symplectic subspaces; the label is again the block weight.
inline OrbitLabel classify_c2_symplectic_case1(const Vec& v, std::size_t m, std::size_t t) {
  return classify_c2_linear(v, m, t);
}

/// The two halves are the totally singular spans of the x's and of the y's.
inline OrbitLabel classify_c2_symplectic_case2(const Field& f, const Vec& v, std::size_t m) {
  detail::require_nonzero(v);
  if (v.size() != 2 * m) throw std::invalid_argument("vector length is not 2m");
  bool left = false, right = false;
  Elem beta = f.zero();
  for (std::size_t i = 0; i < m; ++i) {
    left = left || v[i].id != 0;
    right = right || v[m + i].id != 0;
    beta = f.add(beta, f.mul(v[i], v[m + i]));
  }
  if (!left || !right) return {LabelKind::c2sp_x1, {}, "X1"};
  std::set<std::uint32_t> conj;
  for (unsigned k = 0; k < f.degree(); ++k) conj.insert(f.frobenius(beta, k).id);
  OrbitLabel out{LabelKind::c2sp_beta, {conj.begin(), conj.end()}, "W{"};
  bool first = true;
  for (auto id : out.data) {
    if (!first) out.text += ',';
    out.text += f.to_string(Elem{id});
    first = false;
  }
  out.text += '}';
  return out;
}

inline std::size_t tensor_rank(const Field& f, const Vec& v, std::size_t k, std::size_t m) {
  return rank(f, reshape_to_matrix(v, k, m));
}

inline OrbitLabel tensor_weight(const Field& f, const Vec& v, std::size_t k, std::size_t m) {
  detail::require_nonzero(v);
  const auto s = static_cast<std::uint32_t>(tensor_rank(f, v, k, m));
  return {LabelKind::tensor_weight, {s}, "Y" + std::to_string(s)};
}

inline OrbitLabel classify_c8(const ClassicalForm& form, const Vec& v) {
  detail::require_nonzero(v);
  if (form.kind == FormKind::symplectic) throw std::invalid_argument("symplectic groups are transitive on nonzero vectors");
  FormClass c = vector_class(form, v);
  if (is_quadratic(form.kind) && form.n == 1) c = FormClass::Ssharp;
  return {LabelKind::form_class, {static_cast<std::uint32_t>(c)}, to_string(c)};
}

// ---------------------------------------------------------------------------
// Subfield family.

/// Exact product of small integers; throws on 64-bit overflow.
inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow");
  return out;
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r = checked_mul(r, b);
  return r;
}

/// Number of a-dimensional subspaces of F_{q0}^r.
inline std::uint64_t gaussian_binomial(unsigned r, unsigned a, std::uint64_t q0) {
  if (a > r) return 0;
  std::uint64_t num = 1, den = 1;
  for (unsigned i = 0; i < a; ++i) {
    num = checked_mul(num, ipow(q0, r) - ipow(q0, i));
    den = checked_mul(den, ipow(q0, a) - ipow(q0, i));
  }
  return num / den;
}

inline std::uint64_t gl_order(unsigned n, std::uint64_t q) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < n; ++i) out = checked_mul(out, ipow(q, n) - ipow(q, i));
  return out;
}

/// Scalar stabiliser of an a-dimensional F_{q0}-subspace of F_q, q = q0^r.
inline Subfield K_of(unsigned a, unsigned r, const Subfield& base) {
  if (a < 1 || a > r) throw std::invalid_argument("K_of: need 1 <= a <= r");
  return a == r ? Subfield(base.parent(), base.parent().degree()) : base;
}

/// |F_q^# : K(a)^#|.
inline std::uint64_t scalar_class_size(unsigned a, unsigned r, std::uint64_t q0) {
  if (a < 1 || a > r) throw std::invalid_argument("need 1 <= a <= r");
  return a == r ? 1 : (ipow(q0, r) - 1) / (q0 - 1);
}

/// Number of scalar classes of a-dimensional F_{q0}-subspaces of F_{q0^r}.
inline std::uint64_t eta(unsigned a, unsigned r, std::uint64_t q0) {
  const std::uint64_t g = gaussian_binomial(r, a, q0);
  const std::uint64_t idx = scalar_class_size(a, r, q0);
  if (g % idx != 0) throw std::logic_error("eta: index does not divide the subspace count");
  return g / idx;
}

struct C5OrbitSize {
  std::uint64_t l_orbit_size;
  std::vector<unsigned> multipliers;  // divisors of the automorphism group order bounded by eta
};

/// `field_degree` is the degree of F_q over its prime field.
inline C5OrbitSize c5_orbit_size(unsigned a, unsigned n, unsigned r, std::uint64_t q0, unsigned field_degree) {
  if (a < 1 || a > std::min(n, r)) throw std::invalid_argument("c5_orbit_size: need 1 <= a <= min(n, r)");
  C5OrbitSize out;
  out.l_orbit_size = checked_mul(checked_mul(gaussian_binomial(n, a, q0), gl_order(a, q0)), scalar_class_size(a, r, q0));
  const std::uint64_t bound = eta(a, r, q0);
  for (unsigned s = 1; s <= field_degree; ++s)
    if (field_degree % s == 0 && s <= bound) out.multipliers.push_back(s);
  return out;
}

/// Classifier for V = F_q^n against the subfield F_{q0} of index r.
///
/// D_v is kept as a GF(p)-subspace of F_q in reduced echelon form.
class C5Classifier {
 public:
  explicit C5Classifier(Subfield sub)
      : sub_(std::move(sub)), f_(sub_.parent()), gfp_(Field::make(f_.characteristic(), 1)) {
    // GF(p)-basis of the subfield: the powers 1, g, ..., g^(e0-1) of its primitive element.
    const Elem g = sub_.primitive();
    Elem x = f_.one();
    std::vector<Vec> rows;
    for (std::uint32_t i = 0; sub_basis_.size() < sub_.degree() && i < f_.order(); ++i) {
      rows.push_back(prime_coords(gfp_, f_, x));
      if (rank_of(gfp_, rows) == rows.size())
        sub_basis_.push_back(x);
      else
        rows.pop_back();
      x = f_.mul(x, g);
    }
  }

  const Subfield& subfield() const { return sub_; }
  unsigned index() const { return sub_.index(); }

  /// D_v as the rows of a reduced echelon GF(p)-matrix.
  Mat D_of(const Vec& v) const {
    detail::require_nonzero(v);
    return span_of(v.entries);
  }

  unsigned c_of(const Vec& v) const { return static_cast<unsigned>(D_of(v).rows() / sub_.degree()); }

  OrbitLabel classify(const Vec& v) const {
    const Mat d = D_of(v);
    const auto c = static_cast<std::uint32_t>(d.rows() / sub_.degree());
    OrbitLabel out{LabelKind::c5_class, {c}, {}};
    const Mat canon = canonical(d);
    for (auto x : canon.data()) out.data.push_back(x.id);
    out.text = "c=" + std::to_string(c) + " [";
    for (std::size_t i = 0; i < canon.rows(); ++i) {
      if (i) out.text += '|';
      for (std::size_t j = 0; j < canon.cols(); ++j) out.text += std::to_string(canon(i, j).id);
    }
    out.text += ']';
    return out;
  }

 private:
  Mat span_of(const std::vector<Elem>& elems) const {
    std::vector<Vec> rows;
    for (Elem a : elems) {
      if (a.id == 0) continue;
      for (Elem b : sub_basis_) rows.push_back(prime_coords(gfp_, f_, f_.mul(a, b)));
    }
    if (rows.empty()) return Mat(0, f_.degree());
    return rref(gfp_, Mat::from_rows(rows));
  }

  std::vector<Elem> elements_of(const Mat& d) const {
    std::vector<Elem> out;
    for (std::size_t i = 0; i < d.rows(); ++i) {
      std::vector<std::uint32_t> c(d.cols());
      for (std::size_t j = 0; j < d.cols(); ++j) c[j] = d(i, j).id;
      out.push_back(f_.from_coeffs(c));
    }
    return out;
  }

  // Least reduced echelon form over lambda * D^sigma.
  Mat canonical(const Mat& d) const {
    {
      std::lock_guard lock(mu_);
      if (auto it = cache_.find(d); it != cache_.end()) return it->second;
    }
    const auto basis = elements_of(d);
    Mat best;
    bool have = false;
    std::vector<Elem> img(basis.size());
    for (unsigned sigma = 0; sigma < f_.degree(); ++sigma)
      for (std::uint32_t l = 1; l < f_.order(); ++l) {
        for (std::size_t i = 0; i < basis.size(); ++i) img[i] = f_.mul(Elem{l}, f_.frobenius(basis[i], sigma));
        std::vector<Vec> rows;
        for (Elem a : img) rows.push_back(prime_coords(gfp_, f_, a));
        Mat m = rref(gfp_, Mat::from_rows(rows));
        if (!have || m < best) {
          best = std::move(m);
          have = true;
        }
      }
    std::lock_guard lock(mu_);
    cache_.emplace(d, best);
    return best;
  }

  Subfield sub_;
  Field f_;
  Field gfp_;
  std::vector<Elem> sub_basis_;
  mutable std::mutex mu_;
  mutable std::map<Mat, Mat> cache_;
};

}  // namespace diamtwo
