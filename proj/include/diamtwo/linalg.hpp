#pragma once

// Vectors, matrices and semilinear maps over a Field.
//
// Vectors are row vectors and maps act on the right: a semilinear map (M, k)
// sends v to frob_k(v) * M, where frob_k raises every entry to the p^k-th power.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "diamtwo/field.hpp"

namespace diamtwo {

struct Vec {
  std::vector<Elem> entries;

  Vec() = default;
  explicit Vec(std::vector<Elem> e) : entries(std::move(e)) {}
  static Vec zeros(std::size_t n) { return Vec(std::vector<Elem>(n)); }

  std::size_t size() const { return entries.size(); }
  Elem operator[](std::size_t i) const { return entries[i]; }
  Elem& operator[](std::size_t i) { return entries[i]; }
  bool is_zero() const {
    for (auto x : entries)
      if (x.id != 0) return false;
    return true;
  }
  friend bool operator==(const Vec&, const Vec&) = default;
};

class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Mat(std::size_t rows, std::size_t cols, std::vector<Elem> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw std::invalid_argument("matrix data size mismatch");
  }

  static Mat identity(const Field& f, std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
  }
  static Mat from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return {};
    Mat m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  /// Integer entries reduced into the prime subfield.
  static Mat from_ints(const Field& f, std::size_t rows, std::size_t cols, std::initializer_list<std::int64_t> v) {
    if (v.size() != rows * cols) throw std::invalid_argument("matrix data size mismatch");
    Mat m(rows, cols);
    std::size_t i = 0;
    for (auto x : v) m.data_[i++] = f.from_int(x);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Vec row(std::size_t i) const {
    return Vec(std::vector<Elem>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                 data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)));
  }
  const std::vector<Elem>& data() const { return data_; }

  friend bool operator==(const Mat&, const Mat&) = default;
  friend auto operator<=>(const Mat& a, const Mat& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return a.data_ <=> b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> data_;
};

inline Mat mat_mul(const Field& f, const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
  Mat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem x = a(i, k);
      if (x.id == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(x, b(k, j)));
    }
  return c;
}

inline Vec vec_mat(const Field& f, const Vec& v, const Mat& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("vector/matrix dimension mismatch");
  Vec out = Vec::zeros(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i].id == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = f.add(out[j], f.mul(v[i], m(i, j)));
  }
  return out;
}

inline Mat transpose(const Mat& a) {
  Mat t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

inline Mat scale(const Field& f, Elem s, const Mat& a) {
  Mat out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = f.mul(s, a(i, j));
  return out;
}

/// Entrywise Frobenius a -> a^(p^k).
inline Mat frobenius(const Field& f, const Mat& a, unsigned k) {
  if (k % f.degree() == 0) return a;
  Mat out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = f.frobenius(a(i, j), k);
  return out;
}
inline Vec frobenius(const Field& f, const Vec& v, unsigned k) {
  if (k % f.degree() == 0) return v;
  Vec out = v;
  for (auto& x : out.entries) x = f.frobenius(x, k);
  return out;
}

/// Kronecker product; (u (x) w)(A (x) B) = uA (x) wB under the row-major tensor layout.
inline Mat kron(const Field& f, const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = f.mul(a(i, j), b(k, l));
  return out;
}

/// Block-diagonal placement of `block` at offset (off, off) inside an n x n identity.
inline Mat embed_block(const Field& f, std::size_t n, std::size_t off, const Mat& block) {
  Mat out = Mat::identity(f, n);
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) out(off + i, off + j) = block(i, j);
  return out;
}

/// Reduced row echelon form with first-nonzero pivoting; zero rows are dropped.
inline Mat rref(const Field& f, const Mat& m) {
  Mat a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c).id == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    const Elem inv = f.inv(a(r, c));
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) = f.mul(inv, a(r, j));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).id == 0) continue;
      const Elem factor = a(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = f.sub(a(i, j), f.mul(factor, a(r, j)));
    }
    ++r;
  }
  std::vector<Elem> kept(a.data().begin(), a.data().begin() + static_cast<std::ptrdiff_t>(r * a.cols()));
  return Mat(r, a.cols(), std::move(kept));
}

inline std::size_t rank(const Field& f, const Mat& m) { return rref(f, m).rows(); }

inline std::size_t rank_of(const Field& f, const std::vector<Vec>& vs) {
  if (vs.empty()) return 0;
  return rank(f, Mat::from_rows(vs));
}

inline Mat inverse(const Field& f, const Mat& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = f.one();
  }
  const Mat r = rref(f, aug);
  if (r.rows() < n) throw std::domain_error("matrix is singular");
  for (std::size_t i = 0; i < n; ++i)
    if (r(i, i) != f.one()) throw std::domain_error("matrix is singular");
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

/// Coefficient grid of v in a tensor product basis u_i (x) w_j, i indexing the first factor.
inline Mat reshape_to_matrix(const Vec& v, std::size_t k, std::size_t m) {
  if (v.size() != k * m) throw std::invalid_argument("reshape: vector length is not k*m");
  return Mat(k, m, v.entries);
}

inline Vec tensor(const Field& f, const Vec& u, const Vec& w) {
  Vec out = Vec::zeros(u.size() * w.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) out[i * w.size() + j] = f.mul(u[i], w[j]);
  return out;
}

struct SemilinearMap {
  Mat matrix;
  unsigned frob = 0;  // Frobenius iterate applied before the matrix

  static SemilinearMap linear(Mat m) { return {std::move(m), 0}; }
  static SemilinearMap pure_frobenius(const Field& f, std::size_t n, unsigned k = 1) {
    return {Mat::identity(f, n), k % f.degree()};
  }
  std::size_t dim() const { return matrix.rows(); }
  friend bool operator==(const SemilinearMap&, const SemilinearMap&) = default;
  friend auto operator<=>(const SemilinearMap& a, const SemilinearMap& b) {
    if (auto c = a.frob <=> b.frob; c != 0) return c;
    return a.matrix <=> b.matrix;
  }
};

inline Vec apply(const Field& f, const SemilinearMap& m, const Vec& v) {
  if (v.size() != m.matrix.rows()) throw std::invalid_argument("apply: dimension mismatch");
  return vec_mat(f, frobenius(f, v, m.frob), m.matrix);
}

/// The map "first a, then b".
inline SemilinearMap compose(const Field& f, const SemilinearMap& a, const SemilinearMap& b) {
  return {mat_mul(f, frobenius(f, a.matrix, b.frob), b.matrix), (a.frob + b.frob) % f.degree()};
}

/// F_q^n with vectors numbered by their rank in lexicographic enumeration.
class Space {
 public:
  Space(Field f, std::size_t n) : field_(std::move(f)), n_(n) {
    size_ = 1;
    for (std::size_t i = 0; i < n_; ++i) {
      size_ *= field_.order();
      if (size_ > (std::uint64_t{1} << 32)) throw std::invalid_argument("vector space too large to index");
    }
  }

  const Field& field() const { return field_; }
  std::size_t dim() const { return n_; }
  std::uint64_t size() const { return size_; }

  Vec decode(std::uint64_t id) const {
    Vec v = Vec::zeros(n_);
    const std::uint32_t q = field_.order();
    for (std::size_t i = n_; i-- > 0;) {
      v[i] = Elem{static_cast<std::uint32_t>(id % q)};
      id /= q;
    }
    return v;
  }
  std::uint64_t encode(const Vec& v) const {
    if (v.size() != n_) throw std::invalid_argument("encode: dimension mismatch");
    std::uint64_t id = 0;
    for (std::size_t i = 0; i < n_; ++i) id = id * field_.order() + v[i].id;
    return id;
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint32_t q = field_.order();
    std::uint64_t out = 0, scale = 1;
    for (std::size_t i = 0; i < n_; ++i) {
      const auto x = field_.add(Elem{static_cast<std::uint32_t>(a % q)}, Elem{static_cast<std::uint32_t>(b % q)});
      out += x.id * scale;
      scale *= q;
      a /= q;
      b /= q;
    }
    return out;
  }
  std::uint64_t neg(std::uint64_t a) const {
    const std::uint32_t q = field_.order();
    std::uint64_t out = 0, scale = 1;
    for (std::size_t i = 0; i < n_; ++i) {
      out += field_.neg(Elem{static_cast<std::uint32_t>(a % q)}).id * scale;
      scale *= q;
      a /= q;
    }
    return out;
  }

  std::string to_string(const Vec& v) const {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += field_.to_string(v[i]);
    }
    return s + ")";
  }

 private:
  Field field_;
  std::size_t n_;
  std::uint64_t size_ = 1;
};

/// Coordinates of a field element over the prime field, as a row of GF(p) elements.
inline Vec prime_coords(const Field& prime_field, const Field& f, Elem a) {
  const auto c = f.coeffs(a);
  Vec v = Vec::zeros(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) v[i] = prime_field.from_int(c[i]);
  return v;
}

/// Greedy basis of F_q over the subfield: scan elements in enumeration order and keep
/// each one that is independent over the subfield from those already kept.
inline std::vector<Elem> subfield_basis(const Subfield& sub) {
  const Field& f = sub.parent();
  const Field gfp = Field::make(f.characteristic(), 1);
  // GF(p)-basis of the subfield, greedily.
  std::vector<Elem> sub_basis;
  std::vector<Vec> rows;
  for (Elem a : sub.elements()) {
    if (a.id == 0) continue;
    rows.push_back(prime_coords(gfp, f, a));
    if (rank_of(gfp, rows) == rows.size())
      sub_basis.push_back(a);
    else
      rows.pop_back();
    if (sub_basis.size() == sub.degree()) break;
  }
  std::vector<Elem> basis;
  rows.clear();
  for (std::uint32_t i = 1; i < f.order() && basis.size() < sub.index(); ++i) {
    std::vector<Vec> trial = rows;
    for (Elem s : sub_basis) trial.push_back(prime_coords(gfp, f, f.mul(s, Elem{i})));
    if (rank_of(gfp, trial) == trial.size()) {
      rows = std::move(trial);
      basis.push_back(Elem{i});
    }
  }
  return basis;
}

}  // namespace diamtwo
