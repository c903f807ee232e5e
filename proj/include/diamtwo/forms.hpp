#pragma once

// Standard classical forms and their evaluation.
//
// Basis order is x1..xm, y1..ym followed by the anisotropic tail (0, 1 or 2
// coordinates). Quadratic forms keep an upper-triangular coefficient grid A with
// Q(v) = sum_{i<=j} A_ij v_i v_j; the polar form has Gram matrix A + A^T.

#include <optional>
#include <stdexcept>
#include <string>

#include "diamtwo/linalg.hpp"

namespace diamtwo {

enum class FormKind {
  symplectic,
  unitary,
  quadratic_odd_square,
  quadratic_odd_nonsquare,
  quadratic_plus,
  quadratic_minus,
};

inline bool is_quadratic(FormKind k) {
  return k == FormKind::quadratic_odd_square || k == FormKind::quadratic_odd_nonsquare ||
         k == FormKind::quadratic_plus || k == FormKind::quadratic_minus;
}

inline std::string to_string(FormKind k) {
  switch (k) {
    case FormKind::symplectic: return "symplectic";
    case FormKind::unitary: return "unitary";
    case FormKind::quadratic_odd_square: return "quadratic-odd-square";
    case FormKind::quadratic_odd_nonsquare: return "quadratic-odd-nonsquare";
    case FormKind::quadratic_plus: return "quadratic-plus";
    case FormKind::quadratic_minus: return "quadratic-minus";
  }
  return "?";
}

/// Value classes of nonzero vectors: singular, nonsingular, and the square split of
/// nonsingular vectors for odd-dimensional quadratic forms.
enum class FormClass { S0, Ssharp, Ssquare, Snonsquare };

inline std::string to_string(FormClass c) {
  switch (c) {
    case FormClass::S0: return "S0";
    case FormClass::Ssharp: return "S#";
    case FormClass::Ssquare: return "Ssq";
    case FormClass::Snonsquare: return "Snsq";
  }
  return "?";
}

struct ClassicalForm {
  FormKind kind;
  std::size_t n = 0;
  Field field;
  Mat gram;  // bilinear / sesquilinear part (polar form for quadratic kinds)
  Mat quad;  // upper-triangular coefficients; empty unless quadratic

  /// Frobenius iterate of the involution x -> x^sqrt(q) (unitary only).
  unsigned conj_iterate() const { return field.degree() / 2; }
};

/// Lexicographically first (c, then b, by element id) pair with x^2 + b x + c irreducible over F_q.
inline std::pair<Elem, Elem> first_irreducible_quadratic(const Field& f) {
  for (std::uint32_t c = 0; c < f.order(); ++c)
    for (std::uint32_t b = 0; b < f.order(); ++b) {
      bool root = false;
      for (std::uint32_t x = 0; x < f.order() && !root; ++x) {
        const Elem ex{x};
        const Elem val = f.add(f.add(f.mul(ex, ex), f.mul(Elem{b}, ex)), Elem{c});
        root = val.id == 0;
      }
      if (!root) return {Elem{b}, Elem{c}};
    }
  throw std::logic_error("no irreducible quadratic");
}

inline ClassicalForm standard_form(FormKind kind, std::size_t n, const Field& f) {
  if (n == 0) throw std::invalid_argument("form dimension must be positive");
  ClassicalForm form{kind, n, f, Mat(n, n), Mat()};
  const bool odd_char = f.characteristic() != 2;
  switch (kind) {
    case FormKind::symplectic: {
      if (n % 2) throw std::invalid_argument("symplectic forms need even dimension");
      const std::size_t m = n / 2;
      for (std::size_t i = 0; i < m; ++i) {
        form.gram(i, m + i) = f.one();
        form.gram(m + i, i) = f.neg(f.one());
      }
      return form;
    }
    case FormKind::unitary: {
      if (f.degree() % 2) throw std::invalid_argument("unitary forms need a square field order");
      const std::size_t m = n / 2;
      for (std::size_t i = 0; i < m; ++i) {
        form.gram(i, m + i) = f.one();
        form.gram(m + i, i) = f.one();
      }
      if (n % 2) form.gram(n - 1, n - 1) = f.one();
      return form;
    }
    default: break;
  }

  form.quad = Mat(n, n);
  std::size_t pairs = n / 2;
  if (kind == FormKind::quadratic_odd_square || kind == FormKind::quadratic_odd_nonsquare) {
    if (n % 2 == 0 || !odd_char) throw std::invalid_argument("odd-dimensional quadratic forms need n and q odd");
    form.quad(n - 1, n - 1) = kind == FormKind::quadratic_odd_square ? f.one() : f.first_nonsquare();
  } else {
    if (n % 2) throw std::invalid_argument("plus/minus quadratic forms need even dimension");
    if (kind == FormKind::quadratic_minus) {
      --pairs;
      const auto [b, c] = first_irreducible_quadratic(f);
      form.quad(n - 2, n - 2) = f.one();
      form.quad(n - 2, n - 1) = b;
      form.quad(n - 1, n - 1) = c;
    }
  }
  // Hyperbolic pairs (x_i, y_i) sit at positions i and pairs + i.
  for (std::size_t i = 0; i < pairs; ++i) form.quad(i, pairs + i) = f.one();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) form.gram(i, j) = f.add(form.quad(i, j), form.quad(j, i));
  return form;
}

inline Elem eval_bilinear(const ClassicalForm& form, const Vec& u, const Vec& v) {
  if (u.size() != form.n || v.size() != form.n) throw std::invalid_argument("form evaluation: dimension mismatch");
  const Field& f = form.field;
  const Vec w = form.kind == FormKind::unitary ? frobenius(f, v, form.conj_iterate()) : v;
  Elem s = f.zero();
  for (std::size_t i = 0; i < form.n; ++i) {
    if (u[i].id == 0) continue;
    for (std::size_t j = 0; j < form.n; ++j) {
      const Elem g = form.gram(i, j);
      if (g.id == 0 || w[j].id == 0) continue;
      s = f.add(s, f.mul(u[i], f.mul(g, w[j])));
    }
  }
  return s;
}

inline Elem eval_quadratic(const ClassicalForm& form, const Vec& v) {
  if (!is_quadratic(form.kind)) throw std::invalid_argument("not a quadratic form");
  if (v.size() != form.n) throw std::invalid_argument("form evaluation: dimension mismatch");
  const Field& f = form.field;
  Elem s = f.zero();
  for (std::size_t i = 0; i < form.n; ++i) {
    if (v[i].id == 0) continue;
    for (std::size_t j = i; j < form.n; ++j) {
      const Elem a = form.quad(i, j);
      if (a.id == 0 || v[j].id == 0) continue;
      s = f.add(s, f.mul(a, f.mul(v[i], v[j])));
    }
  }
  return s;
}

/// phi(v, v) for symplectic and unitary forms, Q(v) for quadratic forms.
inline Elem phi_bar(const ClassicalForm& form, const Vec& v) {
  return is_quadratic(form.kind) ? eval_quadratic(form, v) : eval_bilinear(form, v, v);
}

inline FormClass vector_class(const ClassicalForm& form, const Vec& v) {
  if (v.is_zero()) throw std::invalid_argument("vector_class of the zero vector");
  const Elem val = phi_bar(form, v);
  if (val.id == 0) return FormClass::S0;
  const bool odd_quadratic =
      form.kind == FormKind::quadratic_odd_square || form.kind == FormKind::quadratic_odd_nonsquare;
  if (odd_quadratic)
    return form.field.square_class(val) == SquareClass::square ? FormClass::Ssquare : FormClass::Snonsquare;
  return FormClass::Ssharp;
}

/// Radical of the polar form is zero.
inline bool is_nondegenerate(const ClassicalForm& form) { return rank(form.field, form.gram) == form.n; }

}  // namespace diamtwo
