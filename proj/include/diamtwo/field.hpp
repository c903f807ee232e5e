#pragma once

// Exact arithmetic in GF(p^e).
//
// Elements are dense integer ids in [0, q). The id order is the lexicographic
// order of coefficient lists read constant term first, so id = c0*p^(e-1) +
// c1*p^(e-2) + ... + c_{e-1}. Zero has id 0; one has id p^(e-1).
//
// The modulus is the lexicographically smallest monic irreducible polynomial of
// degree e (coefficient lists compared constant term first), which makes every
// construction of GF(p, e) produce the same representation.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace diamtwo {

/// Hard cap on the number of field elements.
inline constexpr std::uint64_t kFieldCap = std::uint64_t{1} << 24;

struct Elem {
  std::uint32_t id = 0;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

enum class SquareClass { zero, square, nonsquare };

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace detail {

using Poly = std::vector<std::uint32_t>;  // constant term first

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p prime, a != 0
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo b over GF(p); b nonzero.
inline Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>(
          (a[shift + i] + (p - c) * b[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

// Trial division by every monic polynomial of degree 1..deg/2.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  if (deg <= 1) return deg == 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    Poly g(d + 1, 0);
    g[d] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t x = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(x % p);
        x /= p;
      }
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Monic irreducible polynomials of degree e enumerated lexicographically with
// the constant term compared first; returns the first.
inline Poly smallest_irreducible(std::uint32_t p, unsigned e) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < e; ++i) count *= p;
  Poly f(e + 1, 0);
  f[e] = 1;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    // idx read with c0 as the most significant digit
    std::uint64_t x = idx;
    for (unsigned i = e; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(x % p);
      x /= p;
    }
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace detail

/// Immutable descriptor of GF(p^e) with its arithmetic tables; cheap to copy.
class Field {
 public:
  Field() = default;

  static Field make(std::uint32_t p, unsigned e) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime: " + std::to_string(p));
    if (e < 1) throw std::invalid_argument("field degree must be at least 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
      q *= p;
      if (q > kFieldCap) throw std::invalid_argument("field order exceeds cap 2^24");
    }
    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->e = e;
    impl->q = static_cast<std::uint32_t>(q);
    impl->modulus = e == 1 ? detail::Poly{0, 1} : detail::smallest_irreducible(p, e);
    impl->build();
    Field f;
    f.impl_ = std::move(impl);
    return f;
  }

  /// Field with q elements, q a prime power.
  static Field of_order(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("field order must be a prime power");
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    unsigned e = 0;
    std::uint64_t x = q;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    if (x != 1) throw std::invalid_argument("field order must be a prime power: " + std::to_string(q));
    return make(static_cast<std::uint32_t>(p), e);
  }

  bool valid() const { return impl_ != nullptr; }
  std::uint32_t characteristic() const { return impl_->p; }
  unsigned degree() const { return impl_->e; }
  std::uint32_t order() const { return impl_->q; }
  /// Monic modulus, constant term first.
  const std::vector<std::uint32_t>& modulus() const { return impl_->modulus; }

  Elem zero() const { return {0}; }
  Elem one() const { return {impl_->one}; }
  /// The polynomial-basis generator x (equals one() for prime fields).
  Elem generator() const { return impl_->e == 1 ? one() : from_coeffs(std::vector<std::uint32_t>{0, 1}); }
  /// Element number i in enumeration order.
  Elem element(std::uint32_t i) const { return {i}; }
  /// Image of the integer k in the prime subfield.
  Elem from_int(std::int64_t k) const {
    const std::int64_t p = impl_->p;
    const std::int64_t r = ((k % p) + p) % p;
    return {static_cast<std::uint32_t>(r) * impl_->one};
  }

  Elem from_coeffs(std::span<const std::uint32_t> c) const {
    if (c.size() > impl_->e) throw std::invalid_argument("too many coefficients for field degree");
    std::uint32_t id = 0;
    for (unsigned i = 0; i < impl_->e; ++i) id = id * impl_->p + (i < c.size() ? c[i] % impl_->p : 0);
    return {id};
  }
  Elem from_coeffs(std::initializer_list<std::uint32_t> c) const {
    return from_coeffs(std::span<const std::uint32_t>(c.begin(), c.size()));
  }

  std::vector<std::uint32_t> coeffs(Elem a) const {
    std::vector<std::uint32_t> c(impl_->e);
    std::uint32_t x = a.id;
    for (unsigned i = impl_->e; i-- > 0;) {
      c[i] = x % impl_->p;
      x /= impl_->p;
    }
    return c;
  }

  Elem add(Elem a, Elem b) const {
    const Impl& f = *impl_;
    if (f.p == 2) return {a.id ^ b.id};
    if (!f.add_table.empty()) return {f.add_table[std::size_t{a.id} * f.q + b.id]};
    return {f.digitwise(a.id, b.id, false)};
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const { return {impl_->neg_table[a.id]}; }

  Elem mul(Elem a, Elem b) const {
    if (a.id == 0 || b.id == 0) return zero();
    const Impl& f = *impl_;
    std::uint32_t s = f.log_table[a.id] + f.log_table[b.id];
    if (s >= f.q - 1) s -= f.q - 1;
    return {f.exp_table[s]};
  }
  Elem inv(Elem a) const {
    if (a.id == 0) throw std::domain_error("inverse of zero");
    const Impl& f = *impl_;
    const std::uint32_t l = f.log_table[a.id];
    return {f.exp_table[l == 0 ? 0 : f.q - 1 - l]};
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem pow(Elem a, std::int64_t k) const {
    const std::int64_t m = impl_->q - 1;
    if (a.id == 0) {
      if (k == 0) return one();
      if (k < 0) throw std::domain_error("negative power of zero");
      return zero();
    }
    std::int64_t l = (static_cast<std::int64_t>(impl_->log_table[a.id]) * (((k % m) + m) % m)) % m;
    return {impl_->exp_table[static_cast<std::size_t>(l)]};
  }

  /// a^(p^k).
  Elem frobenius(Elem a, unsigned k) const {
    if (a.id == 0) return a;
    const std::uint64_t m = impl_->q - 1;
    std::uint64_t pk = 1;
    for (unsigned i = 0; i < k % impl_->e; ++i) pk = pk * impl_->p % m;
    if (m == 1) return a;
    return {impl_->exp_table[impl_->log_table[a.id] * pk % m]};
  }

  /// Fixed primitive element (generator of the multiplicative group).
  Elem primitive() const { return {impl_->exp_table[impl_->q > 2 ? 1 : 0]}; }
  /// Discrete log to base primitive(); a nonzero.
  std::uint32_t log(Elem a) const {
    if (a.id == 0) throw std::domain_error("log of zero");
    return impl_->log_table[a.id];
  }

  /// Zero, square or nonsquare. Only meaningful as a partition in odd characteristic.
  SquareClass square_class(Elem a) const {
    if (impl_->p == 2) throw std::domain_error("square classes need odd characteristic");
    if (a.id == 0) return SquareClass::zero;
    return impl_->log_table[a.id] % 2 == 0 ? SquareClass::square : SquareClass::nonsquare;
  }
  bool is_square(Elem a) const { return a.id == 0 || impl_->p == 2 || impl_->log_table[a.id] % 2 == 0; }

  /// First nonsquare in enumeration order (odd characteristic).
  Elem first_nonsquare() const {
    for (std::uint32_t i = 1; i < impl_->q; ++i)
      if (square_class({i}) == SquareClass::nonsquare) return {i};
    throw std::domain_error("field has no nonsquares");
  }

  std::string to_string(Elem a) const {
    if (impl_->e == 1) return std::to_string(a.id);
    const auto c = coeffs(a);
    std::string out;
    for (unsigned i = 0; i < impl_->e; ++i) {
      if (c[i] == 0) continue;
      if (!out.empty()) out += '+';
      if (i == 0) {
        out += std::to_string(c[i]);
        continue;
      }
      if (c[i] != 1) out += std::to_string(c[i]);
      out += 'x';
      if (i > 1) out += '^' + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

  std::string name() const { return "GF(" + std::to_string(impl_->q) + ")"; }

  friend bool operator==(const Field& a, const Field& b) {
    return a.impl_ == b.impl_ || (a.impl_ && b.impl_ && a.impl_->p == b.impl_->p && a.impl_->e == b.impl_->e);
  }

 private:
  struct Impl {
    std::uint32_t p = 0;
    unsigned e = 0;
    std::uint32_t q = 0;
    std::uint32_t one = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint32_t> neg_table;
    std::vector<std::uint32_t> add_table;  // only for small odd-characteristic fields
    std::vector<std::uint32_t> log_table;
    std::vector<std::uint32_t> exp_table;

    std::uint32_t digitwise(std::uint32_t a, std::uint32_t b, bool negate_only) const {
      std::uint32_t out = 0, scale = 1;
      for (unsigned i = 0; i < e; ++i) {
        const std::uint32_t da = a % p, db = b % p;
        a /= p;
        b /= p;
        const std::uint32_t d = negate_only ? (p - da) % p : (da + db) % p;
        out += d * scale;
        scale *= p;
      }
      return out;
    }

    // Product of two ids by polynomial multiplication reduced by the modulus.
    std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
      detail::Poly pa(e), pb(e);
      for (unsigned i = e; i-- > 0;) {
        pa[i] = a % p;
        a /= p;
        pb[i] = b % p;
        b /= p;
      }
      detail::Poly prod(2 * e - 1, 0);
      for (unsigned i = 0; i < e; ++i)
        for (unsigned j = 0; j < e; ++j)
          prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{pa[i]} * pb[j]) % p);
      const auto r = detail::poly_mod(prod, modulus, p);
      std::uint32_t id = 0;
      for (unsigned i = 0; i < e; ++i) id = id * p + (i < r.size() ? r[i] : 0);
      return id;
    }

    void build() {
      one = 1;
      for (unsigned i = 1; i < e; ++i) one *= p;
      neg_table.resize(q);
      for (std::uint32_t a = 0; a < q; ++a) neg_table[a] = digitwise(a, 0, true);
      if (p != 2 && q <= 1024) {
        add_table.resize(std::size_t{q} * q);
        for (std::uint32_t a = 0; a < q; ++a)
          for (std::uint32_t b = 0; b < q; ++b) add_table[std::size_t{a} * q + b] = digitwise(a, b, false);
      }
      log_table.assign(q, 0);
      exp_table.assign(q, 0);
      // Primitive element: first nonzero element in enumeration order whose powers cover F_q^#.
      for (std::uint32_t g = 1; g < q; ++g) {
        std::vector<char> seen(q, 0);
        std::uint32_t x = one;
        std::uint32_t k = 0;
        bool ok = true;
        while (k < q - 1) {
          if (seen[x]) {
            ok = false;
            break;
          }
          seen[x] = 1;
          exp_table[k] = x;
          log_table[x] = k;
          x = slow_mul(x, g);
          ++k;
        }
        if (ok && x == one) return;
      }
      throw std::logic_error("no primitive element found");
    }
  };

  std::shared_ptr<const Impl> impl_;
};

/// The subfield of index degree()/e0: the fixed set of Frobenius^e0 inside the parent.
class Subfield {
 public:
  Subfield(Field parent, unsigned e0) : parent_(std::move(parent)), e0_(e0) {
    if (e0_ == 0 || parent_.degree() % e0_ != 0)
      throw std::invalid_argument("subfield degree must divide the field degree");
  }

  const Field& parent() const { return parent_; }
  unsigned degree() const { return e0_; }
  unsigned index() const { return parent_.degree() / e0_; }
  std::uint32_t order() const {
    std::uint32_t q0 = 1;
    for (unsigned i = 0; i < e0_; ++i) q0 *= parent_.characteristic();
    return q0;
  }

  bool contains(Elem a) const { return parent_.frobenius(a, e0_) == a; }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    for (std::uint32_t i = 0; i < parent_.order(); ++i)
      if (contains({i})) out.push_back({i});
    return out;
  }

  /// Primitive element of the subfield.
  Elem primitive() const {
    const std::uint32_t step = (parent_.order() - 1) / (order() - 1);
    return parent_.pow(parent_.primitive(), step);
  }

  Elem trace(Elem a) const {
    Elem s = parent_.zero();
    for (unsigned i = 0; i < index(); ++i) s = parent_.add(s, parent_.frobenius(a, e0_ * i));
    return s;
  }

  Elem norm(Elem a) const {
    Elem s = parent_.one();
    for (unsigned i = 0; i < index(); ++i) s = parent_.mul(s, parent_.frobenius(a, e0_ * i));
    return s;
  }

 private:
  Field parent_;
  unsigned e0_;
};

inline Elem trace_to(Elem a, const Subfield& sub) { return sub.trace(a); }
inline Elem norm_to(Elem a, const Subfield& sub) { return sub.norm(a); }

}  // namespace diamtwo
