#include <gtest/gtest.h>

#include <array>
#include <map>
#include <set>

#include "diamtwo/field.hpp"

using namespace diamtwo;

namespace {

// Independent irreducibility oracle: a monic polynomial of degree e is reducible iff it is a
// product of two monic polynomials of positive degree. Coefficients constant-first.
using Poly = std::vector<std::uint32_t>;

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return c;
}

std::vector<Poly> monics(std::uint32_t p, unsigned d) {
  std::vector<Poly> out;
  std::uint64_t count = 1;
  for (unsigned i = 0; i < d; ++i) count *= p;
  for (std::uint64_t x = 0; x < count; ++x) {
    Poly f(d + 1, 0);
    f[d] = 1;
    std::uint64_t y = x;
    for (unsigned i = d; i-- > 0;) {  // c0 most significant
      f[i] = y % p;
      y /= p;
    }
    out.push_back(f);
  }
  return out;
}

Poly oracle_modulus(std::uint32_t p, unsigned e) {
  std::set<Poly> reducible;
  for (unsigned d = 1; d < e; ++d)
    for (const auto& a : monics(p, d))
      for (const auto& b : monics(p, e - d)) reducible.insert(poly_mul(a, b, p));
  std::vector<Poly> cands = monics(p, e);
  // monics() enumerates with c0 most significant, which is the constant-first lexicographic order
  for (const auto& f : cands)
    if (!reducible.count(f)) return f;
  return {};
}

std::vector<std::pair<std::uint32_t, unsigned>> small_fields() {
  return {{2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {3, 2}, {2, 3}, {2, 4}, {5, 2}, {3, 3}, {2, 6}};
}

}  // namespace

TEST(Field, PrimeFieldModulusIsX) {
  const Field f = Field::make(2, 1);
  EXPECT_EQ(f.order(), 2u);
  EXPECT_EQ(f.modulus(), (Poly{0, 1}));
}

TEST(Field, GF4Modulus) { EXPECT_EQ(Field::make(2, 2).modulus(), (Poly{1, 1, 1})); }

TEST(Field, GF9ModulusIsXSquaredPlusOne) { EXPECT_EQ(Field::make(3, 2).modulus(), (Poly{1, 0, 1})); }

TEST(Field, ModulusMatchesFactorisationOracle) {
  for (auto [p, e] : small_fields()) {
    if (e == 1) continue;
    EXPECT_EQ(Field::make(p, e).modulus(), oracle_modulus(p, e)) << "p=" << p << " e=" << e;
  }
}

TEST(Field, ConstructionIsDeterministic) {
  EXPECT_EQ(Field::make(2, 5).modulus(), Field::make(2, 5).modulus());
  EXPECT_EQ(Field::of_order(27).modulus(), Field::make(3, 3).modulus());
}

TEST(Field, RejectsBadParameters) {
  EXPECT_THROW(Field::make(4, 1), std::invalid_argument);
  EXPECT_THROW(Field::make(2, 25), std::invalid_argument);
  EXPECT_THROW(Field::of_order(6), std::invalid_argument);
  EXPECT_THROW(Field::make(3, 1).inv(Elem{0}), std::exception);
}

TEST(Field, GF4OmegaSquared) {
  const Field f = Field::make(2, 2);
  const Elem w = f.generator();
  EXPECT_EQ(f.mul(w, w), f.add(w, f.one()));
  EXPECT_EQ(f.frobenius(w, 1), f.add(w, f.one()));
}

TEST(Field, SmallInverseAndOrder) {
  const Field f3 = Field::make(3, 1);
  EXPECT_EQ(f3.inv(f3.from_int(2)), f3.from_int(2));
  const Field f9 = Field::make(3, 2);
  for (std::uint32_t i = 1; i < 9; ++i) EXPECT_EQ(f9.pow(Elem{i}, 8), f9.one());
}

TEST(Field, EnumerationOrderConstantFirst) {
  const Field f = Field::make(3, 2);
  EXPECT_EQ(f.zero().id, 0u);
  EXPECT_EQ(f.one().id, 3u);
  EXPECT_EQ(f.from_coeffs({0, 1}).id, 1u);
  EXPECT_EQ(f.coeffs(Elem{5}), (Poly{1, 2}));
}

TEST(Field, AxiomsExhaustive) {
  for (auto [p, e] : small_fields()) {
    const Field f = Field::make(p, e);
    if (f.order() > 16) continue;
    for (std::uint32_t a = 0; a < f.order(); ++a) {
      EXPECT_EQ(f.add(Elem{a}, f.neg(Elem{a})), f.zero());
      if (a) {
        EXPECT_EQ(f.mul(Elem{a}, f.inv(Elem{a})), f.one());
      }
      for (std::uint32_t b = 0; b < f.order(); ++b) {
        EXPECT_EQ(f.add(Elem{a}, Elem{b}), f.add(Elem{b}, Elem{a}));
        EXPECT_EQ(f.mul(Elem{a}, Elem{b}), f.mul(Elem{b}, Elem{a}));
        for (std::uint32_t c = 0; c < f.order(); ++c)
          EXPECT_EQ(f.mul(Elem{a}, f.add(Elem{b}, Elem{c})), f.add(f.mul(Elem{a}, Elem{b}), f.mul(Elem{a}, Elem{c})));
      }
    }
  }
}

TEST(Field, FrobeniusIsAutomorphism) {
  for (auto [p, e] : small_fields()) {
    const Field f = Field::make(p, e);
    for (unsigned k = 0; k < e; ++k)
      for (std::uint32_t a = 0; a < f.order(); ++a)
        for (std::uint32_t b = 0; b < f.order(); b += 3) {
          EXPECT_EQ(f.frobenius(f.mul(Elem{a}, Elem{b}), k), f.mul(f.frobenius(Elem{a}, k), f.frobenius(Elem{b}, k)));
          EXPECT_EQ(f.frobenius(f.add(Elem{a}, Elem{b}), k), f.add(f.frobenius(Elem{a}, k), f.frobenius(Elem{b}, k)));
        }
  }
}

TEST(Field, FrobeniusPowerAndPrimeSubfield) {
  const Field f = Field::make(2, 3);
  for (std::uint32_t a = 0; a < 8; ++a) {
    EXPECT_EQ(f.frobenius(f.frobenius(f.frobenius(Elem{a}, 1), 1), 1), Elem{a});
    EXPECT_EQ(f.frobenius(Elem{a}, 1), f.pow(Elem{a}, 2));
  }
  EXPECT_EQ(f.frobenius(f.one(), 2), f.one());
}

TEST(Field, SubfieldIsFixedSet) {
  const Field f = Field::make(2, 4);
  const Subfield s(f, 2);
  EXPECT_EQ(s.elements().size(), 4u);
  EXPECT_EQ(s.order(), 4u);
  EXPECT_EQ(s.index(), 2u);
  EXPECT_THROW(Subfield(f, 3), std::invalid_argument);
}

TEST(Field, TraceGF4ToGF2) {
  const Field f = Field::make(2, 2);
  const Subfield s(f, 1);
  EXPECT_EQ(trace_to(f.generator(), s), f.one());
  EXPECT_EQ(trace_to(f.zero(), s), f.zero());
  EXPECT_EQ(norm_to(f.one(), s), f.one());
}

TEST(Field, NormGF9IsFourToOne) {
  const Field f = Field::make(3, 2);
  const Subfield s(f, 1);
  std::map<std::uint32_t, int> count;
  for (std::uint32_t a = 1; a < 9; ++a) {
    const Elem n = norm_to(Elem{a}, s);
    EXPECT_TRUE(s.contains(n));
    ++count[n.id];
  }
  ASSERT_EQ(count.size(), 2u);
  for (auto [k, c] : count) EXPECT_EQ(c, 4);
}

TEST(Field, TracePreimagesUniform) {
  for (auto [p, e, e0] : std::vector<std::array<unsigned, 3>>{{2, 4, 2}, {2, 6, 3}, {3, 2, 1}, {2, 6, 2}, {5, 2, 1}}) {
    const Field f = Field::make(p, e);
    const Subfield s(f, e0);
    std::map<std::uint32_t, std::uint32_t> count;
    for (std::uint32_t a = 0; a < f.order(); ++a) {
      const Elem t = trace_to(Elem{a}, s);
      ASSERT_TRUE(s.contains(t));
      ++count[t.id];
    }
    EXPECT_EQ(count.size(), s.order());
    for (auto [k, c] : count) EXPECT_EQ(c, f.order() / s.order());
  }
}

TEST(Field, TraceAdditiveNormMultiplicative) {
  const Field f = Field::make(2, 4);
  const Subfield s(f, 2);
  for (std::uint32_t a = 0; a < 16; ++a)
    for (std::uint32_t b = 0; b < 16; ++b) {
      EXPECT_EQ(s.trace(f.add(Elem{a}, Elem{b})), f.add(s.trace(Elem{a}), s.trace(Elem{b})));
      EXPECT_EQ(s.norm(f.mul(Elem{a}, Elem{b})), f.mul(s.norm(Elem{a}), s.norm(Elem{b})));
    }
}

TEST(Field, SquareClasses) {
  const Field f3 = Field::make(3, 1);
  EXPECT_EQ(f3.square_class(f3.from_int(1)), SquareClass::square);
  EXPECT_EQ(f3.square_class(f3.from_int(2)), SquareClass::nonsquare);
  EXPECT_EQ(f3.square_class(f3.zero()), SquareClass::zero);
  const Field f9 = Field::make(3, 2);
  EXPECT_EQ(f9.square_class(f9.from_int(-1)), SquareClass::square);
  EXPECT_THROW(Field::make(2, 2).square_class(Elem{1}), std::domain_error);
}

TEST(Field, SquareCountsAndProducts) {
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}, {5, 2}, {3, 3}}) {
    const Field f = Field::make(p, e);
    std::set<std::uint32_t> squares;
    for (std::uint32_t a = 1; a < f.order(); ++a) squares.insert(f.mul(Elem{a}, Elem{a}).id);
    EXPECT_EQ(squares.size(), (f.order() - 1) / 2);
    for (std::uint32_t a = 1; a < f.order(); ++a) {
      EXPECT_EQ(f.square_class(Elem{a}) == SquareClass::square, squares.count(a) == 1);
      for (std::uint32_t b = 1; b < f.order(); ++b)
        if (!squares.count(a) && !squares.count(b)) {
          EXPECT_TRUE(squares.count(f.mul(Elem{a}, Elem{b}).id));
        }
    }
  }
}
