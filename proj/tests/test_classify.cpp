#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "diamtwo/classify.hpp"
#include "diamtwo/group.hpp"
#include "oracles.hpp"

using namespace diamtwo;

namespace {

Vec random_nonzero(const Field& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, f.order() - 1);
  for (;;) {
    std::vector<Elem> e(n);
    for (auto& x : e) x = Elem{d(rng)};
    Vec v(e);
    if (!v.is_zero()) return v;
  }
}

std::map<std::string, int> census(const Field& f, std::size_t n, const std::function<OrbitLabel(const Vec&)>& cls) {
  const Space s(f, n);
  std::map<std::string, int> out;
  for (std::uint64_t id = 1; id < s.size(); ++id) ++out[cls(s.decode(id)).text];
  return out;
}

}  // namespace

TEST(C2Linear, Weights) {
  const Field f = Field::make(3, 1);
  EXPECT_EQ(classify_c2_linear(Vec({f.one(), f.from_int(2)}), 1, 2).text, "X2");
  EXPECT_EQ(classify_c2_linear(Vec({f.zero(), f.zero(), f.one(), f.one()}), 2, 2).text, "X1");
  const Field f2 = Field::make(2, 1);
  const auto c = census(f2, 3, [](const Vec& v) { return classify_c2_linear(v, 1, 3); });
  EXPECT_EQ(c, (std::map<std::string, int>{{"X1", 3}, {"X2", 3}, {"X3", 1}}));
  EXPECT_THROW(classify_c2_linear(Vec::zeros(2), 1, 2), std::invalid_argument);
  EXPECT_THROW(classify_c2_linear(Vec({f.one(), f.one(), f.one()}), 2, 2), std::invalid_argument);
}

TEST(C2SymplecticII, Labels) {
  const Field f3 = Field::make(3, 1);
  EXPECT_EQ(classify_c2_symplectic_case2(f3, Vec({f3.one(), f3.zero()}), 1).text, "X1");
  EXPECT_EQ(classify_c2_symplectic_case2(f3, Vec({f3.one(), f3.from_int(2)}), 1).text, "W{2}");
  const Field f4 = Field::make(2, 2);
  const Elem w = f4.generator();
  const auto a = classify_c2_symplectic_case2(f4, Vec({f4.one(), w}), 1);
  const auto b = classify_c2_symplectic_case2(f4, Vec({f4.one(), f4.mul(w, w)}), 1);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.data, (std::vector<std::uint32_t>{w.id, f4.mul(w, w).id}));
}

TEST(Tensor, Weights) {
  const Field f = Field::make(2, 1);
  const Vec e1({f.one(), f.zero()}), e2({f.zero(), f.one()});
  EXPECT_EQ(tensor_weight(f, tensor(f, e1, e2), 2, 2).text, "Y1");
  Vec v = tensor(f, e1, e1);
  const Vec t = tensor(f, e2, e2);
  for (std::size_t i = 0; i < 4; ++i) v.entries[i] = f.add(v[i], t[i]);
  EXPECT_EQ(tensor_weight(f, v, 2, 2).text, "Y2");
  EXPECT_EQ(census(f, 4, [&](const Vec& x) { return tensor_weight(f, x, 2, 2); }), (std::map<std::string, int>{{"Y1", 9}, {"Y2", 6}}));
}

TEST(Tensor, WeightStableUnderFrobeniusAndScalars) {
  const Field f = Field::make(2, 3);
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    const Vec v = random_nonzero(f, 6, rng);
    const auto w = tensor_weight(f, v, 2, 3);
    EXPECT_LE(w.data[0], 2u);
    EXPECT_EQ(tensor_weight(f, frobenius(f, v, 1), 2, 3), w);
    Vec s = v;
    for (auto& x : s.entries) x = f.mul(f.primitive(), x);
    EXPECT_EQ(tensor_weight(f, s, 2, 3), w);
  }
}

TEST(C5, SubfieldSpanDimension) {
  const Field f = Field::make(2, 2);
  const C5Classifier cls(subfield_of_index(f, 2));
  EXPECT_EQ(cls.c_of(Vec({f.one(), f.one()})), 1u);
  EXPECT_EQ(cls.c_of(Vec({f.one(), f.generator()})), 2u);
  EXPECT_THROW(cls.c_of(Vec::zeros(2)), std::invalid_argument);
}

TEST(C5, DimensionInvariantUnderScalarsAndFrobenius) {
  const Field f = Field::make(2, 6);
  const C5Classifier cls(subfield_of_index(f, 3));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint32_t> d(1, f.order() - 1);
  for (int i = 0; i < 100; ++i) {
    const Vec v = random_nonzero(f, 3, rng);
    const unsigned c = cls.c_of(v);
    EXPECT_LE(c, 3u);
    Vec s = v;
    const Elem l{d(rng)};
    for (auto& x : s.entries) x = f.mul(l, x);
    EXPECT_EQ(cls.c_of(s), c);
    EXPECT_EQ(cls.c_of(frobenius(f, v, 1)), c);
    EXPECT_EQ(cls.classify(s), cls.classify(frobenius(f, v, 1)));
  }
}

TEST(C5, SubfieldLinesShareOneLabel) {
  const Field f = Field::make(3, 2);
  const C5Classifier cls(subfield_of_index(f, 2));
  const Vec a({f.one(), f.zero()});
  const Vec b({f.from_int(2), f.one()});
  Vec lb = b;
  for (auto& x : lb.entries) x = f.mul(f.generator(), x);
  EXPECT_EQ(cls.classify(a), cls.classify(lb));
  EXPECT_EQ(cls.classify(a).data[0], 1u);
}

TEST(C5, CensusAtSmallestCase) {
  const Field f = Field::make(2, 2);
  const C5Classifier cls(subfield_of_index(f, 2));
  std::map<unsigned, int> byc;
  for (const auto& [label, count] : census(f, 2, [&](const Vec& v) { return cls.classify(v); })) byc[label[2] - '0'] += count;
  EXPECT_EQ(byc, (std::map<unsigned, int>{{1, 9}, {2, 6}}));
}

TEST(C5, EtaExamples) {
  EXPECT_EQ(eta(2, 3, 2), 1u);
  EXPECT_EQ(eta(2, 5, 2), 5u);
  EXPECT_EQ(gaussian_binomial(5, 2, 2), 155u);
  for (unsigned r : {2u, 3u, 5u})
    for (std::uint64_t q0 : {2u, 3u}) {
      EXPECT_EQ(eta(1, r, q0), 1u);
      EXPECT_EQ(eta(r, r, q0), 1u);
    }
}

TEST(C5, EtaMatchesSubspaceEnumeration) {
  for (unsigned r : {2u, 3u, 5u})
    for (std::uint32_t q0 : {2u, 3u}) {
      const Field f = Field::make(q0, r);
      const Subfield sub(f, 1);
      for (unsigned a = 1; a <= r; ++a) {
        const auto subs = oracle::subspaces(f, sub, a);
        EXPECT_EQ(subs.size(), gaussian_binomial(r, a, q0)) << "q0=" << q0 << " r=" << r << " a=" << a;
        EXPECT_EQ(oracle::scalar_classes(f, subs), eta(a, r, q0)) << "q0=" << q0 << " r=" << r << " a=" << a;
        EXPECT_EQ(gaussian_binomial(r, a, q0), eta(a, r, q0) * scalar_class_size(a, r, q0));
      }
    }
}

TEST(C5, ScalarStabiliser) {
  const Field f = Field::make(2, 4);
  const Subfield base = subfield_of_index(f, 2);
  EXPECT_EQ(K_of(1, 2, base).order(), 4u);
  EXPECT_EQ(K_of(2, 2, base).order(), 16u);
  EXPECT_THROW(K_of(3, 2, base), std::invalid_argument);
}

TEST(C5, OrbitSizeFormula) {
  const auto s = c5_orbit_size(1, 2, 2, 2, 2);
  EXPECT_EQ(s.l_orbit_size, 9u);
  EXPECT_EQ(s.multipliers, (std::vector<unsigned>{1}));
  EXPECT_EQ(c5_orbit_size(2, 2, 2, 2, 2).l_orbit_size, 6u);
  EXPECT_EQ(scalar_class_size(2, 2, 2), 1u);
  // at (q0, r, n) = (2, 3, 3) the three sizes fill V^#
  std::uint64_t total = 0;
  for (unsigned a = 1; a <= 3; ++a) total += c5_orbit_size(a, 3, 3, 2, 3).l_orbit_size;
  EXPECT_EQ(total, 511u);
  EXPECT_THROW(c5_orbit_size(3, 2, 2, 2, 2), std::invalid_argument);
}

TEST(C8, Labels) {
  const Field f4 = Field::make(2, 2);
  const auto u = standard_form(FormKind::unitary, 2, f4);
  EXPECT_EQ(classify_c8(u, Vec({f4.one(), f4.zero()})).text, "S0");
  const Field f3 = Field::make(3, 1);
  const auto o = standard_form(FormKind::quadratic_odd_square, 3, f3);
  EXPECT_EQ(classify_c8(o, Vec({f3.zero(), f3.zero(), f3.one()})).text, "Ssq");
  const auto plus = standard_form(FormKind::quadratic_plus, 2, f3);
  EXPECT_EQ(census(f3, 2, [&](const Vec& v) { return classify_c8(plus, v); }), (std::map<std::string, int>{{"S#", 4}, {"S0", 4}}));
  const auto line = standard_form(FormKind::quadratic_odd_square, 1, f3);
  EXPECT_EQ(classify_c8(line, Vec({f3.from_int(2)})).text, "S#");
  EXPECT_THROW(classify_c8(standard_form(FormKind::symplectic, 2, f3), Vec({f3.one(), f3.zero()})), std::invalid_argument);
  EXPECT_THROW(classify_c8(u, Vec::zeros(2)), std::invalid_argument);
}
