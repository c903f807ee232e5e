#include <gtest/gtest.h>

#include <random>

#include "diamtwo/cayley.hpp"

using namespace diamtwo;

namespace {

std::vector<std::uint64_t> weight_one(const Space& s) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t id = 1; id < s.size(); ++id) {
    int nz = 0;
    for (auto x : s.decode(id).entries) nz += x.id != 0;
    if (nz == 1) out.push_back(id);
  }
  return out;
}

// Plain BFS over decoded vectors, independent of the id arithmetic in the library.
unsigned naive_eccentricity(const Space& s, const std::vector<std::uint64_t>& set) {
  const Field& f = s.field();
  std::vector<int> dist(s.size(), -1);
  std::vector<std::uint64_t> frontier{0};
  dist[0] = 0;
  unsigned d = 0;
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (auto x : frontier) {
      const Vec vx = s.decode(x);
      for (auto y : set) {
        Vec z = vx;
        const Vec vy = s.decode(y);
        for (std::size_t i = 0; i < z.size(); ++i) z.entries[i] = f.add(vx[i], vy[i]);
        const auto id = s.encode(z);
        if (dist[id] < 0) {
          dist[id] = static_cast<int>(d + 1);
          next.push_back(id);
        }
      }
    }
    if (next.empty()) break;
    ++d;
    frontier.swap(next);
  }
  return d;
}

}  // namespace

TEST(Cayley, ValidationFlags) {
  const Space s(Field::make(3, 1), 2);
  const auto v = validate(s, {0, s.encode(Vec({Elem{1}, Elem{0}}))});
  EXPECT_TRUE(v.contains_zero);
  EXPECT_TRUE(v.not_symmetric);
  EXPECT_TRUE(v.not_spanning);
  EXPECT_EQ(v.errors().size(), 3u);
  EXPECT_THROW(validate_or_throw(s, {1}), std::invalid_argument);
  EXPECT_THROW(validate(s, {99}), std::invalid_argument);
  EXPECT_TRUE(validate(s, weight_one(s)).ok());
}

TEST(Cayley, HypercubeHasDiameterThree) {
  const Space s(Field::make(2, 1), 3);
  const auto set = validate_or_throw(s, weight_one(s));
  const auto r = distance_profile(set);
  ASSERT_TRUE(r.diameter.has_value());
  EXPECT_EQ(*r.diameter, 3u);
  EXPECT_EQ(r.histogram, (std::vector<std::uint64_t>{1, 3, 3, 1}));
  EXPECT_FALSE(diam2_by_sumset(set));
  EXPECT_TRUE(eq1_necessary(set));
}

TEST(Cayley, CompleteGraphIsNotDiameterTwo) {
  const Space s(Field::make(3, 1), 2);
  std::vector<std::uint64_t> all;
  for (std::uint64_t id = 1; id < s.size(); ++id) all.push_back(id);
  const auto set = validate_or_throw(s, all);
  EXPECT_EQ(distance_profile(set).diameter, 1u);
  EXPECT_FALSE(diam2_by_sumset(set));
}

TEST(Cayley, RookGraphHasDiameterTwo) {
  const Space s(Field::make(5, 1), 2);
  const auto set = validate_or_throw(s, weight_one(s));
  EXPECT_EQ(distance_profile(set).diameter, 2u);
  EXPECT_TRUE(diam2_by_sumset(set));
}

TEST(Cayley, CountingBound) {
  EXPECT_TRUE(eq1_necessary(10, 3));
  EXPECT_FALSE(eq1_necessary(11, 3));
  EXPECT_TRUE(eq1_necessary(std::uint64_t{1} << 40, std::uint64_t{1} << 20));
}

TEST(Cayley, SumsetAgreesWithSearchOnRandomSets) {
  std::mt19937_64 rng(17);
  for (auto [q, n] : std::vector<std::pair<std::uint32_t, std::size_t>>{{2, 4}, {3, 3}, {4, 2}, {5, 2}, {2, 6}}) {
    const Space s(Field::of_order(q), n);
    std::bernoulli_distribution pick(0.15);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<char> in(s.size(), 0);
      for (std::uint64_t id = 1; id < s.size(); ++id)
        if (pick(rng)) in[id] = in[s.neg(id)] = 1;
      std::vector<std::uint64_t> ids;
      for (std::uint64_t id = 1; id < s.size(); ++id)
        if (in[id]) ids.push_back(id);
      if (!validate(s, ids).ok()) continue;
      const auto set = validate_or_throw(s, ids);
      const auto r = distance_profile(set);
      if (!r.connected) {
        // F_q-spanning only forces additive generation over a prime field
        EXPECT_EQ(q, 4u);
        EXPECT_FALSE(diam2_by_sumset(set));
        continue;
      }
      EXPECT_EQ(*r.diameter, naive_eccentricity(s, ids));
      EXPECT_EQ(diam2_by_sumset(set), r.diameter_two()) << "q=" << q << " n=" << n;
      if (r.diameter_two()) {
        EXPECT_TRUE(eq1_necessary(set));
      }
      std::uint64_t total = 0;
      for (auto h : r.histogram) total += h;
      EXPECT_EQ(total, s.size());
    }
  }
}
