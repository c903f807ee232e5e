#pragma once

// Cayley graphs Cay(V, S) on F_q^n: validation, distances from zero, and the
// sumset test for diameter two.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "diamtwo/group.hpp"
#include "diamtwo/linalg.hpp"

namespace diamtwo {

struct Validation {
  bool contains_zero = false;
  bool not_symmetric = false;
  bool not_spanning = false;

  bool ok() const { return !contains_zero && !not_symmetric && !not_spanning; }
  std::vector<std::string> errors() const {
    std::vector<std::string> out;
    if (contains_zero) out.emplace_back("connection set contains zero");
    if (not_symmetric) out.emplace_back("connection set is not closed under negation");
    if (not_spanning) out.emplace_back("connection set does not span V");
    return out;
  }
};

/// A validated connection set: sorted vector ids with 0 excluded, S = -S, <S> = V.
class ConnectionSet {
 public:
  const Space& space() const { return space_; }
  const std::vector<std::uint64_t>& ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }

  friend ConnectionSet validate_or_throw(const Space&, std::vector<std::uint64_t>);

 private:
  ConnectionSet(Space space, std::vector<std::uint64_t> ids) : space_(std::move(space)), ids_(std::move(ids)) {}
  Space space_;
  std::vector<std::uint64_t> ids_;
};

inline Validation validate(const Space& space, const std::vector<std::uint64_t>& ids) {
  Validation v;
  std::vector<char> in(space.size(), 0);
  for (auto id : ids) {
    if (id >= space.size()) throw std::invalid_argument("vector id out of range");
    in[id] = 1;
  }
  v.contains_zero = in[0] != 0;
  for (auto id : ids)
    if (!in[space.neg(id)]) v.not_symmetric = true;
  std::vector<Vec> rows;
  Mat basis(0, space.dim());
  for (auto id : ids) {
    if (id == 0) continue;
    rows.push_back(space.decode(id));
    if (rows.size() >= 2 * space.dim() + 2) {
      for (std::size_t i = 0; i < basis.rows(); ++i) rows.push_back(basis.row(i));
      basis = rref(space.field(), Mat::from_rows(rows));
      rows.clear();
      if (basis.rows() == space.dim()) break;
    }
  }
  for (std::size_t i = 0; i < basis.rows(); ++i) rows.push_back(basis.row(i));
  v.not_spanning = rank_of(space.field(), rows) != space.dim();
  return v;
}

inline ConnectionSet validate_or_throw(const Space& space, std::vector<std::uint64_t> ids) {
  const Validation v = validate(space, ids);
  if (!v.ok()) {
    std::string msg;
    for (const auto& e : v.errors()) msg += (msg.empty() ? "" : "; ") + e;
    throw std::invalid_argument(msg);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ConnectionSet(space, std::move(ids));
}

struct DiameterReport {
  bool connected = false;
  std::optional<unsigned> diameter;     // empty when disconnected
  std::vector<std::uint64_t> histogram;  // vertices at each distance from 0
  std::size_t set_size = 0;

  bool diameter_two() const { return diameter && *diameter == 2; }
};

namespace detail {
/// Precomputed vector addition on ids for the BFS inner loop.
class AddTable {
 public:
  explicit AddTable(const Space& s) : space_(s), q_(s.field().order()) {
    digit_add_.resize(std::size_t{q_} * q_);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b) digit_add_[std::size_t{a} * q_ + b] = s.field().add(Elem{a}, Elem{b}).id;
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    if (space_.field().characteristic() == 2) return a ^ b;  // ids are bit strings in characteristic 2
    std::uint64_t out = 0, scale = 1;
    for (std::size_t i = 0; i < space_.dim(); ++i) {
      out += digit_add_[std::size_t(a % q_) * q_ + b % q_] * scale;
      scale *= q_;
      a /= q_;
      b /= q_;
    }
    return out;
  }

 private:
  const Space& space_;
  std::uint32_t q_;
  std::vector<std::uint32_t> digit_add_;
};
}  // namespace detail

/// Breadth-first distances from 0; by vertex-transitivity the eccentricity of 0 is the diameter.
inline DiameterReport distance_profile(const ConnectionSet& s) {
  const Space& space = s.space();
  check_orbit_cap(space);
  const detail::AddTable add(space);
  std::vector<std::int32_t> dist(space.size(), -1);
  std::vector<std::uint64_t> frontier{0}, next;
  dist[0] = 0;
  DiameterReport r;
  r.set_size = s.size();
  r.histogram.push_back(1);
  std::uint64_t reached = 1;
  for (std::int32_t d = 1; !frontier.empty(); ++d) {
    next.clear();
    for (auto x : frontier)
      for (auto y : s.ids()) {
        const std::uint64_t z = add.add(x, y);
        if (dist[z] < 0) {
          dist[z] = d;
          next.push_back(z);
        }
      }
    if (next.empty()) break;
    r.histogram.push_back(next.size());
    reached += next.size();
    frontier.swap(next);
  }
  r.connected = reached == space.size();
  if (r.connected) r.diameter = static_cast<unsigned>(r.histogram.size() - 1);
  return r;
}

/// S is a proper subset of V^# and every nonzero vector lies in S or S + S.
inline bool diam2_by_sumset(const ConnectionSet& s) {
  const Space& space = s.space();
  check_orbit_cap(space);
  if (s.size() == space.size() - 1) return false;
  std::vector<char> covered(space.size(), 0);
  for (auto x : s.ids()) covered[x] = 1;
  const auto& ids = s.ids();
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i; j < ids.size(); ++j) covered[space.add(ids[i], ids[j])] = 1;
  for (std::uint64_t v = 1; v < space.size(); ++v)
    if (!covered[v]) return false;
  return true;
}

/// |V| <= |S|^2 + 1, necessary for diameter at most two.
inline bool eq1_necessary(std::uint64_t space_size, std::uint64_t set_size) {
  const unsigned __int128 bound = static_cast<unsigned __int128>(set_size) * set_size + 1;
  return static_cast<unsigned __int128>(space_size) <= bound;
}

inline bool eq1_necessary(const ConnectionSet& s) { return eq1_necessary(s.space().size(), s.size()); }

}  // namespace diamtwo
