#pragma once

// A desk-scale instance of one group family: its group, its classifier, the
// diameter verdict predicted by the closed-form results, and the analysis
// that compares all of these with the oracle and with graph search.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "diamtwo/bounds.hpp"
#include "diamtwo/cayley.hpp"
#include "diamtwo/classify.hpp"
#include "diamtwo/forms.hpp"
#include "diamtwo/group.hpp"

namespace diamtwo {

inline const std::vector<std::string>& class_tags() {
  static const std::vector<std::string> tags{"c2lin", "c2sp1", "c2sp2", "c4",  "c5",  "c5sp",
                                             "c6t1",  "c8u",   "c8o",   "c8o+", "c8o-"};
  return tags;
}

struct Instance {
  std::string cls;
  unsigned p = 2, e = 1;
  unsigned n = 0, m = 0, t = 0, r = 0, k = 0;

  std::uint64_t q() const {
    std::uint64_t out = 1;
    for (unsigned i = 0; i < e; ++i) out *= p;
    return out;
  }

  /// Dimension of V over F_q.
  unsigned dim() const {
    if (cls == "c2lin" || cls == "c2sp1") return m * t;
    if (cls == "c2sp2") return 2 * m;
    if (cls == "c4") return k * m;
    if (cls == "c6t1") return 2;
    return n;
  }

  /// Stable, sortable key naming the parameters that matter for the class.
  std::string key() const {
    std::ostringstream s;
    s << cls << "(q=" << q();
    if (cls == "c2lin" || cls == "c2sp1") s << ",m=" << m << ",t=" << t;
    else if (cls == "c2sp2") s << ",m=" << m;
    else if (cls == "c4") s << ",k=" << k << ",m=" << m;
    else if (cls == "c5" || cls == "c5sp") s << ",r=" << r << ",n=" << n;
    else if (cls != "c6t1") s << ",n=" << n;
    s << ")";
    return s.str();
  }

  friend bool operator<(const Instance& a, const Instance& b) { return a.key() < b.key(); }
};

inline Instance make_instance(const std::string& cls, std::uint64_t q, std::initializer_list<std::pair<char, unsigned>> params) {
  const auto pp = prime_power(q);
  if (!pp) throw std::invalid_argument("q must be a prime power");
  Instance in{cls, static_cast<unsigned>(pp->first), pp->second};
  for (auto [name, v] : params) {
    switch (name) {
      case 'n': in.n = v; break;
      case 'm': in.m = v; break;
      case 't': in.t = v; break;
      case 'r': in.r = v; break;
      case 'k': in.k = v; break;
      default: throw std::invalid_argument("unknown instance parameter");
    }
  }
  return in;
}

/// Instances of the verification grid: every family with a closed-form classifier at desk scale.
inline std::vector<Instance> default_grid() {
  std::vector<Instance> g;
  for (auto [q, m, t] : std::vector<std::array<unsigned, 3>>{{2, 1, 3}, {3, 1, 2}, {2, 2, 2}, {4, 1, 2}})
    g.push_back(make_instance("c2lin", q, {{'m', m}, {'t', t}}));
  for (auto [q, m] : std::vector<std::array<unsigned, 2>>{{3, 1}, {4, 1}, {3, 2}}) g.push_back(make_instance("c2sp2", q, {{'m', m}}));
  for (auto [q, k, m] : std::vector<std::array<unsigned, 3>>{{2, 2, 2}, {3, 2, 2}})
    g.push_back(make_instance("c4", q, {{'k', k}, {'m', m}}));
  for (auto [q0, r, n] : std::vector<std::array<unsigned, 3>>{{2, 2, 2}, {2, 2, 3}, {3, 2, 2}, {2, 3, 3}}) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < r; ++i) q *= q0;
    g.push_back(make_instance("c5", q, {{'r', r}, {'n', n}}));
  }
  for (auto [q, n] : std::vector<std::array<unsigned, 2>>{{4, 2}, {4, 3}}) g.push_back(make_instance("c8u", q, {{'n', n}}));
  g.push_back(make_instance("c8o", 3, {{'n', 3}}));
  for (auto [q, n] : std::vector<std::array<unsigned, 2>>{{3, 2}, {2, 2}, {2, 4}}) {
    g.push_back(make_instance("c8o+", q, {{'n', n}}));
    g.push_back(make_instance("c8o-", q, {{'n', n}}));
  }
  std::sort(g.begin(), g.end());
  return g;
}

inline FormKind c8_kind(const std::string& cls) {
  if (cls == "c8u") return FormKind::unitary;
  if (cls == "c8o") return FormKind::quadratic_odd_square;
  if (cls == "c8o+") return FormKind::quadratic_plus;
  if (cls == "c8o-") return FormKind::quadratic_minus;
  throw std::invalid_argument("not a classical-form class: " + cls);
}

inline bool is_c8(const std::string& cls) { return cls.rfind("c8", 0) == 0; }

/// Rejects parameter combinations outside the families' definitions.
inline void check_instance(const Instance& in) {
  if (std::find(class_tags().begin(), class_tags().end(), in.cls) == class_tags().end()) {
    if (in.cls == "c6" || in.cls == "c6t2" || in.cls == "c7")
      throw std::invalid_argument("class " + in.cls + " is bounds-only: use the tables command");
    if (in.cls == "c9") throw std::invalid_argument("class c9 is out of scope");
    throw std::invalid_argument("unknown class tag: " + in.cls);
  }
  if (!is_prime(in.p) || in.e < 1) throw std::invalid_argument("field order must be a prime power");
  const std::string& c = in.cls;
  if ((c == "c2lin" || c == "c2sp1") && (in.m < 1 || in.t < 2)) throw std::invalid_argument(c + " needs --m >= 1 and --t >= 2");
  if (c == "c2sp1" && in.m % 2) throw std::invalid_argument("c2sp1 needs even --m");
  if (c == "c2sp2" && in.m < 1) throw std::invalid_argument("c2sp2 needs --m >= 1");
  if (c == "c4" && (in.k < 2 || in.m < 2)) throw std::invalid_argument("c4 needs --k >= 2 and --m >= 2");
  if (c == "c5" || c == "c5sp") {
    if (in.r < 2 || in.e % in.r) throw std::invalid_argument(c + " needs --r >= 2 dividing --e");
    if (in.n < 1) throw std::invalid_argument(c + " needs --n >= 1");
    if (c == "c5sp" && in.n % 2) throw std::invalid_argument("c5sp needs even --n");
  }
  if (c == "c6t1" && (in.e != 1 || in.p == 2)) throw std::invalid_argument("c6t1 needs an odd prime q");
  if (is_c8(c)) {
    if (in.n < 1) throw std::invalid_argument(c + " needs --n >= 1");
    (void)standard_form(c8_kind(c), in.n, Field::make(in.p, in.e));  // throws on incompatible parameters
  }
}

inline GroupSpec build_group(const Instance& in) {
  check_instance(in);
  const Field f = Field::make(in.p, in.e);
  const std::string& c = in.cls;
  if (c == "c2lin") return generators_c2_linear(f, in.m, in.t);
  if (c == "c2sp1") return generators_c2_sp_case1(f, in.m, in.t);
  if (c == "c2sp2") return generators_c2_sp_case2(f, in.m);
  if (c == "c4") return generators_tensor(f, in.k, in.m);
  if (c == "c5") return generators_c5(f, in.n, in.r);
  if (c == "c5sp") return generators_c5_sp(f, in.n, in.r);
  if (c == "c6t1") return generators_c6_t1_type4(in.p);
  return brute_force_isometry_group(standard_form(c8_kind(c), in.n, f), Preservation::semisimilarity);
}

using Classifier = std::function<OrbitLabel(const Vec&)>;

/// Closed-form classifier, or empty for oracle-only classes.
inline Classifier build_classifier(const Instance& in) {
  check_instance(in);
  const Field f = Field::make(in.p, in.e);
  const std::string& c = in.cls;
  if (c == "c2lin") return [m = in.m, t = in.t](const Vec& v) { return classify_c2_linear(v, m, t); };
  if (c == "c2sp1") return [m = in.m, t = in.t](const Vec& v) { return classify_c2_symplectic_case1(v, m, t); };
  if (c == "c2sp2") return [f, m = in.m](const Vec& v) { return classify_c2_symplectic_case2(f, v, m); };
  if (c == "c4") return [f, k = in.k, m = in.m](const Vec& v) { return tensor_weight(f, v, k, m); };
  if (c == "c5") {
    auto cls = std::make_shared<C5Classifier>(subfield_of_index(f, in.r));
    return [cls](const Vec& v) { return cls->classify(v); };
  }
  if (is_c8(c)) {
    auto form = std::make_shared<ClassicalForm>(standard_form(c8_kind(c), in.n, f));
    return [form](const Vec& v) { return classify_c8(*form, v); };
  }
  return {};
}

/// Closed-form diameter prediction for one orbit.
struct Prediction {
  std::string row;            // theorem row id, "none" when outside every row, "open" when undecided
  std::optional<bool> diam2;  // empty when undecided
};

namespace detail {
inline Prediction yes(std::string row) { return {std::move(row), true}; }
inline Prediction no() { return {"none", false}; }
inline Prediction open() { return {"open", std::nullopt}; }
}  // namespace detail

/// `label` is the classifier label where one exists; `rep` is an orbit member.
inline Prediction predict(const Instance& in, const std::optional<OrbitLabel>& label, const Vec& rep) {
  using detail::no;
  using detail::open;
  using detail::yes;
  const std::string& c = in.cls;
  const std::uint64_t q = in.q();
  if (c == "c2lin" || c == "c2sp1") {
    const std::uint64_t qm = ipow(q, in.m);
    const unsigned s = label->data.at(0);
    const bool ok = qm > 2 && 2 * s >= in.t;
    return ok ? yes(c == "c2lin" ? "gl.1" : "sp.1") : no();
  }
  if (c == "c2sp2") {
    if (in.m == 1 || (in.m == 2 && q % 2 == 0)) return open();  // outside the family's hypotheses
    return yes("sp.2");
  }
  if (c == "c4") {
    const unsigned s = label->data.at(0);
    return 2 * s >= std::min(in.k, in.m) ? yes(in.k == in.m ? "gl.6" : "gl.2") : no();
  }
  if (c == "c5" || c == "c5sp") {
    const Field f = Field::make(in.p, in.e);
    const C5Classifier cls(subfield_of_index(f, in.r));
    const unsigned a = cls.c_of(rep);
    const std::uint64_t q0 = cls.subfield().order();
    if (c == "c5sp") {
      const auto v = c5_bound_predicates(in.n, in.r, q0, a, c5_bound_s(a, in.r, q0, in.e));
      if (v.sp_small_c || v.sp_bound) return no();
      return open();
    }
    if (a == 1 && (in.n == 2 || in.r == 2)) return yes("gl.4");
    if (a == in.r || a + 1 == in.r) return yes(in.r > 2 && in.n > 2 ? "gl.3" : "gl.3-ext");
    if (a == 1) return no();
    const auto v = c5_bound_predicates(in.n, in.r, q0, a, c5_bound_s(a, in.r, q0, in.e));
    if (v.small_c || v.bound_proof) return no();
    return open();
  }
  if (c == "c6t1") return yes("sp.3");
  if (c == "c8u") return in.n >= 2 ? yes("gl.7") : no();
  const auto fc = static_cast<FormClass>(label->data.at(0));
  if (c == "c8o") {
    if (in.n == 1) return no();
    if (in.n == 3 && q == 3) return fc == FormClass::S0 ? yes("gl.8") : no();
    return yes("gl.9");
  }
  if (c == "c8o+") {
    if (q % 2) return yes("gl.10");
    if (in.n == 2 && q == 2) return fc == FormClass::S0 ? yes("sp.4") : no();
    return yes("sp.5");
  }
  if (c == "c8o-") {
    if (in.n <= 2) return no();
    return yes(q % 2 ? "gl.11" : "sp.6");
  }
  throw std::invalid_argument("no prediction rule for class " + c);
}

// ---------------------------------------------------------------------------
// Analysis.

struct OrbitResult {
  std::string label;
  std::vector<std::uint64_t> members;  // sorted vector ids
  bool symmetric = false;              // S = -S
  Validation validation;
  std::optional<DiameterReport> report;
  std::optional<bool> sumset;
  std::optional<bool> eq1;
  Prediction prediction;

  std::optional<unsigned> diameter() const { return report ? report->diameter : std::nullopt; }
  bool bfs_diam2() const { return report && report->diameter_two(); }
  /// Prediction (when decided) and the sumset path both agree with graph search.
  bool ok() const {
    if (prediction.diam2 && *prediction.diam2 != bfs_diam2()) return false;
    if (sumset && *sumset != bfs_diam2()) return false;
    if (eq1 && bfs_diam2() && !*eq1) return false;
    return true;
  }
};

struct Mismatch {
  std::uint64_t u, v;
  std::string reason;
};

struct InstanceResult {
  Instance instance;
  std::string group_name;
  std::uint64_t space_size = 0;
  std::vector<OrbitResult> orbits;  // ordered by least member
  bool has_classifier = false;
  bool partition_equal = true;
  std::vector<Mismatch> mismatches;
  bool irreducible = true;

  bool ok() const {
    if (!partition_equal) return false;
    for (const auto& o : orbits)
      if (!o.ok()) return false;
    return true;
  }
};

/// Orbits from the oracle, labels from the classifier (or orbit indices), and optionally
/// graph search on every orbit.
inline InstanceResult analyse(const Instance& in, bool with_bfs) {
  InstanceResult res;
  res.instance = in;
  const GroupSpec g = build_group(in);
  res.group_name = g.name;
  const Space space(g.field, g.dim);
  res.space_size = space.size();
  const OrbitPartition part = all_orbits(g);
  res.irreducible = orbits_span(g, part);
  const Classifier classify = build_classifier(in);
  res.has_classifier = static_cast<bool>(classify);

  std::vector<std::vector<std::uint64_t>> members(part.count());
  for (std::uint64_t id = 1; id < space.size(); ++id) members[part.orbit_of[id]].push_back(id);

  if (classify) {
    std::map<OrbitLabel, std::size_t> first_orbit;
    for (std::size_t o = 0; o < part.count() && res.mismatches.size() < 8; ++o) {
      const OrbitLabel l0 = classify(space.decode(members[o].front()));
      for (auto id : members[o]) {
        const OrbitLabel l = classify(space.decode(id));
        if (l != l0) {
          res.mismatches.push_back({members[o].front(), id, "same orbit, labels " + l0.text + " and " + l.text});
          break;
        }
      }
      auto [it, fresh] = first_orbit.emplace(l0, o);
      if (!fresh) res.mismatches.push_back({members[it->second].front(), members[o].front(), "different orbits share label " + l0.text});
    }
    res.partition_equal = res.mismatches.empty();
  }

  for (std::size_t o = 0; o < part.count(); ++o) {
    OrbitResult r;
    const Vec rep = space.decode(members[o].front());
    std::optional<OrbitLabel> label;
    if (classify) label = classify(rep);
    r.label = label ? label->text : "orbit" + std::to_string(o);
    r.members = members[o];
    r.validation = validate(space, r.members);
    r.symmetric = !r.validation.not_symmetric;
    r.prediction = predict(in, label, rep);
    r.eq1 = eq1_necessary(space.size(), r.members.size());
    if (with_bfs) {
      if (r.validation.ok()) {
        const ConnectionSet cs = validate_or_throw(space, r.members);
        r.report = distance_profile(cs);
        r.sumset = diam2_by_sumset(cs);
      } else {
        DiameterReport rep_disconnected;
        rep_disconnected.set_size = r.members.size();
        r.report = rep_disconnected;
        r.sumset = false;
      }
    }
    res.orbits.push_back(std::move(r));
  }
  return res;
}

}  // namespace diamtwo
