#pragma once

// Classical group orders, the extraspecial-normaliser bound functions and their
// searches, the tensor-induced exponent table, and the subfield-family bound
// predicates. All big values are exact integers.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "diamtwo/classify.hpp"
#include "diamtwo/field.hpp"

namespace diamtwo {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(const BigInt& b, std::uint64_t e) { return boost::multiprecision::pow(b, static_cast<unsigned>(e)); }

enum class GroupFamily { GL, Sp, GU, GO_odd, GO_plus, GO_minus };

/// Isometry group orders. For Sp and GO the parameter n is the dimension; for GU the
/// field has order q^2 and q is the order of the fixed field.
inline BigInt group_order(GroupFamily family, unsigned n, std::uint64_t q) {
  if (q < 2 || n < 1) throw std::invalid_argument("group_order: invalid parameters");
  const BigInt Q = q;
  BigInt out = 1;
  switch (family) {
    case GroupFamily::GL:
      for (unsigned i = 0; i < n; ++i) out *= big_pow(Q, n) - big_pow(Q, i);
      return out;
    case GroupFamily::Sp: {
      if (n % 2) throw std::invalid_argument("group_order: Sp needs even dimension");
      const unsigned m = n / 2;
      out = big_pow(Q, std::uint64_t{m} * m);
      for (unsigned i = 1; i <= m; ++i) out *= big_pow(Q, 2 * i) - 1;
      return out;
    }
    case GroupFamily::GU:
      out = big_pow(Q, std::uint64_t{n} * (n - 1) / 2);
      for (unsigned i = 1; i <= n; ++i) out *= i % 2 ? big_pow(Q, i) + 1 : big_pow(Q, i) - 1;
      return out;
    case GroupFamily::GO_odd: {
      if (n % 2 == 0 || q % 2 == 0) throw std::invalid_argument("group_order: odd orthogonal needs n and q odd");
      const unsigned m = n / 2;
      out = 2 * big_pow(Q, std::uint64_t{m} * m);
      for (unsigned i = 1; i <= m; ++i) out *= big_pow(Q, 2 * i) - 1;
      return out;
    }
    case GroupFamily::GO_plus:
    case GroupFamily::GO_minus: {
      if (n % 2) throw std::invalid_argument("group_order: plus/minus orthogonal needs even dimension");
      const unsigned m = n / 2;
      out = 2 * big_pow(Q, std::uint64_t{m} * (m - 1));
      out *= family == GroupFamily::GO_plus ? big_pow(Q, m) - 1 : big_pow(Q, m) + 1;
      for (unsigned i = 1; i < m; ++i) out *= big_pow(Q, 2 * i) - 1;
      return out;
    }
  }
  throw std::invalid_argument("group_order: unknown family");
}

/// (p, l) with q = p^l, or nullopt if q is not a prime power.
inline std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return std::make_pair(q, 1u);
  unsigned l = 0;
  while (q % p == 0) {
    q /= p;
    ++l;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(p, l);
}

/// Largest integer x >= 0 with x^k <= n.
inline std::uint64_t integer_root_floor(const BigInt& n, std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("zeroth root");
  std::uint64_t lo = 0, hi = 1;
  while (big_pow(BigInt(hi), k) <= n) hi *= 2;
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (big_pow(BigInt(mid), k) <= n)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

// ---------------------------------------------------------------------------
// Extraspecial-normaliser bounds.

/// ((r-1)(q-1) r^(2t) |Sp(2t,r)|)^2 + 1 - q^(r^t).
inline BigInt pi_type1(std::uint64_t q, std::uint64_t r, unsigned t) {
  const BigInt base = BigInt(r - 1) * (q - 1) * big_pow(BigInt(r), 2 * t) * group_order(GroupFamily::Sp, 2 * t, r);
  return base * base + 1 - big_pow(BigInt(q), static_cast<std::uint64_t>(big_pow(BigInt(r), t)));
}

/// (2(q-1) 2^(2t) |Sp(2t,2)|)^2 + 1 - q^(2^t).
inline BigInt pi_type2(std::uint64_t q, unsigned t) {
  const BigInt base = BigInt(2) * (q - 1) * big_pow(BigInt(2), 2 * t) * group_order(GroupFamily::Sp, 2 * t, 2);
  return base * base + 1 - big_pow(BigInt(q), std::uint64_t{1} << t);
}

/// ((q-1) 2^(2t) |O^-(2t,2)|)^2 + 1 - q^(2^t).
inline BigInt pi_type4(std::uint64_t q, unsigned t) {
  const BigInt base = BigInt(q - 1) * big_pow(BigInt(2), 2 * t) * group_order(GroupFamily::GO_minus, 2 * t, 2);
  return base * base + 1 - big_pow(BigInt(q), std::uint64_t{1} << t);
}

/// Beyond this q every pi_type1 value is negative: floor of ((r-1) r^(2t) |Sp(2t,r)|)^(2/(r^t-2)).
inline std::uint64_t type1_cap(std::uint64_t r, unsigned t) {
  const BigInt c = BigInt(r - 1) * big_pow(BigInt(r), 2 * t) * group_order(GroupFamily::Sp, 2 * t, r);
  const auto rt = static_cast<std::uint64_t>(big_pow(BigInt(r), t));
  if (rt <= 2) throw std::invalid_argument("type1_cap: r^t must exceed 2");
  return integer_root_floor(c * c, rt - 2);
}

/// floor of (2^(2t+1) |Sp(2t,2)|)^(1/(2^(t-1)-1)).
inline std::uint64_t type2_cap(unsigned t) {
  if (t < 2) throw std::invalid_argument("type2_cap: t >= 2");
  return integer_root_floor(big_pow(BigInt(2), 2 * t + 1) * group_order(GroupFamily::Sp, 2 * t, 2), (std::uint64_t{1} << (t - 1)) - 1);
}

/// floor of (2^(2t) |O^-(2t,2)|)^(1/(2^(t-1)-1)).
inline std::uint64_t type4_cap(unsigned t) {
  if (t < 2) throw std::invalid_argument("type4_cap: t >= 2");
  return integer_root_floor(big_pow(BigInt(2), 2 * t) * group_order(GroupFamily::GO_minus, 2 * t, 2), (std::uint64_t{1} << (t - 1)) - 1);
}

inline bool admissible_type1(std::uint64_t q, std::uint64_t r) {
  const auto pp = prime_power(q);
  return pp && q % r == 1 && pp->second <= r - 1;
}
inline bool admissible_type2(std::uint64_t q) {
  const auto pp = prime_power(q);
  return pp && q % 4 == 1 && pp->second <= 2;
}
inline bool admissible_type4(std::uint64_t q) { return q >= 3 && is_prime(q); }

/// Largest admissible q up to the cap with positive pi, if any.
inline std::optional<std::uint64_t> search_type1(std::uint64_t r, unsigned t) {
  std::optional<std::uint64_t> best;
  const std::uint64_t cap = type1_cap(r, t);
  for (std::uint64_t q = 2; q <= cap; ++q)
    if (admissible_type1(q, r) && pi_type1(q, r, t) > 0) best = q;
  return best;
}
inline std::optional<std::uint64_t> search_type2(unsigned t) {
  std::optional<std::uint64_t> best;
  const std::uint64_t cap = type2_cap(t);
  for (std::uint64_t q = 2; q <= cap; ++q)
    if (admissible_type2(q) && pi_type2(q, t) > 0) best = q;
  return best;
}
inline std::optional<std::uint64_t> search_type4(unsigned t) {
  std::optional<std::uint64_t> best;
  const std::uint64_t cap = type4_cap(t);
  for (std::uint64_t q = 3; q <= cap; ++q)
    if (admissible_type4(q) && pi_type4(q, t) > 0) best = q;
  return best;
}

/// Primes r for which the crude exponent bound leaves Type 1 cases open at this t.
inline std::vector<std::uint64_t> type1_open_primes(unsigned t) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 3; r < 64; r += 2) {
    if (!is_prime(r)) continue;
    const BigInt lhs = 4 * t * t + 6 * t + 4;
    if (lhs < big_pow(BigInt(r), t)) continue;
    out.push_back(r);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tensor-induced bound: largest m >= 2 with t^2 + (2m^2 - 3)t + 4 >= m^t.

inline std::optional<unsigned> m0(unsigned t) {
  std::optional<unsigned> best;
  for (unsigned m = 2; m < 64; ++m) {
    const BigInt lhs = BigInt(t) * t + (BigInt(2) * m * m - 3) * t + 4;
    if (!(lhs < big_pow(BigInt(m), t))) best = m;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Subfield-family predicates.

struct C5Verdicts {
  bool top = false;                  // c in {r-1, r}: diameter 2
  std::optional<unsigned> c_one;     // c = 1: diameter min(n, r)
  bool small_c = false;              // 2 <= c < min(n,r)/2: diameter > 2
  bool bound_statement = false;      // order bound with +k1
  bool bound_proof = false;          // order bound with -k1
  bool sp_small_c = false;           // symplectic variant: c < min(n,r)/2
  bool sp_bound = false;             // symplectic variant: r > (n^2 + n + 2st)/(n-2)
};

/// Largest divisor of the automorphism group order that is at most eta(a).
inline unsigned c5_bound_s(unsigned a, unsigned r, std::uint64_t q0, unsigned field_degree) {
  const std::uint64_t e = eta(a, r, q0);
  unsigned s = 1;
  for (unsigned d = 1; d <= field_degree; ++d)
    if (field_degree % d == 0 && d <= e) s = d;
  return s;
}

inline C5Verdicts c5_bound_predicates(unsigned n, unsigned r, std::uint64_t q0, unsigned a, unsigned s) {
  if (n < 1 || r < 2 || a < 1 || a > std::min(n, r) || q0 < 2 || s < 1)
    throw std::invalid_argument("c5_bound_predicates: invalid parameters");
  C5Verdicts v;
  const unsigned mn = std::min(n, r);
  v.top = a == r || a + 1 == r;
  if (a == 1) v.c_one = mn;
  v.small_c = a >= 2 && 2 * a < mn;
  // 68 k1: 72s for q0 = 2, 68s - 85 otherwise.
  const std::int64_t k68 = q0 == 2 ? 72 * std::int64_t{s} : 68 * std::int64_t{s} - 85;
  if (3 <= n && n < r && n <= 2 * a) {
    const std::int64_t lhs = 68 * 2 * std::int64_t{n} * a;
    const std::int64_t base = 68 * std::int64_t{r} * (std::int64_t{n} - 2);
    v.bound_statement = lhs < base + k68;
    v.bound_proof = lhs < base - k68;
  }
  v.sp_small_c = 2 * a < mn;
  if (3 <= n && n <= r && 2 * a >= n) {
    // 34 * 2st: 36s for q0 = 2 (t = 9/17), 34s otherwise (t = 1/2).
    const std::int64_t st34 = q0 == 2 ? 36 * std::int64_t{s} : 34 * std::int64_t{s};
    v.sp_bound = 34 * std::int64_t{r} * (std::int64_t{n} - 2) > 34 * (std::int64_t{n} * n + n) + st34;
  }
  return v;
}

/// Diameter conclusion for the subfield family at (n, r, c), from the closed-form cases only:
/// "2", "3", ..., ">2", or empty when undecided.
inline std::string c5_verdict(unsigned n, unsigned r, unsigned c) {
  if (c == r || c + 1 == r) return "2";
  if (c == 1) return std::to_string(std::min(n, r));
  if (c >= 2 && 2 * c < std::min(n, r)) return ">2";
  return "";
}

// ---------------------------------------------------------------------------
// Tables.

struct TableEntry {
  std::string key;
  std::string value;  // "-" when no admissible value exists
  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

struct BoundTable {
  std::string id;
  std::vector<TableEntry> entries;
};

inline std::string opt_str(const std::optional<std::uint64_t>& x) { return x ? std::to_string(*x) : "-"; }

inline BoundTable regenerate_table6() {
  BoundTable t{"6", {}};
  std::map<unsigned, std::optional<std::uint64_t>> r0;
  std::map<std::pair<std::uint64_t, unsigned>, std::string> cell;
  for (unsigned tt = 1; tt <= 4; ++tt) {
    for (std::uint64_t r : type1_open_primes(tt)) {
      const auto q = search_type1(r, tt);
      if (q) r0[tt] = std::max(r0[tt].value_or(0), r);
      cell[{r, tt}] = opt_str(q);
    }
  }
  auto key = [](std::uint64_t r, unsigned tt) { return "q0(" + std::to_string(r) + "," + std::to_string(tt) + ")"; };
  // the tabulated grid first; a closed cell (r^t beyond the exponent bound) has no admissible q
  for (std::uint64_t r : {3u, 5u, 7u, 11u})
    for (unsigned tt = 1; tt <= 3; ++tt) {
      auto it = cell.find({r, tt});
      t.entries.push_back({key(r, tt), it == cell.end() ? "-" : it->second});
      if (it != cell.end()) cell.erase(it);
    }
  for (const auto& [rt, v] : cell) t.entries.push_back({key(rt.first, rt.second), v});
  for (unsigned tt = 1; tt <= 4; ++tt) t.entries.push_back({"r0(" + std::to_string(tt) + ")", opt_str(r0[tt])});
  return t;
}

inline BoundTable regenerate_table7() {
  BoundTable t{"7", {}};
  for (unsigned tt = 2; tt <= 7; ++tt) t.entries.push_back({"q0(" + std::to_string(tt) + ")", opt_str(search_type2(tt))});
  return t;
}

inline BoundTable regenerate_table8() {
  BoundTable t{"8", {}};
  for (unsigned tt = 2; tt <= 8; ++tt) t.entries.push_back({"q0(" + std::to_string(tt) + ")", opt_str(search_type4(tt))});
  return t;
}

inline BoundTable regenerate_table9() {
  BoundTable t{"9", {}};
  for (unsigned tt = 3; tt <= 7; ++tt) {
    const auto m = m0(tt);
    t.entries.push_back({"m0(" + std::to_string(tt) + ")", m ? std::to_string(*m) : "-"});
  }
  return t;
}

/// Rows (r, n) of the subfield small-case table; n_min with `open` meaning "n >= n_min".
struct C5Row {
  unsigned r, n;
  bool open;
};

inline const std::vector<C5Row>& c5_small_case_rows() {
  static const std::vector<C5Row> rows{{2, 2, true}, {3, 2, false}, {3, 3, true}, {5, 2, false},
                                       {5, 3, false}, {5, 4, false}, {5, 5, true}};
  return rows;
}

/// Closed-form verdicts only; a row marked open must give the same verdict for every n >= n_min
/// (checked up to n_min + 8).
inline BoundTable regenerate_table5() {
  BoundTable t{"5", {}};
  for (const auto& row : c5_small_case_rows()) {
    for (unsigned c = 1; c <= std::min(row.n, row.r); ++c) {
      const std::string v = c5_verdict(row.n, row.r, c);
      if (v.empty()) continue;
      if (row.open)
        for (unsigned n = row.n + 1; n <= row.n + 8; ++n)
          if (c5_verdict(n, row.r, c) != v) throw std::logic_error("subfield verdict depends on n in an open row");
      t.entries.push_back({"r=" + std::to_string(row.r) + " n" + (row.open ? ">=" : "=") + std::to_string(row.n) +
                               " c=" + std::to_string(c),
                           v});
    }
  }
  return t;
}

inline BoundTable regenerate_table(const std::string& id) {
  if (id == "5") return regenerate_table5();
  if (id == "6") return regenerate_table6();
  if (id == "7") return regenerate_table7();
  if (id == "8") return regenerate_table8();
  if (id == "9") return regenerate_table9();
  throw std::invalid_argument("unknown table id: " + id);
}

}  // namespace diamtwo
