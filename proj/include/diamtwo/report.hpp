#pragma once

// Flat records for the command-line reports, their JSON/CSV/human renderings,
// the parallel grid runner, and the golden bound tables.

#include <algorithm>
#include <atomic>
#include <fstream>
#include <future>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "diamtwo/bounds.hpp"
#include "diamtwo/instance.hpp"

namespace diamtwo {

using ojson = nlohmann::ordered_json;

enum class Format { human, json, csv };

inline Format parse_format(const std::string& s) {
  if (s == "human") return Format::human;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw std::invalid_argument("unknown format: " + s);
}

struct VerificationRecord {
  std::string instance;
  std::string label;
  std::uint64_t orbit_size = 0;
  std::optional<unsigned> diam;  // empty when the graph is disconnected
  std::string theorem_row;
  bool ok = false;

  friend bool operator==(const VerificationRecord&, const VerificationRecord&) = default;
};

inline void to_json(ojson& j, const VerificationRecord& r) {
  j = ojson{{"instance", r.instance}, {"label", r.label}, {"orbit_size", r.orbit_size}};
  j["diam"] = r.diam ? ojson(*r.diam) : ojson(nullptr);
  j["theorem_row"] = r.theorem_row;
  j["ok"] = r.ok;
}

inline void from_json(const ojson& j, VerificationRecord& r) {
  j.at("instance").get_to(r.instance);
  j.at("label").get_to(r.label);
  j.at("orbit_size").get_to(r.orbit_size);
  r.diam = j.at("diam").is_null() ? std::nullopt : std::optional<unsigned>(j.at("diam").get<unsigned>());
  j.at("theorem_row").get_to(r.theorem_row);
  j.at("ok").get_to(r.ok);
}

inline std::vector<VerificationRecord> verification_records(const InstanceResult& res) {
  std::vector<VerificationRecord> out;
  for (const auto& o : res.orbits)
    out.push_back({res.instance.key(), o.label, o.members.size(), o.diameter(), o.prediction.row, o.ok() && res.partition_equal});
  return out;
}

inline ojson census_records(const InstanceResult& res) {
  ojson out = ojson::array();
  for (const auto& o : res.orbits)
    out.push_back(ojson{{"instance", res.instance.key()}, {"label", o.label}, {"orbit_size", o.members.size()}, {"symmetric", o.symmetric}});
  return out;
}

inline ojson oracle_record(const InstanceResult& res) {
  std::string detail;
  if (!res.has_classifier) detail = "oracle only";
  for (const auto& m : res.mismatches) {
    if (!detail.empty()) detail += "; ";
    detail += std::to_string(m.u) + "~" + std::to_string(m.v) + ": " + m.reason;
  }
  std::size_t labels = 0;
  if (res.has_classifier) {
    std::vector<std::string> seen;
    for (const auto& o : res.orbits) seen.push_back(o.label);
    std::sort(seen.begin(), seen.end());
    labels = static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
  }
  return ojson{{"instance", res.instance.key()}, {"orbits", res.orbits.size()}, {"labels", labels},
               {"irreducible", res.irreducible}, {"ok", res.partition_equal}, {"detail", detail}};
}

inline ojson diameter_records(const InstanceResult& res) {
  ojson out = ojson::array();
  for (const auto& o : res.orbits) {
    std::string hist;
    if (o.report)
      for (auto h : o.report->histogram) hist += (hist.empty() ? "" : " ") + std::to_string(h);
    ojson j{{"instance", res.instance.key()}, {"label", o.label}, {"orbit_size", o.members.size()}};
    j["diam"] = o.diameter() ? ojson(*o.diameter()) : ojson(nullptr);
    j["sumset"] = o.sumset.value_or(false);
    j["eq1"] = o.eq1.value_or(false);
    j["histogram"] = hist;
    j["ok"] = !o.sumset || *o.sumset == o.bfs_diam2();
    out.push_back(std::move(j));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rendering of flat record arrays.

namespace detail {
inline std::string cell(const ojson& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}
}  // namespace detail

/// `columns` fixes the header when `rows` is empty.
inline void emit(std::ostream& os, const ojson& rows, Format fmt, const std::vector<std::string>& columns) {
  std::vector<std::string> cols = columns;
  if (cols.empty() && !rows.empty())
    for (auto it = rows.front().begin(); it != rows.front().end(); ++it) cols.push_back(it.key());
  if (fmt == Format::json) {
    os << rows.dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> table;
  table.push_back(cols);
  for (const auto& r : rows) {
    std::vector<std::string> line;
    for (const auto& c : cols) line.push_back(r.contains(c) ? detail::cell(r.at(c)) : "");
    table.push_back(std::move(line));
  }
  if (fmt == Format::csv) {
    for (const auto& line : table) {
      for (std::size_t i = 0; i < line.size(); ++i) os << (i ? "," : "") << detail::csv_quote(line[i]);
      os << '\n';
    }
    return;
  }
  std::vector<std::size_t> width(cols.size(), 0);
  for (const auto& line : table)
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  for (const auto& line : table) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i + 1 < line.size()) os << std::left << std::setw(static_cast<int>(width[i])) << line[i] << "  ";
      else os << line[i];
    }
    os << '\n';
  }
}

inline const std::vector<std::string>& verification_columns() {
  static const std::vector<std::string> c{"instance", "label", "orbit_size", "diam", "theorem_row", "ok"};
  return c;
}

inline ojson to_rows(const std::vector<VerificationRecord>& recs) {
  ojson out = ojson::array();
  for (const auto& r : recs) out.push_back(r);
  return out;
}

// ---------------------------------------------------------------------------
// Grid runner.

struct GridOutcome {
  Instance instance;
  std::optional<InstanceResult> result;
  std::string skipped;  // reason, when there is no result
};

/// Analyses every instance, in parallel, returning outcomes in sorted key order.
inline std::vector<GridOutcome> run_grid(std::vector<Instance> grid, bool with_bfs, std::uint64_t cap = kOrbitCap,
                                         unsigned threads = 0) {
  std::sort(grid.begin(), grid.end());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<GridOutcome> out(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < grid.size();) {
      out[i].instance = grid[i];
      try {
        check_instance(grid[i]);
        const std::uint64_t size = ipow(grid[i].q(), grid[i].dim());
        if (size > cap || size > kOrbitCap) {
          out[i].skipped = "cap exceeded: q^n = " + std::to_string(size);
          continue;
        }
        out[i].result = analyse(grid[i], with_bfs);
      } catch (const std::exception& e) {
        out[i].skipped = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(threads, grid.size()); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

/// Classifier invariance under random group words, a cheap spot check beside the full partition test.
inline std::size_t random_word_check(const Instance& in, std::uint64_t seed, std::size_t samples, std::vector<Mismatch>& bad) {
  const Classifier classify = build_classifier(in);
  if (!classify) return 0;
  const GroupSpec g = build_group(in);
  const Space space(g.field, g.dim);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick_vec(1, space.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_gen(0, g.generators.size() - 1), pick_len(1, 8);
  for (std::size_t i = 0; i < samples; ++i) {
    const std::uint64_t v = pick_vec(rng);
    std::uint64_t w = v;
    for (std::size_t len = pick_len(rng); len > 0; --len) w = apply_id(space, g.generators[pick_gen(rng)], w);
    const OrbitLabel a = classify(space.decode(v)), b = classify(space.decode(w));
    if (a != b) bad.push_back({v, w, "random word changes label " + a.text + " to " + b.text});
  }
  return samples;
}

// ---------------------------------------------------------------------------
// Subfield small-case table against graph search.

struct Table5Check {
  std::string key;       // row key of the regenerated table
  std::uint64_t q0;
  std::string expected;  // table verdict
  std::string observed;  // from graph search
  bool ok() const { return expected == observed; }
};

/// Compares every closed-form cell of the table with BFS at q0 = 2, 3 while q^n stays within `cap`,
/// for rows with r <= max_r.
inline std::vector<Table5Check> confirm_table5(std::uint64_t cap = std::uint64_t{1} << 15, unsigned max_r = 5) {
  std::vector<Table5Check> out;
  const BoundTable t5 = regenerate_table5();
  for (const auto& row : c5_small_case_rows()) {
    if (row.r > max_r) continue;
    for (std::uint64_t q0 : {2u, 3u}) {
      const std::uint64_t q = ipow(q0, row.r);
      if (ipow(q, row.n) > cap) continue;
      const InstanceResult res = analyse(make_instance("c5", q, {{'r', row.r}, {'n', row.n}}), true);
      const Field f = Field::make(res.instance.p, res.instance.e);
      const C5Classifier cls(subfield_of_index(f, row.r));
      const Space space(f, row.n);
      for (const auto& o : res.orbits) {
        const unsigned c = cls.c_of(space.decode(o.members.front()));
        const std::string key = "r=" + std::to_string(row.r) + " n" + (row.open ? ">=" : "=") + std::to_string(row.n) + " c=" + std::to_string(c);
        auto it = std::find_if(t5.entries.begin(), t5.entries.end(), [&](const TableEntry& e) { return e.key == key; });
        if (it == t5.entries.end()) continue;
        std::string seen;
        if (o.bfs_diam2()) seen = "2";
        else if (it->value != ">2" && o.diameter()) seen = std::to_string(*o.diameter());
        else seen = ">2";
        out.push_back({key, q0, it->value, seen});
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Golden tables: tab-separated key/value lines, '#' comments.

inline BoundTable load_golden_table(const std::string& path, const std::string& id) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden table " + path);
  BoundTable t{id, {}};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw std::runtime_error("malformed line in " + path + ": " + line);
    t.entries.push_back({line.substr(0, tab), line.substr(tab + 1)});
  }
  return t;
}

/// Cells of the golden copy that regenerate differently; untabulated extra cells are not differences.
struct TableDiff {
  std::string key, golden, regenerated;
};

inline std::vector<TableDiff> diff_tables(const BoundTable& golden, const BoundTable& regen) {
  std::vector<TableDiff> out;
  std::map<std::string, std::string> g, r;
  for (const auto& e : golden.entries) g[e.key] = e.value;
  for (const auto& e : regen.entries) r[e.key] = e.value;
  for (const auto& [k, v] : g) {
    auto it = r.find(k);
    const std::string rv = it == r.end() ? "(missing)" : it->second;
    if (rv != v) out.push_back({k, v, rv});
  }
  return out;
}

}  // namespace diamtwo
