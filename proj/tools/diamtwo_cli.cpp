// diamtwo: orbit census, diameter verdicts, oracle cross-checks and bound tables
// for affine Cayley graphs of small classical-group families.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "diamtwo/diamtwo.hpp"

#ifndef DIAMTWO_DATA_DIR
#define DIAMTWO_DATA_DIR "data/tables"
#endif

using namespace diamtwo;

namespace {

struct Options {
  std::string cls;
  unsigned p = 0, e = 1, n = 0, m = 0, t = 0, r = 0, k = 0;
  std::string format = "human";
  std::uint64_t cap = kOrbitCap;
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  unsigned threads = 0;
  std::string table = "all";
  std::string data_dir = DIAMTWO_DATA_DIR;
  std::string label;
};

void add_instance_options(CLI::App* cmd, Options& o, bool class_required) {
  auto* c = cmd->add_option("--class", o.cls, "family tag")
                ->check(CLI::IsMember({"c2lin", "c2sp1", "c2sp2", "c4", "c5", "c5sp", "c6t1", "c8u", "c8o", "c8o+", "c8o-",
                                       "c6", "c6t2", "c7", "c9"}));
  if (class_required) c->required();
  cmd->add_option("--p", o.p, "field characteristic");
  cmd->add_option("--e", o.e, "field degree, q = p^e")->check(CLI::Range(1u, 32u));
  cmd->add_option("--n", o.n, "dimension (c5, c5sp, c8*)");
  cmd->add_option("--m", o.m, "block or factor dimension (c2*, c4)");
  cmd->add_option("--t", o.t, "number of blocks (c2lin, c2sp1)");
  cmd->add_option("--r", o.r, "subfield index (c5, c5sp)");
  cmd->add_option("--k", o.k, "first tensor factor dimension (c4)");
  cmd->add_option("--cap", o.cap, "largest q^n to analyse")->check(CLI::Range(std::uint64_t{2}, kOrbitCap));
  cmd->add_option("--threads", o.threads, "worker threads, 0 for all cores");
  cmd->add_option("--seed", o.seed, "seed for randomized spot checks");
}

void add_format_option(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"human", "json", "csv"}));
}

Instance instance_of(const Options& o) {
  if (o.cls == "c6" || o.cls == "c6t2" || o.cls == "c7") throw std::invalid_argument("class " + o.cls + " is bounds-only: use the tables command");
  if (o.cls == "c9") throw std::invalid_argument("class c9 is out of scope");
  if (o.p == 0) throw std::invalid_argument("--p is required with --class");
  Instance in{o.cls, o.p, o.e, o.n, o.m, o.t, o.r, o.k};
  check_instance(in);
  return in;
}

std::vector<Instance> instances_of(const Options& o) {
  if (o.cls.empty()) return default_grid();
  return {instance_of(o)};
}

void report_skips(const std::vector<GridOutcome>& outcomes) {
  for (const auto& oc : outcomes)
    if (!oc.result) std::cerr << "skipped " << oc.instance.key() << ": " << oc.skipped << '\n';
}

int cmd_classify(const Options& o) {
  const auto outcomes = run_grid({instance_of(o)}, false, o.cap, o.threads);
  report_skips(outcomes);
  ojson rows = ojson::array();
  bool ok = true;
  for (const auto& oc : outcomes) {
    if (!oc.result) return 1;
    for (auto& r : census_records(*oc.result)) rows.push_back(r);
    ok = ok && oc.result->partition_equal;
  }
  emit(std::cout, rows, parse_format(o.format), {"instance", "label", "orbit_size", "symmetric"});
  return ok ? 0 : 1;
}

int cmd_verify(const Options& o) {
  const auto outcomes = run_grid(instances_of(o), true, o.cap, o.threads);
  report_skips(outcomes);
  std::vector<VerificationRecord> recs;
  bool ok = true;
  for (const auto& oc : outcomes) {
    if (!oc.result) continue;
    for (auto& r : verification_records(*oc.result)) {
      ok = ok && r.ok;
      recs.push_back(std::move(r));
    }
  }
  emit(std::cout, to_rows(recs), parse_format(o.format), verification_columns());
  return ok ? 0 : 1;
}

int cmd_oracle(const Options& o) {
  const auto outcomes = run_grid(instances_of(o), false, o.cap, o.threads);
  report_skips(outcomes);
  ojson rows = ojson::array();
  bool ok = true;
  for (const auto& oc : outcomes) {
    if (!oc.result) continue;
    ojson row = oracle_record(*oc.result);
    std::vector<Mismatch> bad;
    row["sampled"] = random_word_check(oc.instance, o.seed, o.samples, bad);
    for (const auto& b : bad) {
      std::string d = row["detail"].get<std::string>();
      row["detail"] = d + (d.empty() ? "" : "; ") + b.reason;
    }
    if (!bad.empty()) row["ok"] = false;
    ok = ok && row["ok"].get<bool>();
    rows.push_back(std::move(row));
  }
  emit(std::cout, rows, parse_format(o.format), {"instance", "orbits", "labels", "irreducible", "ok", "detail", "sampled"});
  return ok ? 0 : 1;
}

int cmd_diameter(const Options& o) {
  const auto outcomes = run_grid({instance_of(o)}, true, o.cap, o.threads);
  report_skips(outcomes);
  ojson rows = ojson::array();
  bool ok = true;
  for (const auto& oc : outcomes) {
    if (!oc.result) return 1;
    for (auto& r : diameter_records(*oc.result)) {
      if (!o.label.empty() && r["label"] != o.label) continue;
      ok = ok && r["ok"].get<bool>();
      rows.push_back(std::move(r));
    }
  }
  emit(std::cout, rows, parse_format(o.format), {"instance", "label", "orbit_size", "diam", "sumset", "eq1", "histogram", "ok"});
  return ok ? 0 : 1;
}

int cmd_tables(const Options& o) {
  std::vector<std::string> ids;
  if (o.table == "all") ids = {"5", "6", "7", "8", "9"};
  else ids = {o.table};
  ojson rows = ojson::array();
  bool ok = true;
  for (const auto& id : ids) {
    const BoundTable regen = regenerate_table(id);
    const BoundTable golden = load_golden_table(o.data_dir + "/table" + id + ".tsv", id);
    std::map<std::string, std::string> gold;
    for (const auto& e : golden.entries) gold[e.key] = e.value;
    for (const auto& e : regen.entries) {
      auto it = gold.find(e.key);
      const std::string g = it == gold.end() ? "" : it->second;
      rows.push_back(ojson{{"table", id}, {"key", e.key}, {"value", e.value}, {"golden", g}, {"ok", g.empty() || g == e.value}});
    }
    for (const auto& d : diff_tables(golden, regen)) {
      ok = false;
      if (d.regenerated == "(missing)")
        rows.push_back(ojson{{"table", id}, {"key", d.key}, {"value", d.regenerated}, {"golden", d.golden}, {"ok", false}});
    }
  }
  emit(std::cout, rows, parse_format(o.format), {"table", "key", "value", "golden", "ok"});
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diameter-two Cayley graphs on F_q^n from classical-group families"};
  app.require_subcommand(1);
  Options o;

  auto* classify = app.add_subcommand("classify", "orbit census with sizes and the -S = S flag");
  add_instance_options(classify, o, true);
  add_format_option(classify, o);

  auto* verify = app.add_subcommand("verify-theorem", "closed-form diameter verdicts against graph search");
  add_instance_options(verify, o, false);
  add_format_option(verify, o);

  auto* tables = app.add_subcommand("tables", "regenerate the bound tables and diff them against the golden copies");
  tables->add_option("--table", o.table, "table id")->check(CLI::IsMember({"5", "6", "7", "8", "9", "all"}));
  tables->add_option("--data-dir", o.data_dir, "directory holding table<id>.tsv");
  add_format_option(tables, o);

  auto* oracle = app.add_subcommand("oracle-check", "classifier partition against the generated group's orbits");
  add_instance_options(oracle, o, false);
  add_format_option(oracle, o);
  oracle->add_option("--samples", o.samples, "random words per instance");

  auto* diameter = app.add_subcommand("diameter", "distance profile of every orbit's Cayley graph");
  add_instance_options(diameter, o, true);
  add_format_option(diameter, o);
  diameter->add_option("--label", o.label, "only the orbit with this label");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*classify) return cmd_classify(o);
    if (*verify) return cmd_verify(o);
    if (*tables) return cmd_tables(o);
    if (*oracle) return cmd_oracle(o);
    if (*diameter) return cmd_diameter(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
