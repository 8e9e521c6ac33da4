// possind command-line front end. Talks to the library only through the C
// interface in possind.h.
//
// Exit codes: 0 success / property holds, 1 query answered false or a
// violation was found, 2 usage or input error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "possind/possind.h"

using nlohmann::ordered_json;

namespace {

constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(possind_status status) {
  if (status != POSSIND_OK) {
    throw InputError(std::string(possind_status_name(status)) + ": " +
                     possind_last_error());
  }
}

std::string take(char* s) {
  std::string out = s ? s : "";
  possind_string_free(s);
  return out;
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using DistPtr = std::unique_ptr<possind_dist, Deleter<possind_dist, possind_dist_free>>;
using EvidencePtr =
    std::unique_ptr<possind_evidence, Deleter<possind_evidence, possind_evidence_free>>;
using RelationPtr =
    std::unique_ptr<possind_relation, Deleter<possind_relation, possind_relation_free>>;
using AxiomsPtr =
    std::unique_ptr<possind_axioms, Deleter<possind_axioms, possind_axioms_free>>;
using FuzzPtr = std::unique_ptr<possind_fuzz, Deleter<possind_fuzz, possind_fuzz_free>>;
using ChecksPtr =
    std::unique_ptr<possind_checks, Deleter<possind_checks, possind_checks_free>>;

DistPtr load(const std::string& path) {
  possind_dist* d = nullptr;
  check(possind_dist_load(path.c_str(), &d));
  return DistPtr(d);
}

possind_relation_kind relation_kind(const std::string& text) {
  if (text == "independence") return POSSIND_INDEPENDENCE;
  if (text == "noninteractivity") return POSSIND_NONINTERACTIVITY;
  throw InputError("unknown relation '" + text +
                   "' (expected independence or noninteractivity)");
}

possind_level level_of(const std::string& text) {
  if (text == "graphoid") return POSSIND_GRAPHOID;
  if (text == "semigraphoid") return POSSIND_SEMIGRAPHOID;
  throw InputError("unknown level '" + text +
                   "' (expected semigraphoid or graphoid)");
}

ordered_json table_of(const possind_dist* d) {
  ordered_json rows = ordered_json::array();
  for (size_t i = 0; i < possind_dist_size(d); ++i) {
    char* a = nullptr;
    double v = 0.0;
    check(possind_dist_entry(d, i, &a, &v));
    rows.push_back({{"assignment", take(a)}, {"possibility", v}});
  }
  return rows;
}

void print_table(const ordered_json& rows) {
  for (const auto& r : rows) {
    std::cout << "  " << r["assignment"].get<std::string>() << "  "
              << r["possibility"].get<double>() << "\n";
  }
}

std::string set_text(const std::string& csv) { return "{" + csv + "}"; }

/// Options and report shared by every verb.
struct Session {
  std::string verb;
  std::string json_path;
  bool timing = false;
  ordered_json inputs = ordered_json::object();
  std::chrono::steady_clock::time_point start;

  void attach(CLI::App* sub) {
    sub->add_option("--json", json_path, "Write a machine-readable report");
    sub->add_flag("--timing", timing,
                  "Record wall time in the report (makes it nondeterministic)");
  }

  void write(ordered_json body) const {
    if (json_path.empty()) return;
    ordered_json report;
    report["verb"] = verb;
    report["inputs"] = inputs;
    for (auto& [k, v] : body.items()) report[k] = v;
    if (!report.contains("witnesses")) report["witnesses"] = ordered_json::array();
    if (!report.contains("counterexamples")) {
      report["counterexamples"] = ordered_json::array();
    }
    if (timing) {
      report["timing_ms"] =
          std::chrono::duration<double, std::milli>(
              std::chrono::steady_clock::now() - start)
              .count();
    } else {
      report["timing_ms"] = nullptr;
    }
    std::ofstream out(json_path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + json_path + "'");
    out << report.dump(2) << "\n";
  }
};

struct QueryOptions {
  std::string dist;
  std::string a, b, c;
  std::string conj = "min";
  std::string relation = "independence";
  std::string level = "graphoid";
  std::string keep, target, given;
  double eps = 1e-9;
};

struct FuzzOptions {
  size_t vars = 3;
  size_t frame = 2;
  size_t trials = 1000;
  int grid = 10;
  uint64_t seed = 0;
  bool positive = false;
  bool keep_going = false;
  std::string conj = "min,luka,prod";
  std::vector<std::string> inject;
  std::string repro = "fuzz_repro.json";
  double eps = 1e-9;
};

int run_marginalize(Session& s, const QueryOptions& o) {
  auto d = load(o.dist);
  possind_dist* m = nullptr;
  check(possind_dist_marginalize(d.get(), o.keep.c_str(), &m));
  DistPtr marg(m);
  s.inputs = {{"dist", o.dist}, {"keep", o.keep}};
  auto rows = table_of(marg.get());
  std::cout << "marginal on " << set_text(o.keep) << ":\n";
  print_table(rows);
  s.write({{"results", rows}});
  return 0;
}

int run_condition(Session& s, const QueryOptions& o) {
  auto d = load(o.dist);
  possind_dist* m = nullptr;
  check(possind_dist_condition(d.get(), o.target.c_str(), o.given.c_str(),
                               o.conj.c_str(), &m));
  DistPtr cond(m);
  s.inputs = {{"dist", o.dist}, {"target", o.target}, {"given", o.given},
              {"conj", o.conj}};
  auto rows = table_of(cond.get());
  std::cout << "conditional " << set_text(o.target) << " | "
            << set_text(o.given) << " under " << o.conj << ":\n";
  print_table(rows);
  s.write({{"results", rows}});
  return 0;
}

int run_independent(Session& s, const QueryOptions& o) {
  auto d = load(o.dist);
  const auto kind = relation_kind(o.relation);
  possind_evidence* e = nullptr;
  check(possind_membership(d.get(), o.a.c_str(), o.b.c_str(), o.c.c_str(),
                           o.conj.c_str(), kind, o.eps, &e));
  EvidencePtr ev(e);
  int closed = 0;
  check(possind_characterize(d.get(), o.a.c_str(), o.b.c_str(), o.c.c_str(),
                             o.conj.c_str(), kind, o.eps, &closed));
  const bool verdict = possind_evidence_verdict(ev.get()) != 0;

  s.inputs = {{"dist", o.dist}, {"a", o.a},          {"b", o.b},
              {"c", o.c},       {"conj", o.conj},    {"relation", o.relation},
              {"eps", o.eps}};
  const std::string triplet =
      "(" + set_text(o.a) + "," + set_text(o.b) + "," + set_text(o.c) + ")";
  std::cout << triplet << (verdict ? " is in " : " is NOT in ") << o.relation
            << " under " << o.conj << "\n";
  std::cout << "closed-form test: " << (closed ? "member" : "non-member")
            << "\n";

  ordered_json witnesses = ordered_json::array();
  for (size_t i = 0; i < possind_evidence_witness_count(ev.get()); ++i) {
    int eq = 0;
    char* point = nullptr;
    double left = 0.0, right = 0.0;
    check(possind_evidence_witness(ev.get(), i, &eq, &point, &left, &right));
    const auto p = take(point);
    std::cout << "  witness [equation " << eq << "] " << p << ": " << left
              << " != " << right << "\n";
    witnesses.push_back(
        {{"equation", eq}, {"point", p}, {"left", left}, {"right", right}});
  }
  s.write({{"verdict", verdict},
           {"closed_form_verdict", closed != 0},
           {"witnesses", witnesses}});
  return verdict ? 0 : kExitFalse;
}

RelationPtr enumerate(const possind_dist* d, const QueryOptions& o) {
  possind_relation* r = nullptr;
  check(possind_enumerate(d, o.conj.c_str(), relation_kind(o.relation), o.eps,
                          &r));
  return RelationPtr(r);
}

ordered_json members_of(const possind_relation* rel) {
  ordered_json out = ordered_json::array();
  for (size_t i = 0; i < possind_relation_size(rel); ++i) {
    char* t = nullptr;
    check(possind_relation_triplet(rel, i, &t));
    out.push_back(take(t));
  }
  return out;
}

int run_enumerate(Session& s, const QueryOptions& o) {
  auto d = load(o.dist);
  auto rel = enumerate(d.get(), o);
  s.inputs = {{"dist", o.dist}, {"conj", o.conj}, {"relation", o.relation},
              {"eps", o.eps}};
  auto members = members_of(rel.get());
  std::cout << members.size() << " of " << possind_relation_candidates(rel.get())
            << " triplets are in " << o.relation << " under " << o.conj
            << ":\n";
  for (const auto& m : members) std::cout << "  " << m.get<std::string>() << "\n";
  s.write({{"results",
            {{"candidates", possind_relation_candidates(rel.get())},
             {"members", members}}}});
  return 0;
}

int run_axioms(Session& s, const QueryOptions& o) {
  auto d = load(o.dist);
  auto rel = enumerate(d.get(), o);
  possind_axioms* a = nullptr;
  check(possind_check_axioms(rel.get(), level_of(o.level), &a));
  AxiomsPtr ax(a);
  s.inputs = {{"dist", o.dist},         {"conj", o.conj},
              {"relation", o.relation}, {"level", o.level},
              {"eps", o.eps}};

  static const char* names[] = {"symmetry", "decomposition", "weak union",
                                "contraction", "intersection"};
  ordered_json axioms = ordered_json::object();
  for (int i = 0; i < 5; ++i) {
    const int v = possind_axioms_verdict(ax.get(), i);
    if (v < 0) continue;
    axioms[names[i]] = v == 1;
    std::cout << "  " << names[i] << ": " << (v ? "holds" : "FAILS") << "\n";
  }
  ordered_json ces = ordered_json::array();
  for (size_t i = 0; i < possind_axioms_counterexample_count(ax.get()); ++i) {
    char *axiom = nullptr, *prem = nullptr, *concl = nullptr;
    check(possind_axioms_counterexample(ax.get(), i, &axiom, &prem, &concl));
    ordered_json ce = {{"axiom", take(axiom)},
                       {"premises", take(prem)},
                       {"missing", take(concl)}};
    std::cout << "  counterexample (" << ce["axiom"].get<std::string>()
              << "): " << ce["premises"].get<std::string>() << " => missing "
              << ce["missing"].get<std::string>() << "\n";
    ces.push_back(ce);
  }
  const bool holds = possind_axioms_holds(ax.get()) != 0;
  std::cout << o.relation << " under " << o.conj << (holds ? " is" : " is NOT")
            << " a " << o.level << " (" << possind_relation_size(rel.get())
            << " member triplets)\n";
  s.write({{"verdict", holds},
           {"results", {{"axioms", axioms}, {"members", members_of(rel.get())}}},
           {"counterexamples", ces}});
  return holds ? 0 : kExitFalse;
}

int run_fuzz(Session& s, const FuzzOptions& o) {
  possind_fuzz_config cfg;
  possind_fuzz_config_default(&cfg);
  cfg.trials = o.trials;
  cfg.variables = o.vars;
  cfg.frame = o.frame;
  cfg.grid = o.grid;
  cfg.strictly_positive = o.positive ? 1 : 0;
  cfg.conjunctions = o.conj.c_str();
  cfg.seed = o.seed;
  cfg.eps = o.eps;
  cfg.stop_on_first_failure = o.keep_going ? 0 : 1;

  std::vector<DistPtr> owned;
  std::vector<const possind_dist*> injected;
  for (const auto& path : o.inject) {
    owned.push_back(load(path));
    injected.push_back(owned.back().get());
  }
  possind_fuzz* f = nullptr;
  check(possind_fuzz_run(&cfg, injected.data(), injected.size(), &f));
  FuzzPtr fz(f);

  s.inputs = {{"vars", o.vars},   {"frame", o.frame},       {"trials", o.trials},
              {"grid", o.grid},   {"seed", o.seed},         {"positive", o.positive},
              {"conj", o.conj},   {"inject", o.inject},     {"eps", o.eps}};

  ordered_json failures = ordered_json::array();
  std::string first_repro;
  for (size_t i = 0; i < possind_fuzz_failure_count(fz.get()); ++i) {
    char *prop = nullptr, *conj = nullptr, *detail = nullptr, *repro = nullptr;
    size_t trial = 0;
    uint64_t seed = 0;
    check(possind_fuzz_failure(fz.get(), i, &prop, &trial, &seed, &conj,
                               &detail, &repro));
    ordered_json entry = {{"property", take(prop)}, {"trial", trial},
                          {"seed", seed},           {"conjunction", take(conj)},
                          {"detail", take(detail)}};
    auto r = take(repro);
    if (first_repro.empty()) first_repro = r;
    std::cout << "  FAILURE " << entry["property"].get<std::string>()
              << " (trial " << trial << ", " << entry["conjunction"].get<std::string>()
              << "): " << entry["detail"].get<std::string>() << "\n";
    failures.push_back(entry);
  }

  ordered_json mined = ordered_json::array();
  for (size_t i = 0; i < possind_fuzz_mined_count(fz.get()); ++i) {
    size_t trial = 0;
    char *conj = nullptr, *text = nullptr;
    check(possind_fuzz_mined(fz.get(), i, &trial, &conj, &text));
    mined.push_back(
        {{"trial", trial}, {"conjunction", take(conj)}, {"counterexample", take(text)}});
  }

  const size_t mined_total = possind_fuzz_mined_total(fz.get());
  std::cout << possind_fuzz_trials_run(fz.get()) << " trial(s), "
            << possind_fuzz_relations_checked(fz.get()) << " relation(s), "
            << possind_fuzz_triplets_checked(fz.get()) << " triplet test(s); "
            << failures.size() << " failure(s)"
            << (possind_fuzz_aborted(fz.get()) ? " (stopped at first)" : "")
            << "; " << mined_total
            << " expected no-interactivity intersection counterexample(s)\n";
  for (const auto& m : mined) {
    std::cout << "  mined (trial " << m["trial"].get<size_t>() << ", "
              << m["conjunction"].get<std::string>()
              << "): " << m["counterexample"].get<std::string>() << "\n";
  }

  if (!first_repro.empty() && !o.repro.empty()) {
    std::ofstream out(o.repro, std::ios::binary);
    if (!out) throw InputError("cannot write '" + o.repro + "'");
    out << first_repro << "\n";
    std::cout << "reproducer written to " << o.repro << "\n";
  }

  s.write({{"verdict", failures.empty()},
           {"results",
            {{"trials_run", possind_fuzz_trials_run(fz.get())},
             {"relations_checked", possind_fuzz_relations_checked(fz.get())},
             {"triplets_checked", possind_fuzz_triplets_checked(fz.get())},
             {"aborted", possind_fuzz_aborted(fz.get()) != 0},
             {"failures", failures},
             {"mined_total", mined_total}}},
           {"counterexamples", mined}});
  return failures.empty() ? 0 : kExitFalse;
}

int run_examples(Session& s) {
  possind_checks* c = nullptr;
  check(possind_worked_examples(&c));
  ChecksPtr checks(c);
  ordered_json results = ordered_json::array();
  bool all = true;
  for (size_t i = 0; i < possind_checks_count(checks.get()); ++i) {
    char *name = nullptr, *detail = nullptr;
    int passed = 0;
    check(possind_checks_get(checks.get(), i, &name, &passed, &detail));
    ordered_json r = {{"name", take(name)}, {"passed", passed != 0},
                      {"detail", take(detail)}};
    std::cout << (passed ? "PASS  " : "FAIL  ") << r["name"].get<std::string>();
    if (!r["detail"].get<std::string>().empty()) {
      std::cout << "  (" << r["detail"].get<std::string>() << ")";
    }
    std::cout << "\n";
    all = all && passed;
    results.push_back(r);
  }
  std::cout << (all ? "all worked examples reproduce\n"
                    : "some worked examples do NOT reproduce\n");
  s.write({{"verdict", all}, {"results", results}});
  return all ? 0 : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"possind: possibilistic conditional independence toolkit"};
  app.require_subcommand(1, 1);

  Session session;
  QueryOptions q;
  FuzzOptions fz;

  auto dist_opt = [&](CLI::App* sub) {
    sub->add_option("--dist", q.dist, "Distribution JSON file")->required();
  };
  auto conj_opt = [&](CLI::App* sub) {
    sub->add_option("--conj", q.conj,
                    "min | luka | luka:pow=<p> | prod | prod:pow=<p>")
        ->capture_default_str();
  };
  auto relation_opt = [&](CLI::App* sub) {
    sub->add_option("--relation", q.relation, "independence | noninteractivity")
        ->capture_default_str();
  };
  auto eps_opt = [&](CLI::App* sub) {
    sub->add_option("--eps", q.eps, "Equality tolerance")->capture_default_str();
  };

  auto* marg = app.add_subcommand("marginalize", "Max-marginal on a variable subset");
  dist_opt(marg);
  marg->add_option("--keep", q.keep, "Comma-separated variables to keep")->required();

  auto* cond = app.add_subcommand("condition", "Conditional possibility distribution");
  dist_opt(cond);
  cond->add_option("--target", q.target, "Conditioned variables")->required();
  cond->add_option("--given", q.given, "Conditioning variables (default none)");
  conj_opt(cond);

  auto* indep = app.add_subcommand("independent", "Membership of one triplet");
  dist_opt(indep);
  indep->add_option("--a", q.a, "First set A")->required();
  indep->add_option("--b", q.b, "Second set B")->required();
  indep->add_option("--c", q.c, "Conditioning set C (default empty)");
  conj_opt(indep);
  relation_opt(indep);
  eps_opt(indep);

  auto* enumr = app.add_subcommand("enumerate", "All member triplets of a relation");
  dist_opt(enumr);
  conj_opt(enumr);
  relation_opt(enumr);
  eps_opt(enumr);

  auto* axioms = app.add_subcommand("axioms", "Check graphoid axioms of a relation");
  dist_opt(axioms);
  conj_opt(axioms);
  relation_opt(axioms);
  eps_opt(axioms);
  axioms->add_option("--level", q.level, "semigraphoid | graphoid")->capture_default_str();

  auto* fuzz = app.add_subcommand("fuzz", "Randomised property checks");
  fuzz->add_option("--vars", fz.vars, "Number of variables")->capture_default_str();
  fuzz->add_option("--frame", fz.frame, "Frame size of each variable")->capture_default_str();
  fuzz->add_option("--trials", fz.trials, "Random distributions")->capture_default_str();
  fuzz->add_option("--grid", fz.grid, "Values are multiples of 1/grid")->capture_default_str();
  fuzz->add_option("--seed", fz.seed, "Base seed")->required();
  fuzz->add_flag("--positive", fz.positive, "Strictly positive distributions");
  fuzz->add_option("--conj", fz.conj, "Comma-separated conjunctions")->capture_default_str();
  fuzz->add_option("--eps", fz.eps, "Equality tolerance")->capture_default_str();
  fuzz->add_option("--inject", fz.inject, "Extra distribution files checked first");
  fuzz->add_option("--repro", fz.repro, "Reproducer path for the first failure")
      ->capture_default_str();
  fuzz->add_flag("--keep-going", fz.keep_going, "Collect every failure");

  auto* examples = app.add_subcommand("paper-examples", "Replay the worked-example regressions");

  for (auto* sub : {marg, cond, indep, enumr, axioms, fuzz, examples}) {
    session.attach(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  auto* chosen = app.get_subcommands().front();
  session.verb = chosen->get_name();
  session.start = std::chrono::steady_clock::now();
  try {
    if (chosen == marg) return run_marginalize(session, q);
    if (chosen == cond) return run_condition(session, q);
    if (chosen == indep) return run_independent(session, q);
    if (chosen == enumr) return run_enumerate(session, q);
    if (chosen == axioms) return run_axioms(session, q);
    if (chosen == fuzz) return run_fuzz(session, fz);
    return run_examples(session);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
