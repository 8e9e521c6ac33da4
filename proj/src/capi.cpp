#include "possind/possind.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "possind/error.hpp"
#include "possind/graphoid.hpp"
#include "possind/independence.hpp"
#include "possind/io.hpp"
#include "possind/worked_examples.hpp"

using namespace possind;

struct possind_dist {
  Distribution value;
};

struct possind_evidence {
  Space space;
  MembershipEvidence value;
};

struct possind_relation {
  IndependenceRelation value;
  std::vector<Triplet> sorted;
  std::size_t candidates = 0;
};

struct possind_axioms {
  Space space;
  AxiomReport value;
};

struct possind_fuzz {
  FuzzReport value;
};

struct possind_checks {
  std::vector<RegressionCheck> value;
};

namespace {

thread_local std::string last_error;

possind_status fail(possind_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

/// Runs `body`, translating exceptions into status codes.
template <typename F>
possind_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return POSSIND_OK;
  } catch (const Error& e) {
    return fail(static_cast<possind_status>(e.code()), e.what());
  } catch (const std::invalid_argument& e) {
    return fail(POSSIND_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(POSSIND_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(POSSIND_ERR_INTERNAL, e.what());
  }
}

void emit(char** out, const std::string& s) {
  if (!out) return;
  auto* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (!buf) throw std::bad_alloc();
  std::memcpy(buf, s.c_str(), s.size() + 1);
  *out = buf;
}

std::string_view text(const char* s) { return s ? std::string_view(s) : ""; }

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

RelationKind kind_of(possind_relation_kind kind) {
  return kind == POSSIND_NONINTERACTIVITY ? RelationKind::NonInteractivity
                                          : RelationKind::Independence;
}

Triplet triplet_of(const Distribution& d, const char* a, const char* b,
                   const char* c) {
  return parse_triplet(d.space(), text(a), text(b), text(c));
}

std::vector<Conjunction> parse_conjunction_list(std::string_view csv) {
  std::vector<Conjunction> out;
  while (!csv.empty()) {
    auto comma = csv.find(',');
    out.push_back(Conjunction::parse(csv.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    csv.remove_prefix(comma + 1);
  }
  if (out.empty()) throw Error(ErrorCode::Parse, "no conjunctions given");
  return out;
}

}  // namespace

// Null handles and out-pointers are reported as invalid arguments rather
// than dereferenced.
#define POSSIND_REQUIRE(cond)                                           \
  do {                                                                  \
    if (!(cond)) {                                                      \
      return fail(POSSIND_ERR_INVALID_ARGUMENT, "invalid argument: " #cond); \
    }                                                                   \
  } while (0)

extern "C" {

const char* possind_version(void) { return "1.0.0"; }

const char* possind_status_name(possind_status status) {
  switch (status) {
    case POSSIND_OK: return "OK";
    case POSSIND_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case POSSIND_ERR_INTERNAL: return "Internal";
    default:
      if (status >= 1 && status <= 13) {
        return to_string(static_cast<ErrorCode>(status));
      }
      return "Unknown";
  }
}

const char* possind_last_error(void) { return last_error.c_str(); }

void possind_string_free(char* s) { std::free(s); }

possind_status possind_dist_load(const char* path, possind_dist** out) {
  POSSIND_REQUIRE(path && out);
  return guarded([&] { *out = new possind_dist{load_distribution(path)}; });
}

possind_status possind_dist_parse(const char* json, possind_dist** out) {
  POSSIND_REQUIRE(json && out);
  return guarded([&] { *out = new possind_dist{distribution_from_json(json)}; });
}

possind_status possind_dist_to_json(const possind_dist* dist, char** out) {
  POSSIND_REQUIRE(dist && out);
  return guarded([&] { emit(out, distribution_to_json(dist->value)); });
}

possind_status possind_dist_random(size_t variables, size_t frame, int grid,
                                   int strictly_positive, uint64_t seed,
                                   possind_dist** out) {
  POSSIND_REQUIRE(out);
  return guarded([&] {
    *out = new possind_dist{random_distribution(
        make_uniform_space(variables, frame), grid, strictly_positive != 0,
        seed)};
  });
}

void possind_dist_free(possind_dist* dist) { delete dist; }

size_t possind_dist_size(const possind_dist* dist) {
  return dist ? dist->value.size() : 0;
}

int possind_dist_normalised(const possind_dist* dist) {
  return dist && dist->value.normalised() ? 1 : 0;
}

possind_status possind_dist_scope(const possind_dist* dist, char** names) {
  POSSIND_REQUIRE(dist && names);
  return guarded([&] {
    std::string out;
    for (auto i : dist->value.scope().indices()) {
      if (!out.empty()) out += ',';
      out += dist->value.space().variable(i).name;
    }
    emit(names, out);
  });
}

possind_status possind_dist_entry(const possind_dist* dist, size_t index,
                                  char** assignment, double* value) {
  POSSIND_REQUIRE(dist && index < dist->value.size());
  return guarded([&] {
    const auto& d = dist->value;
    emit(assignment, d.space().format(d.space().decode(d.scope(), index)));
    if (value) *value = d[index];
  });
}

possind_status possind_dist_marginalize(const possind_dist* dist,
                                        const char* keep, possind_dist** out) {
  POSSIND_REQUIRE(dist && out);
  return guarded([&] {
    const auto& d = dist->value;
    *out = new possind_dist{marginalize(d, d.space().parse_subset(text(keep)))};
  });
}

possind_status possind_dist_condition(const possind_dist* dist,
                                      const char* target, const char* given,
                                      const char* conjunction,
                                      possind_dist** out) {
  POSSIND_REQUIRE(dist && conjunction && out);
  return guarded([&] {
    const auto& d = dist->value;
    *out = new possind_dist{condition(d, d.space().parse_subset(text(target)),
                                      d.space().parse_subset(text(given)),
                                      Conjunction::parse(conjunction))};
  });
}

possind_status possind_conjoin(const char* conjunction, double a, double b,
                               double* out) {
  POSSIND_REQUIRE(conjunction && out);
  return guarded([&] { *out = Conjunction::parse(conjunction).conjoin(a, b); });
}

possind_status possind_residuum(const char* conjunction, double a, double b,
                                double* out) {
  POSSIND_REQUIRE(conjunction && out);
  return guarded([&] { *out = Conjunction::parse(conjunction).residuum(a, b); });
}

possind_status possind_membership(const possind_dist* dist, const char* a,
                                  const char* b, const char* c,
                                  const char* conjunction,
                                  possind_relation_kind kind, double eps,
                                  possind_evidence** out) {
  POSSIND_REQUIRE(dist && conjunction && out);
  return guarded([&] {
    const auto& d = dist->value;
    *out = new possind_evidence{
        d.space(), test_membership(d, triplet_of(d, a, b, c),
                                   Conjunction::parse(conjunction),
                                   kind_of(kind), eps)};
  });
}

int possind_evidence_verdict(const possind_evidence* ev) {
  return ev && ev->value.verdict ? 1 : 0;
}

size_t possind_evidence_witness_count(const possind_evidence* ev) {
  return ev ? ev->value.witnesses.size() : 0;
}

possind_status possind_evidence_witness(const possind_evidence* ev,
                                        size_t index, int* equation,
                                        char** point, double* left,
                                        double* right) {
  POSSIND_REQUIRE(ev && index < ev->value.witnesses.size());
  return guarded([&] {
    const auto& w = ev->value.witnesses[index];
    if (equation) *equation = w.equation;
    emit(point, ev->space.format(w.point));
    if (left) *left = w.left;
    if (right) *right = w.right;
  });
}

void possind_evidence_free(possind_evidence* ev) { delete ev; }

possind_status possind_characterize(const possind_dist* dist, const char* a,
                                    const char* b, const char* c,
                                    const char* conjunction,
                                    possind_relation_kind kind, double eps,
                                    int* verdict) {
  POSSIND_REQUIRE(dist && conjunction && verdict);
  return guarded([&] {
    const auto& d = dist->value;
    *verdict = characterize(d, triplet_of(d, a, b, c),
                            Conjunction::parse(conjunction), kind_of(kind),
                            eps)
                   ? 1
                   : 0;
  });
}

possind_status possind_enumerate(const possind_dist* dist,
                                 const char* conjunction,
                                 possind_relation_kind kind, double eps,
                                 possind_relation** out) {
  POSSIND_REQUIRE(dist && conjunction && out);
  return guarded([&] {
    const auto& d = dist->value;
    auto rel = enumerate_relation(d, Conjunction::parse(conjunction),
                                  kind_of(kind), eps);
    std::vector<Triplet> sorted(rel.begin(), rel.end());
    const auto candidates = triplet_count(d.scope().size());
    *out = new possind_relation{std::move(rel), std::move(sorted), candidates};
  });
}

size_t possind_relation_size(const possind_relation* rel) {
  return rel ? rel->sorted.size() : 0;
}

size_t possind_relation_candidates(const possind_relation* rel) {
  return rel ? rel->candidates : 0;
}

possind_status possind_relation_triplet(const possind_relation* rel,
                                        size_t index, char** text_out) {
  POSSIND_REQUIRE(rel && text_out && index < rel->sorted.size());
  return guarded([&] {
    emit(text_out, format(rel->value.space(), rel->sorted[index]));
  });
}

void possind_relation_free(possind_relation* rel) { delete rel; }

possind_status possind_check_axioms(const possind_relation* rel,
                                    possind_level level, possind_axioms** out) {
  POSSIND_REQUIRE(rel && out);
  return guarded([&] {
    *out = new possind_axioms{
        rel->value.space(),
        check_level(rel->value, level == POSSIND_GRAPHOID
                                    ? GraphoidLevel::Graphoid
                                    : GraphoidLevel::Semigraphoid)};
  });
}

int possind_axioms_holds(const possind_axioms* ax) {
  return ax && ax->value.holds() ? 1 : 0;
}

int possind_axioms_verdict(const possind_axioms* ax, int axiom) {
  if (!ax || axiom < 0 || axiom >= 5) return -1;
  const auto v = ax->value.verdicts[static_cast<std::size_t>(axiom)];
  return v ? (*v ? 1 : 0) : -1;
}

size_t possind_axioms_counterexample_count(const possind_axioms* ax) {
  return ax ? ax->value.counterexamples.size() : 0;
}

possind_status possind_axioms_counterexample(const possind_axioms* ax,
                                             size_t index, char** axiom,
                                             char** premises,
                                             char** conclusion) {
  POSSIND_REQUIRE(ax && index < ax->value.counterexamples.size());
  return guarded([&] {
    const auto& ce = ax->value.counterexamples[index];
    emit(axiom, to_string(ce.axiom));
    std::string joined;
    for (const auto& p : ce.premises) {
      if (!joined.empty()) joined += " & ";
      joined += format(ax->space, p);
    }
    emit(premises, joined);
    emit(conclusion, format(ax->space, ce.conclusion));
  });
}

void possind_axioms_free(possind_axioms* ax) { delete ax; }

void possind_fuzz_config_default(possind_fuzz_config* config) {
  if (!config) return;
  const FuzzConfig defaults;
  config->trials = defaults.trials;
  config->variables = defaults.variables;
  config->frame = defaults.frame;
  config->grid = defaults.grid;
  config->strictly_positive = defaults.strictly_positive ? 1 : 0;
  config->conjunctions = "min,luka,prod";
  config->seed = defaults.seed;
  config->eps = defaults.eps;
  config->stop_on_first_failure = defaults.stop_on_first_failure ? 1 : 0;
}

possind_status possind_fuzz_run(const possind_fuzz_config* config,
                                const possind_dist* const* injected,
                                size_t injected_count, possind_fuzz** out) {
  POSSIND_REQUIRE(config && out && (injected || injected_count == 0));
  return guarded([&] {
    FuzzConfig cfg;
    cfg.trials = config->trials;
    cfg.variables = config->variables;
    cfg.frame = config->frame;
    cfg.grid = config->grid;
    cfg.strictly_positive = config->strictly_positive != 0;
    if (config->conjunctions) {
      cfg.conjunctions = parse_conjunction_list(config->conjunctions);
    }
    cfg.seed = config->seed;
    cfg.eps = config->eps;
    cfg.stop_on_first_failure = config->stop_on_first_failure != 0;
    for (size_t i = 0; i < injected_count; ++i) {
      require(injected[i] != nullptr, "null injected distribution");
      cfg.injected.push_back(injected[i]->value);
    }
    *out = new possind_fuzz{fuzz_properties(cfg)};
  });
}

size_t possind_fuzz_trials_run(const possind_fuzz* fz) {
  return fz ? fz->value.trials_run : 0;
}

size_t possind_fuzz_relations_checked(const possind_fuzz* fz) {
  return fz ? fz->value.relations_checked : 0;
}

size_t possind_fuzz_triplets_checked(const possind_fuzz* fz) {
  return fz ? fz->value.triplets_checked : 0;
}

int possind_fuzz_aborted(const possind_fuzz* fz) {
  return fz && fz->value.aborted ? 1 : 0;
}

size_t possind_fuzz_failure_count(const possind_fuzz* fz) {
  return fz ? fz->value.failures.size() : 0;
}

possind_status possind_fuzz_failure(const possind_fuzz* fz, size_t index,
                                    char** property, size_t* trial,
                                    uint64_t* seed, char** conjunction,
                                    char** detail, char** reproducer) {
  POSSIND_REQUIRE(fz && index < fz->value.failures.size());
  return guarded([&] {
    const auto& f = fz->value.failures[index];
    emit(property, f.property);
    if (trial) *trial = f.trial;
    if (seed) *seed = f.seed;
    emit(conjunction, f.conjunction.to_string());
    emit(detail, f.detail);
    if (reproducer) {
      emit(reproducer, reproducer_to_json(f.dist, f.conjunction, f.seed,
                                          f.property, f.detail));
    }
  });
}

size_t possind_fuzz_mined_total(const possind_fuzz* fz) {
  return fz ? fz->value.mined_total : 0;
}

size_t possind_fuzz_mined_count(const possind_fuzz* fz) {
  return fz ? fz->value.mined.size() : 0;
}

possind_status possind_fuzz_mined(const possind_fuzz* fz, size_t index,
                                  size_t* trial, char** conjunction,
                                  char** text_out) {
  POSSIND_REQUIRE(fz && index < fz->value.mined.size());
  return guarded([&] {
    const auto& m = fz->value.mined[index];
    if (trial) *trial = m.trial;
    emit(conjunction, m.conjunction.to_string());
    std::string s = std::string(to_string(m.example.axiom)) + ": ";
    for (std::size_t i = 0; i < m.example.premises.size(); ++i) {
      if (i) s += " & ";
      s += format(m.space, m.example.premises[i]);
    }
    s += " => missing " + format(m.space, m.example.conclusion);
    emit(text_out, s);
  });
}

void possind_fuzz_free(possind_fuzz* fz) { delete fz; }

possind_status possind_worked_examples(possind_checks** out) {
  POSSIND_REQUIRE(out);
  return guarded([&] { *out = new possind_checks{run_worked_examples()}; });
}

possind_status possind_worked_example_dist(int which, possind_dist** out) {
  POSSIND_REQUIRE(out && (which == 0 || which == 1));
  return guarded([&] {
    *out = new possind_dist{which == 0 ? one_sided_min_distribution()
                                       : intersection_failure_distribution()};
  });
}

size_t possind_checks_count(const possind_checks* checks) {
  return checks ? checks->value.size() : 0;
}

possind_status possind_checks_get(const possind_checks* checks, size_t index,
                                  char** name, int* passed, char** detail) {
  POSSIND_REQUIRE(checks && index < checks->value.size());
  return guarded([&] {
    const auto& c = checks->value[index];
    emit(name, c.name);
    if (passed) *passed = c.passed ? 1 : 0;
    emit(detail, c.detail);
  });
}

void possind_checks_free(possind_checks* checks) { delete checks; }

}  // extern "C"
