#include "possind/graphoid.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "possind/error.hpp"
#include "possind/independence.hpp"

namespace possind {

namespace {

void add(AxiomReport& report, Axiom axiom, std::vector<Triplet> premises,
         const Triplet& conclusion) {
  report.counterexamples.push_back({axiom, std::move(premises), conclusion});
}

/// Nonempty proper-or-full submasks of `set`, in decreasing bit order.
template <typename F>
void for_each_nonempty_subset(VarSet set, F&& f) {
  const auto bits = set.bits();
  for (VarSet::Bits sub = bits; sub != 0; sub = (sub - 1) & bits) {
    f(VarSet(sub));
  }
}

void check_symmetry(const IndependenceRelation& rel, AxiomReport& out) {
  for (const auto& t : rel) {
    if (!rel.contains(t.swapped())) add(out, Axiom::Symmetry, {t}, t.swapped());
  }
}

// (A, B∪C, D) ⇒ (A, B, D)
void check_decomposition(const IndependenceRelation& rel, AxiomReport& out) {
  for (const auto& t : rel) {
    for_each_nonempty_subset(t.b, [&](VarSet b) {
      const Triplet concl{t.a, b, t.c};
      if (!rel.contains(concl)) add(out, Axiom::Decomposition, {t}, concl);
    });
  }
}

// (A, B∪C, D) ⇒ (A, B, C∪D)
void check_weak_union(const IndependenceRelation& rel, AxiomReport& out) {
  for (const auto& t : rel) {
    for_each_nonempty_subset(t.b, [&](VarSet b) {
      const auto moved = t.b - b;
      if (moved.empty()) return;
      const Triplet concl{t.a, b, moved | t.c};
      if (!rel.contains(concl)) add(out, Axiom::WeakUnion, {t}, concl);
    });
  }
}

std::map<VarSet, std::vector<Triplet>> group_by_first(
    const IndependenceRelation& rel) {
  std::map<VarSet, std::vector<Triplet>> groups;
  for (const auto& t : rel) groups[t.a].push_back(t);
  return groups;
}

// (A, B, D) and (A, C, B∪D) ⇒ (A, B∪C, D)
void check_contraction(const IndependenceRelation& rel, AxiomReport& out) {
  for (const auto& [a, members] : group_by_first(rel)) {
    for (const auto& p1 : members) {
      for (const auto& p2 : members) {
        if (p2.c != (p1.b | p1.c) || !p1.b.disjoint(p1.c)) continue;
        const Triplet concl{a, p1.b | p2.b, p1.c};
        if (!rel.contains(concl)) add(out, Axiom::Contraction, {p1, p2}, concl);
      }
    }
  }
}

// (A, B, C∪D) and (A, C, B∪D) ⇒ (A, B∪C, D)
void check_intersection(const IndependenceRelation& rel, AxiomReport& out) {
  for (const auto& [a, members] : group_by_first(rel)) {
    for (const auto& p1 : members) {
      for (const auto& p2 : members) {
        // Each unordered premise pair once.
        if (!(p1.b < p2.b)) continue;
        if (!p2.b.subset_of(p1.c) || !p1.b.subset_of(p2.c)) continue;
        const auto d = p1.c - p2.b;
        if (d != p2.c - p1.b) continue;
        const Triplet concl{a, p1.b | p2.b, d};
        if (!rel.contains(concl)) {
          add(out, Axiom::Intersection, {p1, p2}, concl);
        }
      }
    }
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

bool strictly_positive(const Distribution& dist) {
  const auto t = dist.table();
  return std::all_of(t.begin(), t.end(), [](double v) { return v > 0.0; });
}

std::string describe(const Space& space, const AxiomCounterexample& ce) {
  std::string out = to_string(ce.axiom);
  out += ": ";
  for (std::size_t i = 0; i < ce.premises.size(); ++i) {
    if (i) out += " & ";
    out += format(space, ce.premises[i]);
  }
  return out + " => missing " + format(space, ce.conclusion);
}

}  // namespace

const char* to_string(Axiom axiom) noexcept {
  switch (axiom) {
    case Axiom::Symmetry: return "symmetry";
    case Axiom::Decomposition: return "decomposition";
    case Axiom::WeakUnion: return "weak union";
    case Axiom::Contraction: return "contraction";
    case Axiom::Intersection: return "intersection";
  }
  return "?";
}

GraphoidLevel parse_graphoid_level(std::string_view text) {
  if (text == "semigraphoid") return GraphoidLevel::Semigraphoid;
  if (text == "graphoid") return GraphoidLevel::Graphoid;
  throw Error(ErrorCode::Parse, "unknown level '" + std::string(text) +
                                    "' (expected semigraphoid or graphoid)");
}

bool AxiomReport::holds() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const auto& v) { return !v || *v; });
}

void AxiomReport::merge(AxiomReport&& other) {
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    if (other.verdicts[i]) verdicts[i] = other.verdicts[i];
  }
  counterexamples.insert(counterexamples.end(),
                         std::make_move_iterator(other.counterexamples.begin()),
                         std::make_move_iterator(other.counterexamples.end()));
}

AxiomReport check_axiom(const IndependenceRelation& rel, Axiom axiom) {
  AxiomReport out;
  switch (axiom) {
    case Axiom::Symmetry: check_symmetry(rel, out); break;
    case Axiom::Decomposition: check_decomposition(rel, out); break;
    case Axiom::WeakUnion: check_weak_union(rel, out); break;
    case Axiom::Contraction: check_contraction(rel, out); break;
    case Axiom::Intersection: check_intersection(rel, out); break;
  }
  out.verdicts[static_cast<std::size_t>(axiom)] = out.counterexamples.empty();
  return out;
}

AxiomReport is_semigraphoid(const IndependenceRelation& rel) {
  AxiomReport out;
  for (auto axiom : kAllAxioms) {
    if (axiom != Axiom::Intersection) out.merge(check_axiom(rel, axiom));
  }
  return out;
}

AxiomReport is_graphoid(const IndependenceRelation& rel) {
  AxiomReport out = is_semigraphoid(rel);
  out.merge(check_axiom(rel, Axiom::Intersection));
  return out;
}

AxiomReport check_level(const IndependenceRelation& rel, GraphoidLevel level) {
  return level == GraphoidLevel::Graphoid ? is_graphoid(rel)
                                          : is_semigraphoid(rel);
}

Distribution random_distribution(const Space& space, int grid,
                                 bool strictly_positive, std::uint64_t seed) {
  if (grid < 1) throw Error(ErrorCode::OutOfRange, "grid must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> level(strictly_positive ? 1 : 0, grid);
  std::vector<double> table(space.joint_count());
  for (auto& v : table) v = static_cast<double>(level(rng)) / grid;
  table[std::uniform_int_distribution<std::size_t>(0, table.size() - 1)(rng)] =
      1.0;
  return Distribution(space, space.all(), std::move(table));
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) {
  return splitmix64(seed ^ splitmix64(trial));
}

Space make_uniform_space(std::size_t variables, std::size_t frame) {
  std::vector<std::string> values;
  for (std::size_t k = 0; k < frame; ++k) values.push_back(std::to_string(k));
  std::vector<Variable> vars;
  for (std::size_t i = 1; i <= variables; ++i) {
    vars.push_back({"X" + std::to_string(i), values});
  }
  return Space(std::move(vars));
}

FuzzReport fuzz_properties(const FuzzConfig& config) {
  if (config.variables > 12 ||
      triplet_count(config.variables) > kMaxTriplets) {
    throw Error(ErrorCode::TooLarge, "fuzz space exceeds the triplet guard");
  }
  const auto space = make_uniform_space(config.variables, config.frame);
  const double eps = config.eps;
  FuzzReport report;

  const std::size_t total = config.injected.size() + config.trials;
  for (std::size_t trial = 0; trial < total; ++trial) {
    const bool injected = trial < config.injected.size();
    const std::uint64_t seed =
        injected ? 0 : trial_seed(config.seed, trial - config.injected.size());
    const Distribution dist =
        injected ? config.injected[trial]
                 : random_distribution(space, config.grid,
                                       config.strictly_positive, seed);
    const auto triplets = enumerate_triplets(dist.space(), dist.scope());
    const bool positive = strictly_positive(dist);

    for (const auto& c : config.conjunctions) {
      const bool luka = c.kind() == Conjunction::Kind::LukasiewiczLike;
      const bool product = c.kind() == Conjunction::Kind::ProductLike;

      // First offending triplet and count per property.
      std::map<std::string, std::pair<Triplet, std::size_t>> mismatches;
      auto flag = [&](const char* property, const Triplet& t) {
        auto [it, fresh] = mismatches.try_emplace(property, t, 0);
        ++it->second.second;
      };

      IndependenceRelation rel_i(dist.space()), rel_ni(dist.space());
      for (const auto& t : triplets) {
        const bool i = in_independence(dist, t, c, eps).verdict;
        const bool ni = in_noninteractivity(dist, t, c, eps).verdict;
        if (i) rel_i.insert(t);
        if (ni) rel_ni.insert(t);
        if (i != characterize(dist, t, c, RelationKind::Independence, eps)) {
          flag("independence-closed-form", t);
        }
        if (luka) {
          if (i != ni) flag("lukasiewicz-independence-equals-noninteractivity", t);
        } else {
          if (ni != characterize(dist, t, c, RelationKind::NonInteractivity,
                                 eps)) {
            flag("noninteractivity-closed-form", t);
          }
          if (i && !ni) flag("independence-within-noninteractivity", t);
          if (product && positive && i != ni) {
            flag("positive-product-independence-equals-noninteractivity", t);
          }
        }
        ++report.triplets_checked;
      }

      std::vector<std::pair<std::string, std::string>> violations;
      for (const auto& [property, first] : mismatches) {
        violations.emplace_back(
            property, std::to_string(first.second) + " triplet(s), first " +
                          format(dist.space(), first.first));
      }

      auto graphoid = is_graphoid(rel_i);
      if (!graphoid.holds()) {
        violations.emplace_back(
            "independence-graphoid",
            describe(dist.space(), graphoid.counterexamples.front()));
      }
      ++report.relations_checked;
      if (!luka) {
        auto semi = is_semigraphoid(rel_ni);
        if (!semi.holds()) {
          violations.emplace_back(
              "noninteractivity-semigraphoid",
              describe(dist.space(), semi.counterexamples.front()));
        }
        auto inter = check_axiom(rel_ni, Axiom::Intersection);
        for (auto& ce : inter.counterexamples) {
          if (report.mined.size() < config.keep_mined) {
            report.mined.push_back({trial, c, dist.space(), std::move(ce)});
          }
          ++report.mined_total;
        }
        ++report.relations_checked;
      }

      for (auto& [property, detail] : violations) {
        report.failures.push_back(
            {std::move(property), trial, seed, c, dist, std::move(detail)});
        if (config.stop_on_first_failure) {
          report.trials_run = trial + 1;
          report.aborted = true;
          return report;
        }
      }
    }
    report.trials_run = trial + 1;
  }
  return report;
}

}  // namespace possind
