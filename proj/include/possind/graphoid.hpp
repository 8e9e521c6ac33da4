#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "possind/conjunction.hpp"
#include "possind/distribution.hpp"
#include "possind/relation.hpp"

namespace possind {

enum class Axiom { Symmetry, Decomposition, WeakUnion, Contraction, Intersection };

inline constexpr std::array<Axiom, 5> kAllAxioms = {
    Axiom::Symmetry, Axiom::Decomposition, Axiom::WeakUnion,
    Axiom::Contraction, Axiom::Intersection};

const char* to_string(Axiom axiom) noexcept;

enum class GraphoidLevel { Semigraphoid, Graphoid };

GraphoidLevel parse_graphoid_level(std::string_view text);

/// One axiom instance whose premises are in the relation but whose
/// conclusion is not.
struct AxiomCounterexample {
  Axiom axiom;
  std::vector<Triplet> premises;
  Triplet conclusion;
};

struct AxiomReport {
  /// Unset for axioms that were not checked.
  std::array<std::optional<bool>, 5> verdicts;
  std::vector<AxiomCounterexample> counterexamples;

  std::optional<bool> verdict(Axiom axiom) const {
    return verdicts[static_cast<std::size_t>(axiom)];
  }
  /// True when every checked axiom holds.
  bool holds() const;
  void merge(AxiomReport&& other);
};

/// Exhaustively instantiates one axiom over the relation's members.
/// Decomposition and weak union split the middle set of every member in all
/// ways; contraction and intersection join every compatible premise pair.
/// The conditioning set D may be empty throughout.
AxiomReport check_axiom(const IndependenceRelation& rel, Axiom axiom);

AxiomReport is_semigraphoid(const IndependenceRelation& rel);
AxiomReport is_graphoid(const IndependenceRelation& rel);
AxiomReport check_level(const IndependenceRelation& rel, GraphoidLevel level);

/// Grid-valued normalised distribution over the whole space. Values are
/// drawn uniformly from {k/grid} (k ≥ 1 when strictly positive) and one
/// entry is forced to 1. Deterministic for a given seed.
Distribution random_distribution(const Space& space, int grid,
                                 bool strictly_positive, std::uint64_t seed);

/// Seed of the trial-th random distribution in a fuzz run.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial);

struct FuzzConfig {
  std::size_t trials = 1000;
  std::size_t variables = 3;
  std::size_t frame = 2;
  int grid = 10;
  bool strictly_positive = false;
  std::vector<Conjunction> conjunctions = {
      Conjunction::min(), Conjunction::lukasiewicz(), Conjunction::product()};
  std::uint64_t seed = 1994;
  double eps = 1e-9;
  bool stop_on_first_failure = false;
  /// Distributions checked before the random trials, e.g. known
  /// counterexamples.
  std::vector<Distribution> injected;
  /// Mined counterexamples kept verbatim; the rest are only counted.
  std::size_t keep_mined = 16;
};

/// A violated property: always an implementation or theory defect.
struct FuzzFailure {
  std::string property;
  std::size_t trial = 0;
  /// Regenerates the distribution via random_distribution; 0 for injected.
  std::uint64_t seed = 0;
  Conjunction conjunction;
  Distribution dist;
  std::string detail;
};

/// Expected failure of intersection for no-interactivity.
struct MinedCounterexample {
  std::size_t trial = 0;
  Conjunction conjunction;
  Space space;
  AxiomCounterexample example;
};

struct FuzzReport {
  std::size_t trials_run = 0;
  std::size_t relations_checked = 0;
  std::size_t triplets_checked = 0;
  std::vector<FuzzFailure> failures;
  std::vector<MinedCounterexample> mined;
  std::size_t mined_total = 0;
  bool aborted = false;

  bool ok() const { return failures.empty(); }
};

/// Per trial and conjunction: induced I must be a graphoid; NI must be a
/// semigraphoid (min, product-like); I = NI under Lukasiewicz-like
/// conjunctions and under product-like ones on strictly positive inputs;
/// I ⊆ NI; both relations agree with their closed forms.
FuzzReport fuzz_properties(const FuzzConfig& config);

/// Variables X1..Xn, each with frame {"0", ..., "frame-1"}.
Space make_uniform_space(std::size_t variables, std::size_t frame = 2);

}  // namespace possind
