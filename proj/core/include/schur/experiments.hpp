#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schur/fp.hpp"
#include "schur/rng.hpp"
#include "schur/sigma_group.hpp"

namespace schur {

struct ExperimentCaps {
  std::uint64_t group_order = 1'000'000;
  std::uint64_t aut_order = 2187;
  std::uint64_t exhaustive_tuples = 1u << 22;
};

struct ExperimentSpec {
  std::uint32_t p = 3;
  unsigned n = 1;
  unsigned depth = 3;
  bool exhaustive = true;
  std::uint64_t samples = 0;  // monte carlo mode
  std::uint64_t master_seed = 0;
  unsigned workers = 1;
  ExperimentCaps caps;
};

struct ClassRecord {
  std::string label;
  unsigned d = 0;                   // minimal generator count of the class
  std::uint64_t observed = 0;       // tuples / samples landing in this class
  std::uint64_t observed_alt = 0;   // second sampler variant (monte carlo)
  std::optional<unsigned> m;        // relation rank at this truncation level
  std::optional<Int> aut_order;
  std::optional<Rat> expected;      // exact count (exhaustive) or q * samples
  std::optional<Rat> probability;   // predicted per-tuple probability
  double sigma_dev = 0.0;           // |observed - expected| in binomial sigmas
  double alt_sigma_dev = 0.0;       // sampler-agreement deviation
  std::string note;                 // e.g. "prediction unavailable: aut cap"
};

struct FrequencyReport {
  ExperimentSpec spec;
  Int total = 0;  // tuple count (exhaustive) or sample count
  std::vector<ClassRecord> classes;
  std::string truncation_note;
};

/// Uniform draw from G^- via the precomputed odd-element list.
std::uint32_t sample_odd(const SigmaGroup& G, CounterRng& rng);
/// Cross-check sampler: g sigma(g)^{-1} for uniform g; exactly uniform on G^-
/// because the fibers are the left G^+-cosets.
std::uint32_t sample_odd_gsigma(const SigmaGroup& G, CounterRng& rng);

/// Classify quotients F_{n,depth}/N_r over all (or sampled) odd relation
/// tuples r, and attach exact predictions: classes with d = n get per-class
/// counts from the tuple-count formula; classes with d < n get aggregate
/// predictions via the restriction factor composed with a recursive level-d
/// exhaustive run at the same depth.  Deterministic for a fixed master_seed
/// regardless of worker count.
FrequencyReport run_experiment(const ExperimentSpec& spec);

struct CompareResult {
  bool pass = true;
  std::vector<std::string> failures;

  std::string summary() const;
};

/// Exhaustive reports demand exact integer equality per class; Monte Carlo
/// reports demand |observed - expected| <= tol * sqrt(N q (1-q)) per class
/// (inclusive) and sampler agreement within the same tolerance.
CompareResult compare(const FrequencyReport& report, double tolerance_sigma);

}  // namespace schur
