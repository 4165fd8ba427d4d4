#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace schur {

struct AcceptanceOptions {
  std::uint64_t mc_samples = 100'000;
  std::uint64_t mc_seed = 42;
  long long survey_bound = 1'000'000;
  unsigned workers = 0;  // 0 = hardware concurrency
  int only = 0;          // run a single criterion (1..11); 0 = all
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Run the acceptance criteria; one result per criterion, in order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

/// Render one "[PASS]/[FAIL] criterion k: ..." line.
std::string format_criterion(const CriterionResult& r);

}  // namespace schur
