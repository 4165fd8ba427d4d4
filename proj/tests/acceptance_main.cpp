// Acceptance suite: runs every criterion at its stated scale and prints one
// pass/fail line per criterion.  Exit code is the number of failures.
//
//   schur_acceptance [--samples N] [--seed S] [--survey-bound B]
//                    [--workers W] [--only K]

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "schur/acceptance.hpp"

int main(int argc, char** argv) {
  schur::AcceptanceOptions opt;
  for (int i = 1; i < argc; ++i) {
    auto next = [&](const char* flag) -> long long {
      if (i + 1 >= argc) {
        std::fprintf(stderr, "missing value for %s\n", flag);
        std::exit(2);
      }
      return std::atoll(argv[++i]);
    };
    if (!std::strcmp(argv[i], "--samples")) opt.mc_samples = next("--samples");
    else if (!std::strcmp(argv[i], "--seed")) opt.mc_seed = next("--seed");
    else if (!std::strcmp(argv[i], "--survey-bound")) opt.survey_bound = next("--survey-bound");
    else if (!std::strcmp(argv[i], "--workers")) opt.workers = static_cast<unsigned>(next("--workers"));
    else if (!std::strcmp(argv[i], "--only")) opt.only = static_cast<int>(next("--only"));
    else {
      std::fprintf(stderr, "unknown flag %s\n", argv[i]);
      return 2;
    }
  }

  int failures = 0;
  for (const auto& r : schur::run_acceptance(opt)) {
    std::printf("%s\n", schur::format_criterion(r).c_str());
    std::fflush(stdout);
    if (!r.pass) ++failures;
  }
  return failures;
}
