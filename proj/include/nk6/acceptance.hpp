#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nk6/report.hpp"

namespace nk6 {

struct AcceptanceOptions {
  std::uint64_t seed = 20240611;
  int sweep_starts = 1024;
  int threads = 0;
  int lorentz_samples = 1000;
  int naturality_samples = 200;
  int char_nk_samples = 100;
};

struct CriterionResult {
  int number = 0;
  std::string title;
  Report report;
  double seconds = 0;
  bool passed() const { return report.passed(); }
};

Report criterion_normal_forms();
Report criterion_regeneration();
Report criterion_unique_solution();
Report criterion_summary_structure();
Report criterion_halfflat_example(const AcceptanceOptions& opt);
Report criterion_so3so3();
Report criterion_sweep(const AcceptanceOptions& opt);
Report criterion_lorentz(const AcceptanceOptions& opt);
Report criterion_properties(const AcceptanceOptions& opt);

// All nine, in order, timed.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt);

// "PASS 3 unique-solution (0.01 s)" lines followed by a summary line.
std::string acceptance_summary(const std::vector<CriterionResult>& results);

}  // namespace nk6
