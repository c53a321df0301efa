#pragma once

#include <string>
#include <vector>

#include "rowlab/io.hpp"

namespace rowlab {

struct ClaimResult {
  std::string id;       // C01..C14
  std::string title;
  std::string status;   // PASS | FAIL | SKIP
  std::string details;  // deterministic one-paragraph summary
  bool passed() const { return status == "PASS"; }
  bool failed() const { return status == "FAIL"; }
};

struct ReportOptions {
  int max_sum = 10;                 // bound on a+b for the poset sweeps
  std::uint64_t seed = 20250811;    // pins every randomized sweep
  std::size_t slide_trials = 10000; // sampled slides for the invariance claim
  int mixture_count = 100;          // random convex mixtures per poset
  bool inject_rowmotion_bug = false;  // self-test hook: breaks the square
};

std::vector<ClaimResult> run_claims(const ReportOptions& opt);
// Individual claims, in acceptance order (1-based id).
ClaimResult run_claim(int number, const ReportOptions& opt);

std::string report_markdown(const std::vector<ClaimResult>& results,
                            const ReportOptions& opt);
Json report_json(const std::vector<ClaimResult>& results,
                 const ReportOptions& opt);

}  // namespace rowlab
