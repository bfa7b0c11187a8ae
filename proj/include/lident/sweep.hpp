#ifndef LIDENT_SWEEP_HPP
#define LIDENT_SWEEP_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lident/identities.hpp"

namespace lident {

inline constexpr const char* kToolVersion = "1.0.0";

struct SweepConfig {
  long q_min = 3;
  long q_max = 20;
  int s_max = 5;
  double tol = 1e-7;
  ConventionSet conventions;
  bool parallel = true;
  // Truncation depths for the mixed-parity identity.
  long theorem1_N_s2 = 1000000;
  long theorem1_N = 100000;
  int theorem1_s_cap = 5;
};

struct SweepResult {
  SweepConfig config;
  std::vector<VerificationRecord> records;  // deterministic order
  std::map<std::string, double> max_dev;    // per identity id
  bool all_passed = true;
};

// Every identity over the grid under the configured conventions.  Records
// are ordered by (q, identity, chi_index, s) regardless of threading.
SweepResult run_verify_sweep(const SweepConfig& config);

struct ErratumNote {
  std::string id;
  std::string printed;
  std::string computed;
};

struct SiteVerdict {
  std::string site;
  std::vector<std::string> passing;
  std::string selected;          // empty when not separable
  bool separable = true;
  // max deviation of the selected convention, and the worst deviation of
  // a rejected one with its witness record
  double selected_max_dev = 0.0;
  double rejected_worst_dev = 0.0;
  std::optional<VerificationRecord> rejected_witness;
};

struct AdjudicationReport {
  long q_max = 0;
  int s_max = 0;
  double tol = 0.0;
  std::vector<SiteVerdict> sites;
  std::vector<ErratumNote> derived_errata;

  ConventionSet selected_conventions() const;
};

// Runs both readings of each convention site over the grid and keeps the
// ones consistent with the oracle.  Throws if a site has no consistent
// reading.
AdjudicationReport adjudicate(long q_max, int s_max, double tol,
                              bool parallel = true);

std::vector<ErratumNote> derived_errata();

}  // namespace lident

#endif
