#pragma once

// Randomized invariant suite behind `curvalpha verify`.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curvalpha/alpha.hpp"

namespace curvalpha {

struct VerifyOptions {
  std::uint64_t seed = 1;
  int cases = 200;
  int component_bound = 12;
  /// Divisor of the connection coefficient used by the torsion and metric
  /// checks. Anything but 2 is a negative control; the torsion check fails.
  Scalar connection_divisor{2};
};

struct CheckResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  bool hard = true;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::optional<Scalar> route_ratio;   ///< r-sum / closed form
  std::optional<Scalar> kappa;         ///< normalized r-sum / Arnold cos-cos at beta = 0
  std::optional<Scalar> arnold_ratio;  ///< r-sum / Arnold general sum at beta = 0
  std::optional<Scalar> paper_ratio_min;  ///< r_coeff_paper / r_coeff over nonzero pairs
  std::optional<Scalar> paper_ratio_max;
  int paper_sign_disagreements = 0;
  std::vector<EpsExpansion> eps_reports;

  bool passed() const;
  std::string text() const;
};

/// Throws InvalidArgument ("no cases") for cases < 1.
VerifyReport run_verify(const VerifyOptions& options = {});

}  // namespace curvalpha
