#pragma once

#include <string>
#include <vector>

#include "rrm/bigreal.hpp"

namespace rrm {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // one line; measured numbers or the first mismatch
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  unsigned passed() const;
  unsigned failed() const;
};

/// The product regression gate: table fixtures, bound dichotomy, null counts,
/// both oracle paths, trace identity, Ritz structure on the contract cases,
/// and the Cauchy–Schwarz sweep. Every check is tolerance-based and honest —
/// a failure here means the build is wrong, not that the gate is optimistic.
VerificationReport run_verification(const PrecisionContext& ctx);

std::string render_report(const VerificationReport& report);

}  // namespace rrm
