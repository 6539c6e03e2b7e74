#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gw/aux_provider.hpp"

namespace gw::cli {

struct VerifyOptions {
  /// Upper degree for the cross-method and associativity ranges (>= 4).
  int max_degree = 8;
  /// Aux provider used by the formula (5) checks; paper_aux() when null.
  std::shared_ptr<const severi::AuxProvider> aux;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Reproduces every published count and cross-method identity. One result
/// per check, in a fixed order.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace gw::cli
