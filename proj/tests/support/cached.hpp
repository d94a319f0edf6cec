#pragma once

#include "opetokit/equivalences.hpp"
#include "opetokit/fixtures.hpp"

namespace testsupport {

// One copy per test binary.
inline const opetokit::GeneratedOpTwoCat& op2_two_group() {
  static const auto g = opetokit::zeta2_inv(opetokit::fixtures::two_group());
  return g;
}

inline const opetokit::GeneratedOpTwoCat& op2_idempotent() {
  static const auto g = opetokit::zeta2_inv(opetokit::fixtures::idempotent());
  return g;
}

inline const opetokit::GeneratedOpTwoCat& op2_loop() {
  static const auto g = opetokit::zeta2_inv(opetokit::fixtures::idempotent_loop());
  return g;
}

}  // namespace testsupport
