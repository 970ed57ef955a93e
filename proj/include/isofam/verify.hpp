#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "isofam/counting.hpp"
#include "isofam/oracle.hpp"

// The invariant suite behind `isofam verify`. Every check runs exhaustively
// for one D and records the first counterexample in full.
namespace isofam::verify {

struct CheckResult {
  std::string name;
  int D = 0;
  std::size_t examined = 0;
  bool pass = true;
  std::string counterexample;
};

struct VerifyOptions {
  int D_min = 2;
  int D_max = 8;
  bool oracle = false;
  oracle::OracleBudget budget;
};

struct VerifyReport {
  std::vector<counting::CountReport> counts;
  std::vector<CheckResult> checks;

  bool pass() const;
};

VerifyReport run(const VerifyOptions& options);

// Individual checks, exposed for tests. Each takes the even D under test.
CheckResult check_family_structure(int D);
CheckResult check_xi_bijection(int D);
CheckResult check_theta_bijection(int D);
CheckResult check_lagrangian(int D);
CheckResult check_sigma_lemmas(int D);
CheckResult check_theta_compatibility(int D);
CheckResult check_decompose_round_trip(int D);
CheckResult check_inductive_closure(int D);
CheckResult check_order_preserving(int D);
CheckResult check_L_parity(int D);
CheckResult check_oracle_noncrossing(int D, const oracle::OracleBudget& budget);
CheckResult check_oracle_isotropic_members(int D, const oracle::OracleBudget& budget);
CheckResult check_oracle_line_characterization(int D, const oracle::OracleBudget& budget);

}  // namespace isofam::verify
