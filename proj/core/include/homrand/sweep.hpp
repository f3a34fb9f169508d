#pragma once

#include <string>
#include <vector>

#include "homrand/catalog.hpp"
#include "homrand/criteria.hpp"

namespace homrand {

struct SweepCase {
  std::string entry;
  int index = 0;
  VectorXd u;
  bool berwald = false;
  bool ricci_quadratic = false;
  bool parallel_form = false;
  bool expected = false;
  bool agree = false;  // all three verdicts and the expectation coincide
  double berwald_defect = -1.0;  // filled only with the numeric oracle
  double ricci_defect = -1.0;
  bool oracle_agree = true;
};

struct SweepResult {
  std::vector<SweepCase> cases;  // sorted by entry name, then seed index
  bool all_agree = true;
};

/// Catalog x random admissible u equivalence sweep; with_oracle adds the
/// numeric defect classification per case.
SweepResult run_sweep(unsigned seed, int count, bool with_oracle = false,
                      double tol = kCriteriaTol);

}  // namespace homrand
