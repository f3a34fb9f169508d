#pragma once

#include <array>
#include <optional>

#include "homrand/liealg.hpp"
#include "homrand/randers_tensors.hpp"

namespace homrand {

constexpr double kCriteriaTol = 1e-9;

struct ConditionResult {
  bool holds = true;
  double residual = 0.0;
  std::array<int, 2> witness{0, 0};  // 1-based index pair of the max residual
};

struct CriteriaReport {
  ConditionResult qric1;
  ConditionResult qric2;
  bool berwald = true;
  bool ricci_quadratic = true;
  bool parallel_form = true;
  double parallel_residual = 0.0;
  double c_tilde_origin = 0.0;  // forced to 0 by the origin-evaluation chain
  double S_norm = 0.0;          // max-norm of the divergence covector
};

/// <[y,u]_m, y> = 0 for all y in m, as the bilinear condition
/// M_ij = <[e_i,u]_m, e_j> + <[e_j,u]_m, e_i> = 0. Basis-covariant.
ConditionResult qric1_test(const RandersDatum& datum, double tol = kCriteriaTol);

/// <[u_k, u_l]_m, u> = 0 for all k, l in m.
ConditionResult qric2_test(const RandersDatum& datum, double tol = kCriteriaTol);

/// Berwald = qric1 and qric2; cross-checked against b_{i|j}(o) = 0.
/// Throws std::logic_error when the two routes disagree.
CriteriaReport berwald_test(const RandersDatum& datum, double tol = kCriteriaTol);

/// Ricci-quadratic via the origin-evaluation chain of the pointwise
/// curvature conditions, without invoking the Berwald equivalence.
/// Requires an aligned datum.
CriteriaReport ricci_quadratic_test(const RandersDatum& datum, double tol = kCriteriaTol);

/// Runs both classifications independently and asserts they agree.
/// Throws std::logic_error on disagreement (the equivalence is a theorem;
/// a mismatch signals a formula bug).
CriteriaReport equivalence_check(const RandersDatum& datum, double tol = kCriteriaTol);

}  // namespace homrand
