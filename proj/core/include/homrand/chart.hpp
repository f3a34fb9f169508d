#pragma once

#include <functional>

#include "homrand/liealg.hpp"

namespace homrand {

/// Riemannian metric and one-form of an invariant Randers structure,
/// evaluated in the product-of-exponentials chart around the origin.
struct MetricField {
  int n = 0;
  double c = 0.0;
  double radius = 0.5;
  std::function<MatrixXd(const VectorXd&)> a;
  std::function<VectorXd(const VectorXd&)> b;
};

constexpr double kDefaultChartRadius = 0.5;

/// Matrix of ad(u_a): entry (c,b) = C_ab^c.
MatrixXd ad_matrix(const LieAlgebra& algebra, int a);

/// Scaling-and-squaring exponential with a fixed truncated series;
/// exact to round-off for nilpotent arguments.
MatrixXd expm(const MatrixXd& A);

/// Frame coefficients f_i^a(x): row i expresses d/dx^i at x through the
/// fundamental vector fields, n x m.
MatrixXd frame_coefficients(const ReductiveSpace& space, const VectorXd& x);

/// Metric a_ij(x) and one-form b_i(x) at a chart point. Throws
/// std::domain_error when x leaves the chart radius or a(x) stops being
/// positive definite.
std::pair<MatrixXd, VectorXd> metric_at(const RandersDatum& datum, const VectorXd& x,
                                        double radius = kDefaultChartRadius);

MetricField make_metric_field(const RandersDatum& datum, double radius = kDefaultChartRadius);

}  // namespace homrand
