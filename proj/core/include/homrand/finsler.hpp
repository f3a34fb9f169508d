#pragma once

#include <functional>
#include <vector>

#include "homrand/chart.hpp"
#include "homrand/jet.hpp"

namespace homrand {

/// Differentiation steps: h_inner for x-derivatives of the metric field,
/// h_outer for x-derivatives of spray coefficients (which already contain
/// an inner finite difference). Both use central differences with one
/// Richardson extrapolation. y-derivatives are exact (jets).
struct DerivativeEngine {
  double h_inner = 1e-4;
  double h_outer = 1e-3;
  double richardson_warn = 1e-5;  // flag when h vs h/2 estimates disagree
};

struct RiemannResult {
  MatrixXd R;          // R^i_k
  double ric = 0.0;    // trace
  double richardson_disagreement = 0.0;
};

double randers_norm(const MatrixXd& a, const VectorXd& b, const VectorXd& y);

MatrixXd fundamental_tensor(const MetricField& field, const VectorXd& x, const VectorXd& y);

VectorXd spray_coefficients(const MetricField& field, const VectorXd& x, const VectorXd& y,
                            const DerivativeEngine& eng = {});

RiemannResult riemann_curvature(const MetricField& field, const VectorXd& x, const VectorXd& y,
                                const DerivativeEngine& eng = {});

double ricci(const MetricField& field, const VectorXd& x, const VectorXd& y,
             const DerivativeEngine& eng = {});

/// Fixed reproducible sample set for the parallelogram tests: seeded
/// pseudo-random unit pairs plus all coordinate-axis pairs.
std::vector<std::pair<VectorXd, VectorXd>> defect_samples(int n, int random_pairs = 40,
                                                          unsigned seed = 20240901);

/// Max parallelogram defect of a positively 2-homogeneous function;
/// zero exactly on quadratic forms.
double quadraticity_defect(const std::function<double(const VectorXd&)>& q,
                           const std::vector<std::pair<VectorXd, VectorXd>>& samples);

/// Component-wise parallelogram defect of y -> G^i(x,y).
double berwald_defect(const MetricField& field, const VectorXd& x,
                      const std::vector<std::pair<VectorXd, VectorXd>>& samples,
                      const DerivativeEngine& eng = {});

/// Parallelogram defect of y -> Ric(x,y).
double ricci_defect(const MetricField& field, const VectorXd& x,
                    const std::vector<std::pair<VectorXd, VectorXd>>& samples,
                    const DerivativeEngine& eng = {});

enum class DefectVerdict { quadratic, inconclusive, non_quadratic };

/// Guard-banded classification: <= noise_floor quadratic, >= threshold
/// non-quadratic, in between inconclusive.
DefectVerdict classify_defect(double defect, double noise_floor = 1e-6, double threshold = 1e-4);

const char* to_string(DefectVerdict v);

}  // namespace homrand
