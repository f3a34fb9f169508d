#include "homrand/chart.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <stdexcept>

namespace homrand {

MatrixXd ad_matrix(const LieAlgebra& algebra, int a) {
  const int m = algebra.dim_g;
  MatrixXd M = MatrixXd::Zero(m, m);
  for (int b = 0; b < m; ++b)
    for (int c = 0; c < m; ++c) M(c, b) = algebra.C(a, b, c);
  return M;
}

MatrixXd expm(const MatrixXd& A) {
  const double norm = A.cwiseAbs().rowwise().sum().maxCoeff();  // inf-norm
  int s = 0;
  double scaled = norm;
  while (scaled > 0.5) {
    scaled *= 0.5;
    ++s;
  }
  MatrixXd B = A / std::ldexp(1.0, s);
  const int dim = static_cast<int>(A.rows());
  MatrixXd term = MatrixXd::Identity(dim, dim);
  MatrixXd sum = term;
  for (int k = 1; k <= 18; ++k) {
    term = (term * B) / k;
    sum += term;
  }
  for (int k = 0; k < s; ++k) sum = sum * sum;
  return sum;
}

MatrixXd frame_coefficients(const ReductiveSpace& space, const VectorXd& x) {
  const int n = space.n();
  const int m = space.m();
  MatrixXd f(n, m);
  for (int i = 0; i < n; ++i) {
    VectorXd v = VectorXd::Zero(m);
    v[i] = 1.0;
    // e^{x^1 ad u_1} ... e^{x^{i-1} ad u_{i-1}} (u_i): rightmost factor first.
    for (int j = i - 1; j >= 0; --j) {
      if (x[j] == 0.0) continue;
      v = expm(x[j] * ad_matrix(space.algebra, j)) * v;
    }
    f.row(i) = v.transpose();
  }
  return f;
}

std::pair<MatrixXd, VectorXd> metric_at(const RandersDatum& datum, const VectorXd& x,
                                        double radius) {
  const ReductiveSpace& space = datum.space;
  const int n = space.n();
  const int m = space.m();
  if (x.size() != n) throw std::invalid_argument("metric_at: x has wrong dimension");
  if (datum.c > 0.0 && !datum.aligned())
    throw std::invalid_argument("metric_at: datum must be aligned (u = c e_n)");
  if (x.norm() > radius + 1e-12) throw std::domain_error("metric_at: point outside chart radius");

  MatrixXd f = frame_coefficients(space, x);
  // Ad(g^-1) = e^{-x^n ad u_n} ... e^{-x^1 ad u_1}; rightmost factor first.
  MatrixXd adg = MatrixXd::Identity(m, m);
  for (int j = 0; j < n; ++j) {
    if (x[j] == 0.0) continue;
    adg = expm(-x[j] * ad_matrix(space.algebra, j)) * adg;
  }

  MatrixXd w(n, n);  // m-projection of Ad(g^-1) f_i
  for (int i = 0; i < n; ++i) {
    VectorXd v = adg * f.row(i).transpose();
    w.row(i) = v.head(n).transpose();
  }
  MatrixXd a = w * w.transpose();
  a = 0.5 * (a + a.transpose());

  Eigen::LLT<MatrixXd> llt(a);
  if (llt.info() != Eigen::Success)
    throw std::domain_error("metric_at: metric lost positive-definiteness");

  VectorXd b = datum.c * a.row(n - 1).transpose();
  return {a, b};
}

MetricField make_metric_field(const RandersDatum& datum, double radius) {
  if (!datum.aligned()) throw std::invalid_argument("make_metric_field: datum must be aligned");
  MetricField field;
  field.n = datum.space.n();
  field.c = datum.c;
  field.radius = radius;
  field.a = [datum, radius](const VectorXd& x) { return metric_at(datum, x, radius).first; };
  field.b = [datum, radius](const VectorXd& x) { return metric_at(datum, x, radius).second; };
  return field;
}

}  // namespace homrand
