#include "homrand/liealg.hpp"

#include <cmath>

namespace homrand {

VectorXd LieAlgebra::bracket(const VectorXd& x, const VectorXd& y) const {
  VectorXd out = VectorXd::Zero(dim_g);
  for (int a = 0; a < dim_g; ++a) {
    if (x[a] == 0.0) continue;
    for (int b = 0; b < dim_g; ++b) {
      if (y[b] == 0.0) continue;
      for (int c = 0; c < dim_g; ++c) out[c] += x[a] * y[b] * C(a, b, c);
    }
  }
  return out;
}

VectorXd LieAlgebra::bracket_basis(int a, int b) const {
  VectorXd out(dim_g);
  for (int c = 0; c < dim_g; ++c) out[c] = C(a, b, c);
  return out;
}

RandersDatum RandersDatum::make(ReductiveSpace space, VectorXd u) {
  if (u.size() != space.dim_m) throw std::invalid_argument("RandersDatum: u has wrong dimension");
  RandersDatum d;
  d.c = u.norm();
  d.space = std::move(space);
  d.u = std::move(u);
  return d;
}

bool RandersDatum::aligned(double tol) const {
  if (c <= tol) return true;
  const int n = space.dim_m;
  for (int i = 0; i + 1 < n; ++i)
    if (std::abs(u[i]) > tol) return false;
  return std::abs(u[n - 1] - c) <= tol;
}

ValidationReport validate_algebra(const Tensor3& C, double tol) {
  if (!C.cubic() || C.dim0() < 1) throw std::invalid_argument("validate_algebra: C must be m x m x m with m >= 1");
  const int m = C.dim0();
  ValidationReport report;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        double r = std::abs(C(a, b, c) + C(b, a, c));
        if (r > tol) report.add("antisymmetry", {a + 1, b + 1, c + 1}, r);
      }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int e = 0; e < m; ++e) {
          double sum = 0.0;
          for (int d = 0; d < m; ++d)
            sum += C(a, b, d) * C(d, c, e) + C(b, c, d) * C(d, a, e) + C(c, a, d) * C(d, b, e);
          if (std::abs(sum) > tol) report.add("jacobi", {a + 1, b + 1, c + 1, e + 1}, std::abs(sum));
        }
  return report;
}

ValidationReport validate_reductive(const ReductiveSpace& space, double tol) {
  const int m = space.m();
  const int n = space.n();
  if (n < 1 || n > m) throw std::invalid_argument("validate_reductive: need 1 <= dim_m <= dim_g");
  const Tensor3& C = space.algebra.C;
  ValidationReport report;
  // h is a subalgebra: [h,h] has no m-component.
  for (int lam = n; lam < m; ++lam)
    for (int mu = n; mu < m; ++mu)
      for (int i = 0; i < n; ++i) {
        double r = std::abs(C(lam, mu, i));
        if (r > tol) report.add("subalgebra", {lam + 1, mu + 1, i + 1}, r);
      }
  // reductivity: [h,m] stays in m.
  for (int lam = n; lam < m; ++lam)
    for (int i = 0; i < n; ++i)
      for (int mu = n; mu < m; ++mu) {
        double r = std::abs(C(lam, i, mu));
        if (r > tol) report.add("reductivity", {lam + 1, i + 1, mu + 1}, r);
      }
  // isotropy acts by skew maps on (m, <,>).
  for (int lam = n; lam < m; ++lam)
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        double r = std::abs(C(lam, i, j) + C(lam, j, i));
        if (r > tol) report.add("isotropy_skew", {lam + 1, i + 1, j + 1}, r);
      }
  return report;
}

ValidationReport validate_randers_vector(const RandersDatum& datum, double tol) {
  const int m = datum.space.m();
  const int n = datum.space.n();
  const Tensor3& C = datum.space.algebra.C;
  ValidationReport report;
  if (!(datum.c < 1.0 - 1e-12)) report.add("norm_bound", {}, datum.c - 1.0);
  // ad(h) u = 0 (infinitesimal Ad(H)-fixedness, H assumed connected).
  for (int lam = n; lam < m; ++lam)
    for (int j = 0; j < n; ++j) {
      double sum = 0.0;
      for (int i = 0; i < n; ++i) sum += datum.u[i] * C(lam, i, j);
      if (std::abs(sum) > tol) report.add("ad_fixed", {lam + 1, j + 1}, std::abs(sum));
    }
  return report;
}

RandersDatum align_basis(const RandersDatum& datum) {
  const int n = datum.space.n();
  const int m = datum.space.m();
  if (datum.c <= 1e-14 || datum.aligned()) return datum;

  VectorXd w = datum.u / datum.c;
  // Householder reflection on m with Q e_n = w; identity on h.
  VectorXd v = w;
  v[n - 1] -= 1.0;
  MatrixXd Q = MatrixXd::Identity(n, n) - (2.0 / v.squaredNorm()) * v * v.transpose();

  MatrixXd T = MatrixXd::Identity(m, m);
  T.topLeftCorner(n, n) = Q;

  Tensor3 Cn(m, m, m);
  const Tensor3& C = datum.space.algebra.C;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      // [T e_a, T e_b] expressed in the new basis: coordinates T^t [.,.].
      VectorXd br = VectorXd::Zero(m);
      for (int p = 0; p < m; ++p) {
        if (T(p, a) == 0.0) continue;
        for (int q = 0; q < m; ++q) {
          if (T(q, b) == 0.0) continue;
          for (int r = 0; r < m; ++r) br[r] += T(p, a) * T(q, b) * C(p, q, r);
        }
      }
      VectorXd coords = T.transpose() * br;
      for (int c = 0; c < m; ++c) Cn(a, b, c) = coords[c];
    }

  RandersDatum out;
  out.space.algebra.dim_g = m;
  out.space.algebra.C = std::move(Cn);
  out.space.dim_m = n;
  out.u = VectorXd::Zero(n);
  out.u[n - 1] = datum.c;
  out.c = datum.c;
  return out;
}

}  // namespace homrand
