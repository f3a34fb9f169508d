#include "oracles.hpp"

#include <stdexcept>

namespace homrand::oracle {

double fd_derivative(const std::function<double(double)>& f, double h) {
  double d1 = (f(h) - f(-h)) / (2 * h);
  double d2 = (f(h / 2) - f(-h / 2)) / h;
  return (4 * d2 - d1) / 3;
}

Tensor3 chart_da(const RandersDatum& datum, const VectorXd& x, double h) {
  const int n = datum.space.n();
  Tensor3 da(n, n, n);  // da(i,j,l) = d a_jl / dx^i
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = j; l < n; ++l) {
        double d = fd_derivative(
            [&](double t) {
              VectorXd xs = x;
              xs[i] += t;
              return metric_at(datum, xs).first(j, l);
            },
            h);
        da(i, j, l) = d;
        da(i, l, j) = d;
      }
  return da;
}

Tensor3 chart_christoffel(const RandersDatum& datum, const VectorXd& x, double h) {
  const int n = datum.space.n();
  Tensor3 da = chart_da(datum, x, h);
  MatrixXd ainv = metric_at(datum, x).first.inverse();
  Tensor3 gamma(n, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        double acc = 0.0;
        for (int s = 0; s < n; ++s)
          acc += ainv(l, s) * (da(i, j, s) + da(j, i, s) - da(s, i, j));
        gamma(i, j, l) = 0.5 * acc;
      }
  return gamma;
}

Tensor4 chart_dgamma_origin(const RandersDatum& datum, double h_outer) {
  const int n = datum.space.n();
  Tensor4 dg(n, n, n, n);
  for (int k = 0; k < n; ++k) {
    auto gamma_at = [&](double t) {
      VectorXd xs = VectorXd::Zero(n);
      xs[k] = t;
      return chart_christoffel(datum, xs);
    };
    Tensor3 gp = gamma_at(h_outer), gm = gamma_at(-h_outer);
    Tensor3 gp2 = gamma_at(h_outer / 2), gm2 = gamma_at(-h_outer / 2);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
          double d1 = (gp(i, j, l) - gm(i, j, l)) / (2 * h_outer);
          double d2 = (gp2(i, j, l) - gm2(i, j, l)) / h_outer;
          dg(k, i, j, l) = (4 * d2 - d1) / 3;
        }
  }
  return dg;
}

MatrixXd chart_bij(const RandersDatum& datum, const VectorXd& x, double h) {
  const int n = datum.space.n();
  Tensor3 gamma = chart_christoffel(datum, x, h);
  VectorXd b = metric_at(datum, x).second;
  MatrixXd bij(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double db = fd_derivative(
          [&](double t) {
            VectorXd xs = x;
            xs[j] += t;
            return metric_at(datum, xs).second[i];
          },
          h);
      double acc = db;
      for (int l = 0; l < n; ++l) acc -= b[l] * gamma(i, j, l);
      bij(i, j) = acc;
    }
  return bij;
}

Tensor3 chart_dbij_origin(const RandersDatum& datum, double h_outer) {
  const int n = datum.space.n();
  Tensor3 out(n, n, n);
  for (int k = 0; k < n; ++k) {
    auto bij_at = [&](double t) {
      VectorXd xs = VectorXd::Zero(n);
      xs[k] = t;
      return chart_bij(datum, xs);
    };
    MatrixXd bp = bij_at(h_outer), bm = bij_at(-h_outer);
    MatrixXd bp2 = bij_at(h_outer / 2), bm2 = bij_at(-h_outer / 2);
    MatrixXd d = (4.0 * (bp2 - bm2) / h_outer - (bp - bm) / (2 * h_outer)) / 3.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out(k, i, j) = d(i, j);
  }
  return out;
}

Tensor3 chart_dskj_origin(const RandersDatum& datum, double h_outer) {
  const int n = datum.space.n();
  Tensor3 dbij = chart_dbij_origin(datum, h_outer);
  Tensor3 out(n, n, n);  // out(i,k,j): d s_{kj} / dx^i
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) out(i, k, j) = 0.5 * (dbij(i, k, j) - dbij(i, j, k));
  return out;
}

double chart_s_divergence(const RandersDatum& datum, const VectorXd& y, double h_outer) {
  const int n = datum.space.n();
  Tensor3 dskj = chart_dskj_origin(datum, h_outer);
  MatrixXd bij0 = chart_bij(datum, VectorXd::Zero(n));
  MatrixXd s0 = 0.5 * (bij0 - bij0.transpose());
  Tensor3 gamma = chart_christoffel(datum, VectorXd::Zero(n));
  // s^k_{0|k} = sum_k ( d s_{k0}/dx^k - Gamma_kk^l s_{l0} - Gamma_0k^l s_{kl} ),
  // indices raised by the identity at o.
  double acc = 0.0;
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) acc += dskj(k, k, j) * y[j];
    for (int l = 0; l < n; ++l) {
      double s_l0 = 0.0;
      for (int j = 0; j < n; ++j) s_l0 += s0(l, j) * y[j];
      acc -= gamma(k, k, l) * s_l0;
      double gamma_0kl = 0.0;
      for (int j = 0; j < n; ++j) gamma_0kl += y[j] * gamma(j, k, l);
      acc -= gamma_0kl * s0(k, l);
    }
  }
  return acc;
}

double left_invariant_ricci(const ReductiveSpace& space, const VectorXd& y) {
  const int n = space.n();
  if (n != space.m()) throw std::invalid_argument("left_invariant_ricci: group case only (n = m)");
  const Tensor3& C = space.algebra.C;
  // Koszul constants of the orthonormal frame: <nabla_a b, c>.
  Tensor3 nab(n, n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        nab(a, b, c) = 0.5 * (C(a, b, c) - C(b, c, a) + C(c, a, b));
  auto nabla = [&](const VectorXd& xv, const VectorXd& yv) {
    VectorXd out = VectorXd::Zero(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) out[c] += xv[a] * yv[b] * nab(a, b, c);
    return out;
  };
  auto bracket = [&](const VectorXd& xv, const VectorXd& yv) {
    return space.algebra.bracket(xv, yv);
  };
  // Ric(y,y) = sum_i <R(e_i, y) y, e_i>.
  double ric = 0.0;
  for (int i = 0; i < n; ++i) {
    VectorXd ei = VectorXd::Zero(n);
    ei[i] = 1.0;
    VectorXd r = nabla(ei, nabla(y, y)) - nabla(y, nabla(ei, y)) - nabla(bracket(ei, y), y);
    ric += r[i];
  }
  return ric;
}

}  // namespace homrand::oracle
