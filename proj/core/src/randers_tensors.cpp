#include "homrand/randers_tensors.hpp"

#include <stdexcept>

namespace homrand {

namespace {

void require_aligned(const RandersDatum& datum) {
  if (!datum.aligned()) throw std::invalid_argument("randers tensors: datum must be aligned (u = c e_n)");
}

}  // namespace

RandersTensors randers_tensors_origin(const RandersDatum& datum, const ConnectionOrigin& conn) {
  require_aligned(datum);
  const int n = datum.space.n();
  const double c = datum.c;
  RandersTensors t;
  t.b = VectorXd::Zero(n);
  t.b[n - 1] = c;
  t.bij = MatrixXd(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.bij(i, j) = c * conn.gamma(n - 1, j, i);
  t.r = 0.5 * (t.bij + t.bij.transpose());
  t.s = 0.5 * (t.bij - t.bij.transpose());
  t.s_vec = c * t.s.row(n - 1).transpose();
  t.t_vec = t.s.transpose() * t.s_vec;  // t_j = s_m s^m_j, indices raised by delta
  return t;
}

Tensor3 d_bij_origin(const RandersDatum& datum, const ConnectionOrigin& conn) {
  require_aligned(datum);
  const ReductiveSpace& space = datum.space;
  const int n = space.n();
  const int m = space.m();
  const int nn = n - 1;  // index of the aligned direction
  const Tensor3& C = space.algebra.C;
  const double c = datum.c;
  Tensor3 out(n, n, n);
  if (c == 0.0) return out;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double val = 0.0;
        if (f_flag(k, i))
          for (int s = 0; s < n; ++s) val += C(k, i, s) * conn.gamma(nn, j, s);
        if (f_flag(k, j))
          for (int a = 0; a < m; ++a) val += C(k, j, a) * killing_nabla(space, nn, a, i);
        for (int s = 0; s < n; ++s) val += C(k, nn, s) * killing_nabla(space, s, j, i);
        val += uk_nabla_derivative(space, k, nn, j, i);
        out(k, i, j) = c * val;
      }
  return out;
}

Tensor3 d_s_origin(const RandersDatum& datum) {
  require_aligned(datum);
  const int n = datum.space.n();
  const int nn = n - 1;
  const Tensor3& C = datum.space.algebra.C;
  const double c = datum.c;
  Tensor3 out(n, n, n);
  if (c == 0.0) return out;
  // d s_{k0}/dx^i = out(i,k,j) y^j; the f(i,0) factor distributes inside
  // the y-contraction as f(i,j).
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) {
        double val = 0.0;
        for (int s = 0; s < n; ++s) {
          if (f_flag(i, k)) val += C(i, k, s) * C(s, j, nn);
          if (f_flag(i, j)) val += C(i, j, s) * C(k, s, nn);
          val += C(j, k, s) * C(i, s, nn);
        }
        out(i, k, j) = 0.5 * c * val;
      }
  return out;
}

VectorXd s_divergence_origin(const RandersDatum& datum, const ConnectionOrigin&) {
  require_aligned(datum);
  const int n = datum.space.n();
  const int nn = n - 1;
  const Tensor3& C = datum.space.algebra.C;
  const double c = datum.c;
  VectorXd S = VectorXd::Zero(n);
  if (c == 0.0) return S;
  for (int j = 0; j < n; ++j) {
    double val = 0.0;
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        double trace_k = C(k, l, k);
        val += C(l, j, nn) * trace_k;
        val += 0.5 * C(k, l, nn) * (C(j, k, l) + C(j, l, k) + C(k, l, j));
      }
    S[j] = 0.5 * c * val;
  }
  return S;
}

RandersTensors all_randers_tensors(const RandersDatum& datum, const ConnectionOrigin& conn) {
  RandersTensors t = randers_tensors_origin(datum, conn);
  t.dbij = d_bij_origin(datum, conn);
  t.dskj = d_s_origin(datum);
  t.S = s_divergence_origin(datum, conn);
  return t;
}

}  // namespace homrand
