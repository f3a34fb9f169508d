#pragma once

#include "homrand/connection.hpp"
#include "homrand/liealg.hpp"

namespace homrand {

/// The Randers one-form data and its covariant derivatives at the origin.
/// All fields assume an aligned datum (u = c e_n) and the identity inner
/// product, so indices are raised and lowered trivially.
struct RandersTensors {
  VectorXd b;      // b_i(o) = c delta_in
  MatrixXd bij;    // bij(i,j) = b_{i|j}(o)
  MatrixXd r;      // symmetric part
  MatrixXd s;      // antisymmetric part
  VectorXd s_vec;  // s_j(o) = c s_{nj}
  VectorXd t_vec;  // t_j(o) = s_m s^m_j
  Tensor3 dbij;    // dbij(k,i,j) = d b_{i|j} / dx^k at o
  Tensor3 dskj;    // dskj(i,k,j): d s_{k0}/dx^i = dskj(i,k,j) y^j
  VectorXd S;      // S_j y^j = s^k_{0|k}(o)
};

/// b, b_{i|j}, r, s, s_vec, t_vec from the connection at o.
RandersTensors randers_tensors_origin(const RandersDatum& datum, const ConnectionOrigin& conn);

Tensor3 d_bij_origin(const RandersDatum& datum, const ConnectionOrigin& conn);

/// Derivative of s_{k0}; valid on data satisfying qric_1.
Tensor3 d_s_origin(const RandersDatum& datum);

/// Covector S with S_j y^j = s^k_{0|k}(o); valid on data satisfying qric_1.
VectorXd s_divergence_origin(const RandersDatum& datum, const ConnectionOrigin& conn);

/// Convenience: all of the above in one struct.
RandersTensors all_randers_tensors(const RandersDatum& datum, const ConnectionOrigin& conn);

}  // namespace homrand
