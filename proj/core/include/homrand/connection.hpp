#pragma once

#include "homrand/liealg.hpp"
#include "homrand/tensor.hpp"

namespace homrand {

/// Levi-Civita data of the invariant metric at the origin, computed
/// algebraically from structure constants.
struct ConnectionOrigin {
  Tensor3 gamma;   // gamma(i,j,l) = Gamma_ij^l(o), m-indices
  Tensor4 dgamma;  // dgamma(k,i,j,l) = d Gamma_ij^l / dx^k at o
};

inline int f_flag(int k, int i) { return k < i ? 1 : 0; }

/// <nabla_{u_a^} u_b^, u_l^> at the origin; a, b range over g, l over m.
double killing_nabla(const ReductiveSpace& space, int a, int b, int l);

/// u_k^ <nabla_{u_i^} u_j^, u_l^> at the origin; all indices in m.
double uk_nabla_derivative(const ReductiveSpace& space, int k, int i, int j, int l);

Tensor3 christoffel_origin(const ReductiveSpace& space);
Tensor4 christoffel_derivative_origin(const ReductiveSpace& space);

ConnectionOrigin connection_origin(const ReductiveSpace& space);

}  // namespace homrand
