#include "homrand/connection.hpp"

#include <stdexcept>

namespace homrand {

double killing_nabla(const ReductiveSpace& space, int a, int b, int l) {
  const int n = space.n();
  const int m = space.m();
  if (l < 0 || l >= n) throw std::out_of_range("killing_nabla: l outside m-range");
  if (a < 0 || a >= m || b < 0 || b >= m) throw std::out_of_range("killing_nabla: index outside g-range");
  const Tensor3& C = space.algebra.C;
  // Killing-field formula at o; hat fields of h vectors vanish at o, so
  // terms pairing with an h index drop out.
  double val = C(a, b, l);
  if (b < n) val += C(a, l, b);
  if (a < n) val += C(b, l, a);
  return -0.5 * val;
}

double uk_nabla_derivative(const ReductiveSpace& space, int k, int i, int j, int l) {
  const int n = space.n();
  const int m = space.m();
  if (k < 0 || k >= n || i < 0 || i >= n || j < 0 || j >= n || l < 0 || l >= n)
    throw std::out_of_range("uk_nabla_derivative: index outside m-range");
  const Tensor3& C = space.algebra.C;
  double acc = 0.0;
  for (int a = 0; a < m; ++a)
    acc += C(k, a, l) * C(i, j, a) + C(k, a, j) * C(i, l, a) + C(k, a, i) * C(j, l, a);
  for (int s = 0; s < n; ++s)
    acc += C(i, j, s) * C(k, l, s) + C(i, l, s) * C(k, j, s) + C(j, l, s) * C(k, i, s);
  return 0.5 * acc;
}

Tensor3 christoffel_origin(const ReductiveSpace& space) {
  const int n = space.n();
  const Tensor3& C = space.algebra.C;
  Tensor3 gamma(n, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        gamma(i, j, l) = f_flag(i, j) * C(i, j, l) + killing_nabla(space, i, j, l);
  return gamma;
}

Tensor4 christoffel_derivative_origin(const ReductiveSpace& space) {
  const int n = space.n();
  const int m = space.m();
  const Tensor3& C = space.algebra.C;
  Tensor3 gamma = christoffel_origin(space);
  Tensor4 dgamma(n, n, n, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j)
        for (int l = 0; l < n; ++l) {
          double val = 0.0;
          for (int s = 0; s < n; ++s)
            val -= gamma(i, j, s) * (gamma(k, s, l) + killing_nabla(space, k, l, s));
          if (f_flag(k, j))
            for (int a = 0; a < m; ++a)
              val += C(k, j, a) * killing_nabla(space, i, a, l);
          if (f_flag(k, i))
            for (int s = 0; s < n; ++s)
              val += C(k, i, s) * killing_nabla(space, s, j, l);
          val += uk_nabla_derivative(space, k, i, j, l);
          dgamma(k, i, j, l) = val;
          dgamma(k, j, i, l) = val;  // Gamma_ij = Gamma_ji as functions
        }
  return dgamma;
}

ConnectionOrigin connection_origin(const ReductiveSpace& space) {
  return {christoffel_origin(space), christoffel_derivative_origin(space)};
}

}  // namespace homrand
