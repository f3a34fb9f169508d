#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace homrand {

/// Second-order forward-mode scalar: value, gradient and Hessian with
/// respect to a fixed set of seed variables. Arithmetic is exact for
/// smooth compositions, so y-derivatives of degree <= 2 expressions carry
/// no truncation error.
struct Jet {
  double v = 0.0;
  Eigen::VectorXd g;
  Eigen::MatrixXd H;

  Jet() = default;
  Jet(double value, int nvars)
      : v(value), g(Eigen::VectorXd::Zero(nvars)), H(Eigen::MatrixXd::Zero(nvars, nvars)) {}

  static Jet variable(double value, int index, int nvars) {
    Jet j(value, nvars);
    j.g[index] = 1.0;
    return j;
  }

  int nvars() const { return static_cast<int>(g.size()); }
};

inline Jet operator+(const Jet& a, const Jet& b) {
  Jet r = a;
  r.v += b.v;
  r.g += b.g;
  r.H += b.H;
  return r;
}
inline Jet operator-(const Jet& a, const Jet& b) {
  Jet r = a;
  r.v -= b.v;
  r.g -= b.g;
  r.H -= b.H;
  return r;
}
inline Jet operator-(const Jet& a) {
  Jet r = a;
  r.v = -r.v;
  r.g = -r.g;
  r.H = -r.H;
  return r;
}
inline Jet operator*(const Jet& a, const Jet& b) {
  Jet r(a.v * b.v, a.nvars());
  r.g = a.v * b.g + b.v * a.g;
  r.H = a.v * b.H + b.v * a.H + a.g * b.g.transpose() + b.g * a.g.transpose();
  return r;
}
inline Jet operator+(const Jet& a, double s) {
  Jet r = a;
  r.v += s;
  return r;
}
inline Jet operator+(double s, const Jet& a) { return a + s; }
inline Jet operator-(const Jet& a, double s) { return a + (-s); }
inline Jet operator-(double s, const Jet& a) { return (-a) + s; }
inline Jet operator*(const Jet& a, double s) {
  Jet r = a;
  r.v *= s;
  r.g *= s;
  r.H *= s;
  return r;
}
inline Jet operator*(double s, const Jet& a) { return a * s; }
inline Jet operator/(const Jet& a, double s) { return a * (1.0 / s); }

inline Jet inverse(const Jet& b) {
  if (b.v == 0.0) throw std::domain_error("Jet: division by zero");
  Jet r(1.0 / b.v, b.nvars());
  const double iv2 = 1.0 / (b.v * b.v);
  r.g = -b.g * iv2;
  r.H = -b.H * iv2 + (2.0 / (b.v * b.v * b.v)) * b.g * b.g.transpose();
  return r;
}
inline Jet operator/(const Jet& a, const Jet& b) { return a * inverse(b); }
inline Jet operator/(double s, const Jet& b) { return inverse(b) * s; }

inline Jet sqrt(const Jet& a) {
  if (a.v <= 0.0) throw std::domain_error("Jet: sqrt of non-positive value");
  const double s = std::sqrt(a.v);
  Jet r(s, a.nvars());
  r.g = a.g / (2.0 * s);
  r.H = a.H / (2.0 * s) - a.g * a.g.transpose() / (4.0 * s * a.v);
  return r;
}

// Scalar-generic helpers used by templated numeric code.
inline double scalar_value(double x) { return x; }
inline double scalar_value(const Jet& x) { return x.v; }

}  // namespace homrand
