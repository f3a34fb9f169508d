#pragma once

#include <string>
#include <vector>

#include "homrand/tensor.hpp"

namespace homrand {

/// A single invariant violation found by a validator.
struct Violation {
  std::string invariant;
  std::vector<int> index;  // 1-based, matching the input-file convention
  double residual = 0.0;
};

struct ValidationReport {
  bool passed = true;
  std::vector<Violation> violations;

  void add(std::string name, std::vector<int> idx, double residual) {
    passed = false;
    violations.push_back({std::move(name), std::move(idx), residual});
  }
};

/// Lie algebra given by its structure constants in a fixed basis:
/// [u_a, u_b] = C_ab^c u_c. Indices are 0-based internally.
struct LieAlgebra {
  int dim_g = 0;
  Tensor3 C;  // C(a,b,c) = C_ab^c

  /// Coordinates of [x, y] in the basis.
  VectorXd bracket(const VectorXd& x, const VectorXd& y) const;
  /// Coordinates of [u_a, u_b].
  VectorXd bracket_basis(int a, int b) const;
};

/// Reductive decomposition g = m + h. Basis vectors 0..n-1 span m,
/// n..dim_g-1 span h. The inner product on m is the identity matrix
/// in this basis.
struct ReductiveSpace {
  LieAlgebra algebra;
  int dim_m = 0;

  int n() const { return dim_m; }
  int m() const { return algebra.dim_g; }
};

/// Reductive space plus an Ad(H)-fixed vector u in m with |u| < 1.
struct RandersDatum {
  ReductiveSpace space;
  VectorXd u;
  double c = 0.0;  // Euclidean norm of u

  static RandersDatum make(ReductiveSpace space, VectorXd u);
  /// True when u = c * e_n (last m-basis vector) or c = 0.
  bool aligned(double tol = 1e-12) const;
};

constexpr double kJacobiTol = 1e-12;

ValidationReport validate_algebra(const Tensor3& C, double tol = kJacobiTol);
ValidationReport validate_reductive(const ReductiveSpace& space, double tol = kJacobiTol);
ValidationReport validate_randers_vector(const RandersDatum& datum, double tol = kJacobiTol);

/// Rotates the m-basis so that u lands on the last basis vector, transforming
/// the structure constants by the corresponding orthogonal change of basis
/// (identity on h). For c = 0 the datum is returned unchanged.
RandersDatum align_basis(const RandersDatum& datum);

}  // namespace homrand
