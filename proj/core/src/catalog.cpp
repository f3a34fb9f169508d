#include "homrand/catalog.hpp"

#include <Eigen/QR>
#include <cmath>
#include <random>
#include <stdexcept>

namespace homrand {

namespace {

constexpr double kZero = 1e-12;

void set_bracket(Tensor3& C, int a, int b, std::initializer_list<std::pair<int, double>> coeffs) {
  for (auto [c, v] : coeffs) {
    C(a, b, c) = v;
    C(b, a, c) = -v;
  }
}

ReductiveSpace make_space(int dim_g, int dim_m, Tensor3 C) {
  ReductiveSpace s;
  s.algebra.dim_g = dim_g;
  s.algebra.C = std::move(C);
  s.dim_m = dim_m;
  return s;
}

std::vector<CatalogEntry> build_entries() {
  std::vector<CatalogEntry> out;

  {
    Tensor3 C(3, 3, 3);
    out.push_back({"abelian", "R^3, all brackets zero", make_space(3, 3, std::move(C)),
                   [](const VectorXd&) { return true; }});
  }
  {
    Tensor3 C(3, 3, 3);
    set_bracket(C, 0, 1, {{2, 1.0}});
    out.push_back({"heisenberg3", "Heisenberg h3: [e1,e2]=e3", make_space(3, 3, std::move(C)),
                   [](const VectorXd& u) { return u.norm() <= kZero; }});
  }
  {
    Tensor3 C(4, 4, 4);
    set_bracket(C, 0, 1, {{2, 1.0}});
    out.push_back({"h3r", "h3 + R: [e1,e2]=e3, e4 central", make_space(4, 4, std::move(C)),
                   [](const VectorXd& u) { return u.head(3).norm() <= kZero; }});
  }
  {
    Tensor3 C(3, 3, 3);
    set_bracket(C, 0, 1, {{2, 1.0}});
    set_bracket(C, 1, 2, {{0, 1.0}});
    set_bracket(C, 2, 0, {{1, 1.0}});
    out.push_back({"su2", "su(2): cyclic structure constants", make_space(3, 3, std::move(C)),
                   [](const VectorXd& u) { return u.norm() <= kZero; }});
  }
  {
    Tensor3 C(3, 3, 3);
    set_bracket(C, 2, 0, {{1, 1.0}});
    set_bracket(C, 2, 1, {{0, -1.0}});
    out.push_back({"e2", "Euclidean motion group: [e3,e1]=e2, [e3,e2]=-e1",
                   make_space(3, 3, std::move(C)),
                   [](const VectorXd& u) { return u.head(2).norm() <= kZero; }});
  }
  {
    // Non-unimodular solvable algebra; exercises the trace term of the
    // divergence formula.
    Tensor3 C(3, 3, 3);
    set_bracket(C, 0, 1, {{1, 1.0}, {2, 1.0}});
    out.push_back({"solv3", "solvable: [e1,e2]=e2+e3", make_space(3, 3, std::move(C)),
                   [](const VectorXd& u) { return u.norm() <= kZero; }});
  }
  {
    // S^3 as a coset with one-dimensional isotropy rotating the
    // (e1,e2)-plane; [e1,e2] has an h-component, so the lambda-index
    // code paths are live.
    Tensor3 C(4, 4, 4);
    set_bracket(C, 0, 1, {{2, 1.0}, {3, 1.0}});
    set_bracket(C, 1, 2, {{0, 1.0}});
    set_bracket(C, 2, 0, {{1, 1.0}});
    set_bracket(C, 3, 0, {{1, 1.0}});
    set_bracket(C, 3, 1, {{0, -1.0}});
    out.push_back({"hopf_s3", "Hopf coset: dim h = 1 rotating (e1,e2), fixed line e3",
                   make_space(4, 3, std::move(C)),
                   [](const VectorXd& u) { return u.norm() <= kZero; }});
  }
  {
    Tensor3 C(3, 3, 3);
    set_bracket(C, 0, 1, {{1, 1.0}});
    out.push_back({"aff1r", "aff(1) + R: [e1,e2]=e2, e3 central", make_space(3, 3, std::move(C)),
                   [](const VectorXd& u) { return u.head(2).norm() <= kZero; }});
  }
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_entries();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return e;
  throw std::invalid_argument("unknown catalog entry: " + name);
}

MatrixXd fixed_subspace(const ReductiveSpace& space) {
  const int n = space.n();
  const int m = space.m();
  if (m == n) return MatrixXd::Identity(n, n);
  MatrixXd K((m - n) * n, n);
  int row = 0;
  for (int lam = n; lam < m; ++lam)
    for (int j = 0; j < n; ++j, ++row)
      for (int i = 0; i < n; ++i) K(row, i) = space.algebra.C(lam, i, j);
  Eigen::FullPivLU<MatrixXd> lu(K);
  lu.setThreshold(1e-10);
  MatrixXd ker = lu.kernel();
  if (lu.dimensionOfKernel() == 0) return MatrixXd(n, 0);
  // Orthonormalize.
  Eigen::HouseholderQR<MatrixXd> qr(ker);
  MatrixXd Q = qr.householderQ() * MatrixXd::Identity(n, static_cast<int>(ker.cols()));
  return Q;
}

std::vector<VectorXd> random_admissible_u(const CatalogEntry& entry, unsigned seed, int count) {
  const int n = entry.space.n();
  std::vector<VectorXd> out;
  if (count <= 0) return out;
  MatrixXd B = fixed_subspace(entry.space);
  const int d = static_cast<int>(B.cols());
  if (d == 0) {
    out.push_back(VectorXd::Zero(n));  // trivial fixed set
    return out;
  }
  std::mt19937_64 rng(seed);
  auto uniform = [&rng]() { return (rng() >> 11) * (1.0 / 9007199254740992.0); };
  auto gauss = [&]() {
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  };
  for (int k = 0; k < count; ++k) {
    VectorXd z(d);
    do {
      for (int i = 0; i < d; ++i) z[i] = gauss();
    } while (z.norm() < 1e-8);
    double r = 0.9 * std::pow(uniform(), 1.0 / d);
    out.push_back(B * (z / z.norm() * r));
  }
  return out;
}

}  // namespace homrand
