#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "homrand/catalog.hpp"
#include "homrand/finsler.hpp"
#include "support/oracles.hpp"

using namespace homrand;

namespace {

RandersDatum datum_for(const char* name, double c) {
  const auto& e = catalog_entry(name);
  VectorXd u = VectorXd::Zero(e.space.n());
  u[e.space.n() - 1] = c;
  return RandersDatum::make(e.space, u);
}

/// Flat Euclidean field in n dimensions with a constant one-form.
MetricField flat_field(int n, double c) {
  MetricField f;
  f.n = n;
  f.c = c;
  f.radius = 1.0;
  f.a = [n](const VectorXd&) { return MatrixXd::Identity(n, n); };
  f.b = [n, c](const VectorXd&) {
    VectorXd b = VectorXd::Zero(n);
    b[n - 1] = c;
    return b;
  };
  return f;
}

}  // namespace

TEST_CASE("jets differentiate polynomials exactly") {
  // q(y) = y1^2 y2 + 3 y2^2 at (2, -1)
  Jet y1 = Jet::variable(2.0, 0, 2);
  Jet y2 = Jet::variable(-1.0, 1, 2);
  Jet q = y1 * y1 * y2 + 3.0 * (y2 * y2);
  CHECK(q.v == doctest::Approx(-1.0));
  CHECK(q.g[0] == doctest::Approx(-4.0));   // 2 y1 y2
  CHECK(q.g[1] == doctest::Approx(-2.0));   // y1^2 + 6 y2
  CHECK(q.H(0, 0) == doctest::Approx(-2.0));
  CHECK(q.H(0, 1) == doctest::Approx(4.0));
  CHECK(q.H(1, 1) == doctest::Approx(6.0));
}

TEST_CASE("jet division and sqrt match closed forms") {
  Jet x = Jet::variable(4.0, 0, 1);
  Jet s = sqrt(x);
  CHECK(s.v == doctest::Approx(2.0));
  CHECK(s.g[0] == doctest::Approx(0.25));
  CHECK(s.H(0, 0) == doctest::Approx(-1.0 / 32.0));
  Jet inv = 1.0 / x;
  CHECK(inv.g[0] == doctest::Approx(-1.0 / 16.0));
  CHECK(inv.H(0, 0) == doctest::Approx(2.0 / 64.0));
  CHECK_THROWS_AS(sqrt(Jet::variable(-1.0, 0, 1)), std::domain_error);
}

TEST_CASE("randers_norm on the flat model") {
  MatrixXd a = MatrixXd::Identity(2, 2);
  VectorXd b(2);
  b << 0.0, 0.5;
  VectorXd y(2);
  y << 3.0, 4.0;
  CHECK(randers_norm(a, b, y) == doctest::Approx(5.0 + 2.0));
}

TEST_CASE("fundamental tensor of a Riemannian field is the metric") {
  RandersDatum d = datum_for("su2", 0.0);
  MetricField f = make_metric_field(d);
  VectorXd x(3), y(3);
  x << 0.1, -0.05, 0.08;
  y << 0.4, 1.0, -0.3;
  MatrixXd g = fundamental_tensor(f, x, y);
  CHECK(g.isApprox(f.a(x), 1e-12));
}

TEST_CASE("fundamental tensor of the flat Randers model, closed form") {
  MetricField f = flat_field(2, 0.5);
  VectorXd x = VectorXd::Zero(2);
  VectorXd y(2);
  y << 1.0, 0.0;
  MatrixXd g = fundamental_tensor(f, x, y);
  // F = |y| + 0.5 y2; at y = e1 (where beta = 0, F = alpha = 1):
  // g_ij = (l_i + b_i)(l_j + b_j) + (F/alpha)(a_ij - l_i l_j) with l = y/alpha
  // gives g_11 = 1, g_12 = 0.5, g_22 = 0.25 + 1 = 1.25.
  CHECK(g(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(g(0, 1) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(g(1, 1) == doctest::Approx(1.25).epsilon(1e-12));
}

TEST_CASE("spray coefficients vanish on flat fields") {
  MetricField f = flat_field(3, 0.4);
  VectorXd x(3), y(3);
  x << 0.1, 0.2, -0.1;
  y << 0.7, -0.2, 0.5;
  CHECK(spray_coefficients(f, x, y).norm() == doctest::Approx(0.0).epsilon(1e-8).scale(1.0));
}

TEST_CASE("spray coefficients of a Riemannian field are the geodesic ones") {
  // G^i = (1/2) Gamma_jk^i y^j y^k for beta = 0.
  RandersDatum d = datum_for("heisenberg3", 0.0);
  MetricField f = make_metric_field(d);
  VectorXd x(3), y(3);
  x << 0.05, -0.1, 0.12;
  y << 0.8, 0.3, -0.5;
  VectorXd G = spray_coefficients(f, x, y);
  Tensor3 gamma = oracle::chart_christoffel(d, x);
  for (int i = 0; i < 3; ++i) {
    double acc = 0.0;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) acc += gamma(j, k, i) * y[j] * y[k];
    CHECK(G[i] == doctest::Approx(0.5 * acc).epsilon(1e-6).scale(1.0));
  }
}

TEST_CASE("spray coefficients are 2-homogeneous in y") {
  RandersDatum d = datum_for("su2", 0.3);
  MetricField f = make_metric_field(d);
  VectorXd x(3), y(3);
  x << 0.1, 0.02, -0.06;
  y << 0.5, -0.7, 0.4;
  VectorXd G1 = spray_coefficients(f, x, y);
  VectorXd G2 = spray_coefficients(f, x, 2.0 * y);
  CHECK((G2 - 4.0 * G1).cwiseAbs().maxCoeff() == doctest::Approx(0.0).epsilon(1e-7).scale(1.0));
}

TEST_CASE("riemann curvature of the flat model vanishes") {
  MetricField f = flat_field(3, 0.3);
  VectorXd x = VectorXd::Zero(3), y(3);
  y << 1.0, 0.4, -0.2;
  RiemannResult r = riemann_curvature(f, x, y);
  CHECK(r.R.cwiseAbs().maxCoeff() == doctest::Approx(0.0).epsilon(1e-7).scale(1.0));
  CHECK(r.ric == doctest::Approx(0.0).epsilon(1e-7).scale(1.0));
}

TEST_CASE("ricci of Riemannian group metrics matches the classical oracle") {
  for (const char* name : {"heisenberg3", "su2", "solv3", "e2"}) {
    CAPTURE(name);
    RandersDatum d = datum_for(name, 0.0);
    MetricField f = make_metric_field(d);
    VectorXd y(3);
    y << 0.8, -0.5, 0.6;
    double numeric = ricci(f, VectorXd::Zero(3), y);
    double classical = oracle::left_invariant_ricci(d.space, y);
    CHECK(numeric == doctest::Approx(classical).epsilon(1e-6).scale(1.0));
  }
}

TEST_CASE("R^i_k contracts to Ric and kills y") {
  RandersDatum d = datum_for("su2", 0.0);
  MetricField f = make_metric_field(d);
  VectorXd y(3);
  y << 0.7, 0.2, -0.4;
  RiemannResult r = riemann_curvature(f, VectorXd::Zero(3), y);
  CHECK(r.R.trace() == doctest::Approx(r.ric).epsilon(1e-12).scale(1.0));
  // R^i_k y^k = 0 for Riemannian sprays
  CHECK((r.R * y).cwiseAbs().maxCoeff() == doctest::Approx(0.0).epsilon(1e-6).scale(1.0));
}

TEST_CASE("defect_samples are deterministic and include the axes") {
  auto s1 = defect_samples(3);
  auto s2 = defect_samples(3);
  REQUIRE(s1.size() == s2.size());
  CHECK(s1.size() == 3 + 40u);  // C(3,2) axis pairs + 40 random pairs
  for (size_t i = 0; i < s1.size(); ++i) {
    CHECK(s1[i].first == s2[i].first);
    CHECK(s1[i].second == s2[i].second);
  }
  CHECK(s1[0].first.isApprox(VectorXd::Unit(3, 0)));
  CHECK(s1[0].second.isApprox(VectorXd::Unit(3, 1)));
}

TEST_CASE("quadraticity_defect separates quadratics from homogeneous non-quadratics") {
  auto samples = defect_samples(3);
  auto quad = [](const VectorXd& y) { return y[0] * y[0] + 2.0 * y[0] * y[1] - y[2] * y[2]; };
  CHECK(quadraticity_defect(quad, samples) == doctest::Approx(0.0).epsilon(1e-14).scale(1.0));
  auto cubic_over_norm = [](const VectorXd& y) { return y[0] * y[0] * y[0] / y.norm(); };
  CHECK(quadraticity_defect(cubic_over_norm, samples) > 0.1);
}

TEST_CASE("classify_defect applies the guard band") {
  CHECK(classify_defect(1e-9) == DefectVerdict::quadratic);
  CHECK(classify_defect(5e-6) == DefectVerdict::inconclusive);
  CHECK(classify_defect(1e-2) == DefectVerdict::non_quadratic);
  CHECK(std::string(to_string(DefectVerdict::quadratic)) == "quadratic");
  CHECK(std::string(to_string(DefectVerdict::non_quadratic)) == "non_quadratic");
  CHECK(std::string(to_string(DefectVerdict::inconclusive)) == "inconclusive");
}

TEST_CASE("berwald and ricci defects agree with the algebraic classification") {
  auto run = [](const char* name, double c) {
    RandersDatum d = datum_for(name, c);
    MetricField f = make_metric_field(d);
    auto samples = defect_samples(d.space.n());
    VectorXd x = VectorXd::Zero(d.space.n());
    return std::pair<double, double>{berwald_defect(f, x, samples), ricci_defect(f, x, samples)};
  };

  // Berwald cases: both defects at noise level.
  auto [bd_ok, rd_ok] = run("h3r", 0.4);
  CHECK(classify_defect(bd_ok) == DefectVerdict::quadratic);
  CHECK(classify_defect(rd_ok) == DefectVerdict::quadratic);

  // Non-Berwald, non-Ricci-quadratic cases: both clearly above threshold.
  auto [bd_no, rd_no] = run("heisenberg3", 0.4);
  CHECK(classify_defect(bd_no) == DefectVerdict::non_quadratic);
  CHECK(classify_defect(rd_no) == DefectVerdict::non_quadratic);
}
