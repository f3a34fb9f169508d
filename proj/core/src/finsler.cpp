#include "homrand/finsler.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace homrand {

namespace {

// (4 D(h/2) - D(h)) / 3 from the four central samples.
template <typename T>
T rich_comb(const T& fp, const T& fm, const T& fp2, const T& fm2, double h) {
  T d1 = (fp - fm) * (0.5 / h);
  T d2 = (fp2 - fm2) * (1.0 / h);
  return d2 * (4.0 / 3.0) - d1 * (1.0 / 3.0);
}

template <typename T>
double rich_gap(const T& fp, const T& fm, const T& fp2, const T& fm2, double h) {
  double d1 = scalar_value(fp - fm) * (0.5 / h);
  double d2 = scalar_value(fp2 - fm2) * (1.0 / h);
  return std::abs(d2 - d1);
}

template <typename S>
S f2_scalar(const MatrixXd& A, const VectorXd& b, const std::vector<S>& y) {
  const int n = static_cast<int>(y.size());
  S alpha2 = y[0] * y[0] * A(0, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == 0 && j == 0) continue;
      alpha2 = alpha2 + y[i] * y[j] * A(i, j);
    }
  using std::sqrt;
  S F = sqrt(alpha2);
  for (int i = 0; i < n; ++i) F = F + y[i] * b[i];
  return F * F;
}

// Gradient of F^2 in y, closed form: 2 F ((Ay)_l / alpha + b_l).
template <typename S>
std::vector<S> df2dy(const MatrixXd& A, const VectorXd& b, const std::vector<S>& y) {
  const int n = static_cast<int>(y.size());
  std::vector<S> Ay(n);
  for (int i = 0; i < n; ++i) {
    S acc = y[0] * A(i, 0);
    for (int j = 1; j < n; ++j) acc = acc + y[j] * A(i, j);
    Ay[i] = acc;
  }
  S alpha2 = y[0] * Ay[0];
  for (int i = 1; i < n; ++i) alpha2 = alpha2 + y[i] * Ay[i];
  using std::sqrt;
  S alpha = sqrt(alpha2);
  S F = alpha;
  for (int i = 0; i < n; ++i) F = F + y[i] * b[i];
  std::vector<S> out(n);
  for (int l = 0; l < n; ++l) out[l] = 2.0 * F * (Ay[l] / alpha + b[l]);
  return out;
}

// Fundamental tensor in closed form, usable with jet-valued y.
template <typename S>
std::vector<std::vector<S>> fund_scalar(const MatrixXd& A, const VectorXd& b,
                                        const std::vector<S>& y) {
  const int n = static_cast<int>(y.size());
  std::vector<S> Ay(n);
  for (int i = 0; i < n; ++i) {
    S acc = y[0] * A(i, 0);
    for (int j = 1; j < n; ++j) acc = acc + y[j] * A(i, j);
    Ay[i] = acc;
  }
  S alpha2 = y[0] * Ay[0];
  for (int i = 1; i < n; ++i) alpha2 = alpha2 + y[i] * Ay[i];
  using std::sqrt;
  S alpha = sqrt(alpha2);
  S beta = y[0] * b[0];
  for (int i = 1; i < n; ++i) beta = beta + y[i] * b[i];
  S F = alpha + beta;
  std::vector<std::vector<S>> g(n, std::vector<S>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      S lij = Ay[i] / alpha + b[i];
      S lji = Ay[j] / alpha + b[j];
      g[i][j] = (F / alpha) * (A(i, j) * 1.0 - (Ay[i] * Ay[j]) / alpha2) + lij * lji;
    }
  return g;
}

template <typename S>
std::vector<S> gauss_solve(std::vector<std::vector<S>> M, std::vector<S> rhs) {
  const int n = static_cast<int>(rhs.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(scalar_value(M[r][col])) > std::abs(scalar_value(M[piv][col]))) piv = r;
    if (std::abs(scalar_value(M[piv][col])) < 1e-14)
      throw std::runtime_error("spray: singular fundamental tensor");
    std::swap(M[piv], M[col]);
    std::swap(rhs[piv], rhs[col]);
    for (int r = col + 1; r < n; ++r) {
      S factor = M[r][col] / M[col][col];
      for (int c = col; c < n; ++c) M[r][c] = M[r][c] - factor * M[col][c];
      rhs[r] = rhs[r] - factor * rhs[col];
    }
  }
  std::vector<S> x(rhs);
  for (int r = n - 1; r >= 0; --r) {
    for (int c = r + 1; c < n; ++c) x[r] = x[r] - M[r][c] * x[c];
    x[r] = x[r] / M[r][r];
  }
  return x;
}

// Spray coefficients at (x, y) with scalar-generic y (double or Jet).
// G^i = 1/4 g^{il} ( [F^2]_{x^m y^l} y^m - [F^2]_{x^l} ).
template <typename S>
std::vector<S> spray_impl(const MetricField& field, const VectorXd& x, const std::vector<S>& y,
                          double h, double* max_gap = nullptr) {
  const int n = field.n;
  std::vector<S> fx2(n);                              // [F^2]_{x^l}
  std::vector<std::vector<S>> dml(n, std::vector<S>(n));  // d_{x^m} dF2/dy^l
  for (int m = 0; m < n; ++m) {
    S f2s[4];
    std::vector<std::vector<S>> grads(4);
    const double shifts[4] = {h, -h, h / 2, -h / 2};
    for (int s = 0; s < 4; ++s) {
      VectorXd xs = x;
      xs[m] += shifts[s];
      MatrixXd A = field.a(xs);
      VectorXd b = field.b(xs);
      f2s[s] = f2_scalar(A, b, y);
      grads[s] = df2dy(A, b, y);
    }
    fx2[m] = rich_comb(f2s[0], f2s[1], f2s[2], f2s[3], h);
    if (max_gap) *max_gap = std::max(*max_gap, rich_gap(f2s[0], f2s[1], f2s[2], f2s[3], h));
    for (int l = 0; l < n; ++l)
      dml[m][l] = rich_comb(grads[0][l], grads[1][l], grads[2][l], grads[3][l], h);
  }

  MatrixXd A0 = field.a(x);
  VectorXd b0 = field.b(x);
  std::vector<std::vector<S>> g = fund_scalar(A0, b0, y);
  std::vector<S> rhs(n);
  for (int l = 0; l < n; ++l) {
    S phi = y[0] * dml[0][l];
    for (int m = 1; m < n; ++m) phi = phi + y[m] * dml[m][l];
    rhs[l] = phi - fx2[l];
  }
  std::vector<S> z = gauss_solve(g, rhs);
  for (int i = 0; i < n; ++i) z[i] = z[i] * 0.25;
  return z;
}

std::vector<Jet> seed_jets(const VectorXd& y) {
  const int n = static_cast<int>(y.size());
  std::vector<Jet> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(Jet::variable(y[i], i, n));
  return out;
}

}  // namespace

double randers_norm(const MatrixXd& a, const VectorXd& b, const VectorXd& y) {
  if (y.norm() == 0.0) throw std::domain_error("randers_norm: y = 0");
  return std::sqrt(y.dot(a * y)) + b.dot(y);
}

MatrixXd fundamental_tensor(const MetricField& field, const VectorXd& x, const VectorXd& y) {
  if (y.norm() == 0.0) throw std::domain_error("fundamental_tensor: y = 0");
  MatrixXd A = field.a(x);
  VectorXd b = field.b(x);
  Jet F2 = f2_scalar(A, b, seed_jets(y));
  return 0.5 * F2.H;
}

VectorXd spray_coefficients(const MetricField& field, const VectorXd& x, const VectorXd& y,
                            const DerivativeEngine& eng) {
  if (y.norm() == 0.0) throw std::domain_error("spray_coefficients: y = 0");
  std::vector<double> yv(y.data(), y.data() + y.size());
  std::vector<double> G = spray_impl(field, x, yv, eng.h_inner);
  return Eigen::Map<VectorXd>(G.data(), static_cast<int>(G.size()));
}

RiemannResult riemann_curvature(const MetricField& field, const VectorXd& x, const VectorXd& y,
                                const DerivativeEngine& eng) {
  if (y.norm() == 0.0) throw std::domain_error("riemann_curvature: y = 0");
  const int n = field.n;
  RiemannResult res;

  // y-derivatives of G, exact via jets.
  std::vector<Jet> J = spray_impl(field, x, seed_jets(y), eng.h_inner);

  // dG^i/dx^k by outer central differences.
  std::vector<double> yv(y.data(), y.data() + y.size());
  MatrixXd Gx(n, n);  // Gx(k,i) = dG^i/dx^k
  const double h = eng.h_outer;
  for (int k = 0; k < n; ++k) {
    VectorXd Gp[4];
    const double shifts[4] = {h, -h, h / 2, -h / 2};
    for (int s = 0; s < 4; ++s) {
      VectorXd xs = x;
      xs[k] += shifts[s];
      std::vector<double> G = spray_impl(field, xs, yv, eng.h_inner);
      Gp[s] = Eigen::Map<VectorXd>(G.data(), n);
    }
    VectorXd d = rich_comb(Gp[0], Gp[1], Gp[2], Gp[3], h);
    VectorXd gap = ((Gp[2] - Gp[3]) / h - (Gp[0] - Gp[1]) / (2 * h)).cwiseAbs();
    res.richardson_disagreement = std::max(res.richardson_disagreement, gap.maxCoeff());
    Gx.row(k) = d.transpose();
  }

  // [G^i]_{x^m y^k} y^m: directional x-derivative of the jet gradient
  // along the (fixed) vector y.
  const double hd = h / std::max(1.0, y.norm());
  std::vector<std::vector<Jet>> Jd(4);
  const double shifts[4] = {hd, -hd, hd / 2, -hd / 2};
  for (int s = 0; s < 4; ++s) Jd[s] = spray_impl(field, x + shifts[s] * y, seed_jets(y), eng.h_inner);
  MatrixXd dirg(n, n);  // dirg(i,k) = [G^i]_{x^m y^k} y^m
  for (int i = 0; i < n; ++i) {
    VectorXd d = rich_comb(Jd[0][i].g, Jd[1][i].g, Jd[2][i].g, Jd[3][i].g, hd);
    dirg.row(i) = d.transpose();
  }

  res.R = MatrixXd(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      double val = 2.0 * Gx(k, i) - dirg(i, k);
      for (int m = 0; m < n; ++m) {
        val += 2.0 * J[m].v * J[i].H(m, k);
        val -= J[i].g[m] * J[m].g[k];
      }
      res.R(i, k) = val;
    }
  res.ric = res.R.trace();
  return res;
}

double ricci(const MetricField& field, const VectorXd& x, const VectorXd& y,
             const DerivativeEngine& eng) {
  return riemann_curvature(field, x, y, eng).ric;
}

std::vector<std::pair<VectorXd, VectorXd>> defect_samples(int n, int random_pairs, unsigned seed) {
  std::vector<std::pair<VectorXd, VectorXd>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      VectorXd a = VectorXd::Zero(n), b = VectorXd::Zero(n);
      a[i] = 1.0;
      b[j] = 1.0;
      out.emplace_back(a, b);
    }
  // Deterministic unit pairs; raw engine bits so the stream is
  // platform-independent.
  std::mt19937_64 rng(seed);
  auto uniform = [&rng]() { return (rng() >> 11) * (1.0 / 9007199254740992.0); };
  auto gauss = [&]() {
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  };
  auto unit = [&]() {
    VectorXd v(n);
    do {
      for (int i = 0; i < n; ++i) v[i] = gauss();
    } while (v.norm() < 1e-8);
    return VectorXd(v / v.norm());
  };
  while (static_cast<int>(out.size()) < random_pairs + n * (n - 1) / 2) {
    VectorXd a = unit(), b = unit();
    if ((a + b).norm() < 1e-3 || (a - b).norm() < 1e-3) continue;
    out.emplace_back(a, b);
  }
  return out;
}

double quadraticity_defect(const std::function<double(const VectorXd&)>& q,
                           const std::vector<std::pair<VectorXd, VectorXd>>& samples) {
  double defect = 0.0;
  for (const auto& [y1, y2] : samples) {
    if ((y1 + y2).norm() < 1e-9 || (y1 - y2).norm() < 1e-9) continue;  // degenerate pair
    double q1 = q(y1), q2 = q(y2);
    double num = std::abs(q(y1 + y2) + q(y1 - y2) - 2.0 * q1 - 2.0 * q2);
    defect = std::max(defect, num / (std::abs(q1) + std::abs(q2) + 1.0));
  }
  return defect;
}

double berwald_defect(const MetricField& field, const VectorXd& x,
                      const std::vector<std::pair<VectorXd, VectorXd>>& samples,
                      const DerivativeEngine& eng) {
  const int n = field.n;
  double defect = 0.0;
  auto G = [&](const VectorXd& y) { return spray_coefficients(field, x, y, eng); };
  for (const auto& [y1, y2] : samples) {
    if ((y1 + y2).norm() < 1e-9 || (y1 - y2).norm() < 1e-9) continue;
    VectorXd g1 = G(y1), g2 = G(y2), gp = G(y1 + y2), gm = G(y1 - y2);
    for (int i = 0; i < n; ++i) {
      double num = std::abs(gp[i] + gm[i] - 2.0 * g1[i] - 2.0 * g2[i]);
      defect = std::max(defect, num / (std::abs(g1[i]) + std::abs(g2[i]) + 1.0));
    }
  }
  return defect;
}

double ricci_defect(const MetricField& field, const VectorXd& x,
                    const std::vector<std::pair<VectorXd, VectorXd>>& samples,
                    const DerivativeEngine& eng) {
  auto q = [&](const VectorXd& y) { return ricci(field, x, y, eng); };
  return quadraticity_defect(q, samples);
}

DefectVerdict classify_defect(double defect, double noise_floor, double threshold) {
  if (defect <= noise_floor) return DefectVerdict::quadratic;
  if (defect >= threshold) return DefectVerdict::non_quadratic;
  return DefectVerdict::inconclusive;
}

const char* to_string(DefectVerdict v) {
  switch (v) {
    case DefectVerdict::quadratic: return "quadratic";
    case DefectVerdict::inconclusive: return "inconclusive";
    case DefectVerdict::non_quadratic: return "non_quadratic";
  }
  return "?";
}

}  // namespace homrand
