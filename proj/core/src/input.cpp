#include "homrand/input.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace homrand {

RandersDatum InputFile::to_datum() const {
  if (dim_g < 1) throw std::invalid_argument("dim_g must be >= 1");
  if (dim_m < 1 || dim_m > dim_g) throw std::invalid_argument("need 1 <= dim_m <= dim_g");
  Tensor3 C(dim_g, dim_g, dim_g);
  for (const auto& br : brackets)
    for (auto [c, v] : br.coeffs) {
      C(br.a - 1, br.b - 1, c - 1) += v;
      C(br.b - 1, br.a - 1, c - 1) -= v;
    }
  ReductiveSpace space;
  space.algebra.dim_g = dim_g;
  space.algebra.C = std::move(C);
  space.dim_m = dim_m;
  VectorXd uv = VectorXd::Zero(dim_m);
  if (static_cast<int>(u.size()) != dim_m) throw std::invalid_argument("u must have dim_m components");
  for (int i = 0; i < dim_m; ++i) uv[i] = u[i];
  return RandersDatum::make(std::move(space), std::move(uv));
}

InputFile parse_input(std::istream& in) {
  InputFile f;
  bool have_g = false, have_m = false, have_u = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string key;
    if (!(ss >> key)) continue;
    if (key == "dim_g") {
      if (!(ss >> f.dim_g) || f.dim_g < 1) throw ParseError(lineno, "dim_g: expected positive integer");
      have_g = true;
    } else if (key == "dim_m") {
      if (!(ss >> f.dim_m) || f.dim_m < 1) throw ParseError(lineno, "dim_m: expected positive integer");
      have_m = true;
    } else if (key == "bracket") {
      if (!have_g) throw ParseError(lineno, "bracket before dim_g");
      BracketSpec br;
      std::string colon;
      if (!(ss >> br.a >> br.b >> colon) || colon != ":")
        throw ParseError(lineno, "bracket: expected 'bracket a b : c1 v1 [c2 v2 ...]'");
      if (br.a < 1 || br.b < 1 || br.a > f.dim_g || br.b > f.dim_g)
        throw ParseError(lineno, "bracket: index out of range 1..dim_g");
      if (br.a >= br.b)
        throw ParseError(lineno, "bracket: require a < b (antisymmetric completion is automatic)");
      int c;
      double v;
      while (ss >> c >> v) {
        if (c < 1 || c > f.dim_g) throw ParseError(lineno, "bracket: target index out of range");
        br.coeffs[c] += v;
      }
      if (!ss.eof()) throw ParseError(lineno, "bracket: trailing garbage");
      if (br.coeffs.empty()) throw ParseError(lineno, "bracket: expected at least one 'index value' pair");
      f.brackets.push_back(std::move(br));
    } else if (key == "u") {
      double v;
      f.u.clear();
      while (ss >> v) f.u.push_back(v);
      if (!ss.eof()) throw ParseError(lineno, "u: expected reals");
      have_u = true;
    } else if (key == "chart_radius") {
      if (!(ss >> f.chart_radius) || f.chart_radius <= 0) throw ParseError(lineno, "chart_radius: expected positive real");
    } else if (key == "tol") {
      if (!(ss >> f.tol) || f.tol <= 0) throw ParseError(lineno, "tol: expected positive real");
    } else {
      throw ParseError(lineno, "unknown key '" + key + "'");
    }
  }
  if (!have_g) throw ParseError(lineno, "missing dim_g");
  if (!have_m) throw ParseError(lineno, "missing dim_m");
  if (!have_u) throw ParseError(lineno, "missing u");
  if (static_cast<int>(f.u.size()) != f.dim_m)
    throw ParseError(lineno, "u: expected dim_m components");
  return f;
}

InputFile parse_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  return parse_input(in);
}

std::string format_input(const ReductiveSpace& space, const VectorXd& u) {
  std::ostringstream out;
  out.precision(17);
  const int m = space.m();
  const int n = space.n();
  out << "dim_g " << m << "\n";
  out << "dim_m " << n << "\n";
  const Tensor3& C = space.algebra.C;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      std::ostringstream terms;
      for (int c = 0; c < m; ++c)
        if (C(a, b, c) != 0.0) terms << " " << c + 1 << " " << C(a, b, c);
      if (!terms.str().empty()) out << "bracket " << a + 1 << " " << b + 1 << " :" << terms.str() << "\n";
    }
  out << "u";
  for (int i = 0; i < n; ++i) out << " " << u[i];
  out << "\n";
  return out.str();
}

}  // namespace homrand
