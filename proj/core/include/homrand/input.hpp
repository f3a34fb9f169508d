#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "homrand/liealg.hpp"

namespace homrand {

/// Parse error with line/field diagnostics.
struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

struct BracketSpec {
  int a = 0, b = 0;                        // 1-based, a < b
  std::map<int, double> coeffs;            // target index (1-based) -> coefficient
};

/// Parsed input file. Indices in the file are 1-based; brackets list only
/// pairs with a < b and are completed antisymmetrically.
struct InputFile {
  int dim_g = 0;
  int dim_m = 0;
  std::vector<BracketSpec> brackets;
  std::vector<double> u;
  double chart_radius = 0.5;
  double tol = 1e-9;

  RandersDatum to_datum() const;
};

InputFile parse_input(std::istream& in);
InputFile parse_input_file(const std::string& path);

/// Serialize a datum back to the input format (used by catalog --export).
std::string format_input(const ReductiveSpace& space, const VectorXd& u);

}  // namespace homrand
