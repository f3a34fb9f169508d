#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "homrand/catalog.hpp"
#include "homrand/chart.hpp"
#include "homrand/criteria.hpp"
#include "homrand/finsler.hpp"
#include "homrand/input.hpp"
#include "homrand/report.hpp"
#include "homrand/sweep.hpp"

namespace {

using namespace homrand;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitConsistency = 3;

std::string format_vector(const VectorXd& v) {
  std::ostringstream out;
  out.precision(17);
  out << "(";
  for (int i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ")";
  return out.str();
}

void echo_input(Report& rep, const std::string& path, const InputFile& in) {
  rep.add("input.path", path);
  rep.add("input.dim_g", in.dim_g);
  rep.add("input.dim_m", in.dim_m);
  std::ostringstream u;
  u.precision(17);
  u << "(";
  for (size_t i = 0; i < in.u.size(); ++i) u << (i ? "," : "") << in.u[i];
  u << ")";
  rep.add("input.u", u.str());
  rep.add("input.tol", in.tol);
  rep.add("input.chart_radius", in.chart_radius);
}

void add_violations(Report& rep, const std::string& prefix, const ValidationReport& vr) {
  rep.add(prefix + ".passed", vr.passed);
  int i = 0;
  for (const auto& v : vr.violations) {
    std::ostringstream key, val;
    key << prefix << ".violation." << i++;
    val << v.invariant << " at (";
    for (size_t k = 0; k < v.index.size(); ++k) val << (k ? "," : "") << v.index[k];
    val.precision(17);
    val << ") residual " << v.residual;
    rep.add(key.str(), val.str());
    if (i >= 50) {
      rep.add(prefix + ".violations_truncated", true);
      break;
    }
  }
}

/// Runs validation; returns false (and reports) when any stage fails.
bool validate_into(Report& rep, const InputFile& in, const RandersDatum& datum) {
  ValidationReport va = validate_algebra(datum.space.algebra.C, in.tol);
  add_violations(rep, "validation.algebra", va);
  ValidationReport vs = validate_reductive(datum.space, in.tol);
  add_violations(rep, "validation.reductive", vs);
  ValidationReport vu = validate_randers_vector(datum, in.tol);
  add_violations(rep, "validation.randers_vector", vu);
  bool ok = va.passed && vs.passed && vu.passed;
  rep.add("validation.passed", ok);
  return ok;
}

void add_criteria(Report& rep, const CriteriaReport& cr) {
  rep.add("criteria.qric1.holds", cr.qric1.holds);
  rep.add("criteria.qric1.residual", cr.qric1.residual);
  rep.add("criteria.qric1.witness", "(" + std::to_string(cr.qric1.witness[0]) + "," +
                                        std::to_string(cr.qric1.witness[1]) + ")");
  rep.add("criteria.qric2.holds", cr.qric2.holds);
  rep.add("criteria.qric2.residual", cr.qric2.residual);
  rep.add("criteria.qric2.witness", "(" + std::to_string(cr.qric2.witness[0]) + "," +
                                        std::to_string(cr.qric2.witness[1]) + ")");
  rep.add("criteria.berwald", cr.berwald);
  rep.add("criteria.ricci_quadratic", cr.ricci_quadratic);
  rep.add("criteria.parallel_form", cr.parallel_form);
  rep.add("criteria.parallel_residual", cr.parallel_residual);
  rep.add("criteria.c_tilde_origin", cr.c_tilde_origin);
  rep.add("criteria.S_norm", cr.S_norm);
  rep.add("criteria.equivalence", cr.berwald == cr.ricci_quadratic);
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
};

int finish(Report& rep, const Timer& timer, int code) {
  rep.add("timing.total_ms", timer.ms());
  std::cout << rep.serialize();
  return code;
}

int cmd_check(const std::string& path, double tol_override) {
  Timer timer;
  Report rep;
  rep.add("command", "check");
  try {
    InputFile in = parse_input_file(path);
    if (tol_override > 0) in.tol = tol_override;
    RandersDatum datum = in.to_datum();
    echo_input(rep, path, in);
    if (!validate_into(rep, in, datum)) return finish(rep, timer, kExitValidation);
    CriteriaReport cr = equivalence_check(datum, in.tol);
    add_criteria(rep, cr);
    return finish(rep, timer, kExitOk);
  } catch (const ParseError& e) {
    rep.add("error.parse", e.what());
    return finish(rep, timer, kExitValidation);
  } catch (const std::logic_error& e) {
    rep.add("error.consistency", e.what());
    return finish(rep, timer, kExitConsistency);
  } catch (const std::exception& e) {
    rep.add("error", e.what());
    return finish(rep, timer, kExitValidation);
  }
}

int cmd_oracle(const std::string& path, int samples, double step, double threshold,
               double tol_override) {
  Timer timer;
  Report rep;
  rep.add("command", "oracle");
  try {
    InputFile in = parse_input_file(path);
    if (tol_override > 0) in.tol = tol_override;
    RandersDatum datum = in.to_datum();
    echo_input(rep, path, in);
    if (!validate_into(rep, in, datum)) return finish(rep, timer, kExitValidation);

    CriteriaReport cr = equivalence_check(datum, in.tol);
    add_criteria(rep, cr);

    RandersDatum al = align_basis(datum);
    MetricField field = make_metric_field(al, in.chart_radius);
    DerivativeEngine eng;
    eng.h_inner = step;
    auto pairs = defect_samples(al.space.n(), samples);
    VectorXd origin = VectorXd::Zero(al.space.n());
    double bd = homrand::berwald_defect(field, origin, pairs, eng);
    double rd = homrand::ricci_defect(field, origin, pairs, eng);
    DefectVerdict bv = classify_defect(bd, 1e-6, threshold);
    DefectVerdict rv = classify_defect(rd, 1e-6, threshold);
    rep.add("oracle.samples", static_cast<int>(pairs.size()));
    rep.add("oracle.step", step);
    rep.add("oracle.threshold", threshold);
    rep.add("oracle.berwald_defect", bd);
    rep.add("oracle.berwald_verdict", to_string(bv));
    rep.add("oracle.ricci_defect", rd);
    rep.add("oracle.ricci_verdict", to_string(rv));
    bool agree = (bv == (cr.berwald ? DefectVerdict::quadratic : DefectVerdict::non_quadratic)) &&
                 (rv == (cr.ricci_quadratic ? DefectVerdict::quadratic : DefectVerdict::non_quadratic));
    rep.add("oracle.agreement", agree);
    return finish(rep, timer, agree ? kExitOk : kExitConsistency);
  } catch (const ParseError& e) {
    rep.add("error.parse", e.what());
    return finish(rep, timer, kExitValidation);
  } catch (const std::logic_error& e) {
    rep.add("error.consistency", e.what());
    return finish(rep, timer, kExitConsistency);
  } catch (const std::exception& e) {
    rep.add("error", e.what());
    return finish(rep, timer, kExitValidation);
  }
}

int cmd_sweep(unsigned seed, int count, bool with_oracle) {
  Timer timer;
  Report rep;
  rep.add("command", "sweep");
  rep.add("sweep.seed", static_cast<int>(seed));
  rep.add("sweep.count", count);
  rep.add("sweep.oracle", with_oracle);
  try {
    SweepResult result = run_sweep(seed, count, with_oracle);
    for (const auto& sc : result.cases) {
      std::ostringstream key, val;
      key << "case." << sc.entry << "." << sc.index;
      val << "berwald=" << sc.berwald << " ricci_quadratic=" << sc.ricci_quadratic
          << " parallel=" << sc.parallel_form << " expected=" << sc.expected
          << " agree=" << sc.agree;
      if (with_oracle) {
        val.precision(17);
        val << " berwald_defect=" << sc.berwald_defect << " ricci_defect=" << sc.ricci_defect
            << " oracle_agree=" << sc.oracle_agree;
      }
      val << " u=" << format_vector(sc.u);
      rep.add(key.str(), val.str());
    }
    rep.add("sweep.all_agree", result.all_agree);
    return finish(rep, timer, result.all_agree ? kExitOk : kExitConsistency);
  } catch (const std::logic_error& e) {
    rep.add("error.consistency", e.what());
    return finish(rep, timer, kExitConsistency);
  }
}

int cmd_catalog(const std::string& export_name) {
  if (!export_name.empty()) {
    const CatalogEntry* found = nullptr;
    for (const auto& entry : catalog_entries())
      if (entry.name == export_name) found = &entry;
    if (!found) {
      std::cerr << "catalog: no entry named '" << export_name << "'\n";
      return kExitValidation;
    }
    const CatalogEntry& e = *found;
    auto us = random_admissible_u(e, 1, 1);
    VectorXd u = us.empty() ? VectorXd::Zero(e.space.n()) : us[0];
    std::cout << "# catalog entry: " << e.name << " (" << e.description << ")\n"
              << format_input(e.space, u);
    return kExitOk;
  }
  Timer timer;
  Report rep;
  rep.add("command", "catalog");
  for (const auto& e : catalog_entries()) {
    rep.add("entry." + e.name,
            e.description + " [dim_g " + std::to_string(e.space.m()) + ", dim_m " +
                std::to_string(e.space.n()) + "]");
  }
  return finish(rep, timer, kExitOk);
}

int cmd_chart(const std::string& path, const std::string& point) {
  Timer timer;
  Report rep;
  rep.add("command", "chart");
  try {
    InputFile in = parse_input_file(path);
    RandersDatum datum = in.to_datum();
    echo_input(rep, path, in);
    if (!validate_into(rep, in, datum)) return finish(rep, timer, kExitValidation);

    RandersDatum al = align_basis(datum);
    VectorXd x = VectorXd::Zero(al.space.n());
    std::istringstream ss(point);
    std::string tok;
    int i = 0;
    while (std::getline(ss, tok, ',')) {
      if (i >= x.size()) throw std::runtime_error("--point: too many components");
      x[i++] = std::stod(tok);
    }
    if (i != x.size()) throw std::runtime_error("--point: expected dim_m components");
    auto [a, b] = metric_at(al, x, in.chart_radius);
    rep.add("chart.x", format_vector(x));
    for (int r = 0; r < a.rows(); ++r) rep.add("chart.a.row" + std::to_string(r), format_vector(a.row(r)));
    rep.add("chart.b", format_vector(b));
    return finish(rep, timer, kExitOk);
  } catch (const ParseError& e) {
    rep.add("error.parse", e.what());
    return finish(rep, timer, kExitValidation);
  } catch (const std::exception& e) {
    rep.add("error", e.what());
    return finish(rep, timer, kExitValidation);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify homogeneous Randers spaces as Berwald / Ricci-quadratic "
               "from Lie-algebra data, with an independent numeric curvature oracle"};
  app.require_subcommand(1);

  std::string path, point, export_name;
  double tol = -1.0, step = 1e-4, threshold = 1e-4;
  int samples = 40, count = 25;
  unsigned seed = 7;
  bool with_oracle = false;

  auto* check = app.add_subcommand("check", "Validate an input file and run the algebraic classification");
  check->add_option("file", path, "input file")->required();
  check->add_option("--tol", tol, "classification tolerance (default from file, else 1e-9)");

  auto* oracle = app.add_subcommand("oracle", "Numeric defect classification plus agreement check");
  oracle->add_option("file", path, "input file")->required();
  oracle->add_option("--samples", samples, "number of random sample pairs")->check(CLI::PositiveNumber);
  oracle->add_option("--step", step, "finite-difference step")->check(CLI::PositiveNumber);
  oracle->add_option("--threshold", threshold, "non-quadraticity threshold")->check(CLI::PositiveNumber);
  oracle->add_option("--tol", tol, "classification tolerance");

  auto* sweep = app.add_subcommand("sweep", "Catalog x random-u equivalence sweep");
  sweep->add_option("--seed", seed, "random seed");
  sweep->add_option("--count", count, "random u per catalog entry");
  sweep->add_flag("--oracle", with_oracle, "add numeric verification per case");

  auto* catalog = app.add_subcommand("catalog", "List built-in spaces");
  catalog->add_option("--export", export_name, "print the named entry in the input-file format");

  auto* chart = app.add_subcommand("chart", "Print a(x), b(x) at a chart point");
  chart->add_option("file", path, "input file")->required();
  chart->add_option("--point", point, "comma-separated coordinates")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // help text, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (check->parsed()) return cmd_check(path, tol);
  if (oracle->parsed()) return cmd_oracle(path, samples, step, threshold, tol);
  if (sweep->parsed()) return cmd_sweep(seed, count, with_oracle);
  if (catalog->parsed()) return cmd_catalog(export_name);
  if (chart->parsed()) return cmd_chart(path, point);
  return kExitUsage;
}
