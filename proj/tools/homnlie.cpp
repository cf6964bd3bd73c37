// Command-line front end: validation, trace solving, induction, series,
// cohomology, derivations and central extensions over algebra documents.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "homnlie/docio.hpp"
#include "homnlie/report.hpp"

using namespace homnlie;

namespace {

struct Options {
  std::string format = "text";
};

void print_report(const ReportJson& j, const Options& opt) {
  if (opt.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << render_text(j);
}

void write_out(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + out_path);
  out << text;
}

int cmd_validate(const std::string& file, const Options& opt) {
  HomNLieAlgebra alg = parse_algebra_file(file);
  ReportJson j = validation_report(alg);
  print_report(j, opt);
  return j["valid"].get<bool>() ? 0 : 1;
}

int cmd_traces(const std::string& file, bool hom_compatible, const Options& opt) {
  HomNLieAlgebra alg = parse_algebra_file(file);
  require_valid(alg);
  print_report(traces_report(alg, hom_compatible), opt);
  return 0;
}

int cmd_induce(const std::string& file, const std::string& trace_file, const std::string& out,
               const Options& opt) {
  HomNLieAlgebra alg = parse_algebra_file(file);
  TraceForm tau = parse_trace_file(trace_file, alg.dim());
  auto induced = induce_auto(alg, tau, std::nullopt);
  ReportJson j;
  j["theorem"] = induced.licensed_by == InductionTheorem::multiplicative
                     ? "multiplicative_trace_compatible"
                     : "general_conditions";
  j["document"] = out.empty() ? "(stdout)" : out;
  write_out(emit_algebra(induced.algebra), out);
  if (!out.empty()) print_report(j, opt);
  return 0;
}

int cmd_series(const std::string& file, const std::string& type, int max_steps,
               const Options& opt) {
  HomNLieAlgebra alg = parse_algebra_file(file);
  Subspace whole = Subspace::full(alg.dim());
  SeriesReport rep = type == "derived" ? derived_series(alg, whole, max_steps)
                                       : central_series(alg, whole, max_steps);
  print_report(series_json(rep), opt);
  return 0;
}

int cmd_center(const std::string& file, const Options& opt) {
  HomNLieAlgebra alg = parse_algebra_file(file);
  require_valid(alg);
  print_report(subspace_json(center(alg)), opt);
  return 0;
}

int cmd_cohomology(const std::string& file, int degree, const std::string& coeffs,
                   const Options& opt) {
  if (degree != 2) throw CLI::ValidationError("--degree", "only degree 2 is solvable");
  HomNLieAlgebra alg = parse_algebra_file(file);
  print_report(cohomology_report(alg, coeffs == "adjoint"), opt);
  return 0;
}

int cmd_derivations(const std::string& file, int power, const Options& opt) {
  HomNLieAlgebra alg = parse_algebra_file(file);
  print_report(derivations_report(alg, power), opt);
  return 0;
}

int cmd_extend(const std::string& file, const std::string& cocycle_file,
               const std::string& lambda_file, const std::string& out, const Options& opt) {
  HomNLieAlgebra alg = parse_algebra_file(file);
  ScalarTensor omega = parse_scalar_cochain_file(cocycle_file, alg.arity(), alg.dim());
  RVector lambda(alg.dim() + 1);
  if (!lambda_file.empty()) lambda = parse_lambda_file(lambda_file, alg.dim() + 1);
  CentralExtension ext = central_extension(alg, omega, lambda);
  ReportJson j;
  j["extended_dimension"] = ext.extended.dim();
  j["alpha_c_multiplicative"] = ext.alpha_c_multiplicative;
  j["hom_nambu_defects"] = hom_nambu_defect(ext.extended).size();
  j["document"] = out.empty() ? "(stdout)" : out;
  write_out(emit_algebra(ext.extended), out);
  if (!out.empty()) print_report(j, opt);
  return 0;
}

int cmd_report(const std::string& file, const std::string& trace_file, const Options& opt) {
  HomNLieAlgebra alg = parse_algebra_file(file);
  require_valid(alg);
  std::optional<TraceForm> tau;
  if (!trace_file.empty()) tau = parse_trace_file(trace_file, alg.dim());
  print_report(full_report(alg, tau), opt);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic calculator for n-Hom-Lie algebras: induction by traces, "
               "solvability, cohomology and central extensions"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string file, trace_file, out_file, cocycle_file, lambda_file;
  std::string series_type = "derived", coeffs = "scalar";
  int max_steps = -1, degree = 2, power = 0;
  bool hom_compatible = false;

  auto* validate = app.add_subcommand("validate", "Check skewness, Hom-Nambu and multiplicativity");
  validate->add_option("file", file)->required();

  auto* traces = app.add_subcommand("traces", "Print a basis of the trace space");
  traces->add_option("file", file)->required();
  traces->add_flag("--hom-compatible", hom_compatible, "Also require tau o alpha = tau");

  auto* induce = app.add_subcommand("induce", "Emit the induced (n+1)-ary algebra");
  induce->add_option("file", file)->required();
  induce->add_option("--trace", trace_file)->required();
  induce->add_option("--out", out_file);

  auto* series = app.add_subcommand("series", "Derived or central descending series");
  series->add_option("file", file)->required();
  series->add_option("--type", series_type)->required()->check(CLI::IsMember({"derived", "central"}));
  series->add_option("--max-steps", max_steps);

  auto* centerc = app.add_subcommand("center", "Print a basis of the center");
  centerc->add_option("file", file)->required();

  auto* cohomology = app.add_subcommand("cohomology", "Degree-2 cocycles, coboundaries, H^2");
  cohomology->add_option("file", file)->required();
  cohomology->add_option("--degree", degree)->required();
  cohomology->add_option("--coeffs", coeffs)->required()->check(CLI::IsMember({"scalar", "adjoint"}));

  auto* derivations = app.add_subcommand("derivations", "alpha^k-derivations and inner span");
  derivations->add_option("file", file)->required();
  derivations->add_option("--power", power)->required();

  auto* extend = app.add_subcommand("extend", "Build and verify a central extension");
  extend->add_option("file", file)->required();
  extend->add_option("--cocycle", cocycle_file)->required();
  extend->add_option("--lambda", lambda_file);
  extend->add_option("--out", out_file);

  auto* report = app.add_subcommand("report", "Full dossier, optionally against a trace");
  report->add_option("file", file)->required();
  report->add_option("--trace", trace_file);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(file, opt);
    if (traces->parsed()) return cmd_traces(file, hom_compatible, opt);
    if (induce->parsed()) return cmd_induce(file, trace_file, out_file, opt);
    if (series->parsed()) return cmd_series(file, series_type, max_steps, opt);
    if (centerc->parsed()) return cmd_center(file, opt);
    if (cohomology->parsed()) return cmd_cohomology(file, degree, coeffs, opt);
    if (derivations->parsed()) return cmd_derivations(file, power, opt);
    if (extend->parsed()) return cmd_extend(file, cocycle_file, lambda_file, out_file, opt);
    if (report->parsed()) return cmd_report(file, trace_file, opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.get_name() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
