#include "cbd/cli.hpp"

#include <fstream>

#include <CLI11.hpp>

#include "cbd/analysis.hpp"
#include "cbd/io.hpp"

namespace cbd {

namespace {

int exit_code_for(const Error& error) {
  switch (error.code()) {
    case ErrorCode::TooLarge:
    case ErrorCode::NotApplicable:
      return kExitNotApplicable;
    default:
      return kExitInputError;
  }
}

AnalysisMethod parse_method(const std::string& name) {
  if (name == "lp") return AnalysisMethod::Lp;
  if (name == "cyclic") return AnalysisMethod::Cyclic;
  return AnalysisMethod::Auto;
}

int cmd_analyze(const std::string& path, const std::string& method, bool json, int cap_bits,
                std::ostream& out, std::ostream& err) {
  System system = load_system(path);
  AnalysisOutput output =
      analyze_system(system, parse_method(method), std::uint64_t{1} << cap_bits);
  out << (json ? render_json(system, output) : render_text(system, output));
  if (!output.methods_agree) {
    err << "error: closed form and lp disagree on cntx ("
        << format_rational(output.cyclic->cntx) << " vs " << format_rational(output.lp->cntx)
        << "); this is a defect\n";
    return kExitDisagreement;
  }
  return kExitOk;
}

int cmd_estimate(const std::string& trials_path, const std::string& out_path, std::ostream& out) {
  EstimationReport report = estimate_from_trials(load_trials_csv(trials_path));
  std::ofstream file(out_path, std::ios::binary);
  if (!file) fail(ErrorCode::IoError, "cannot write '" + out_path + "'");
  file << serialize_system(report.system);
  for (const auto& [context, count] : report.counts) {
    out << context.name << ": " << count << " trial(s)\n";
  }
  for (const std::string& warning : report.warnings) {
    out << "warning: " << warning << "\n";
  }
  out << "wrote " << out_path << "\n";
  return kExitOk;
}

int cmd_consistency(const std::string& path, bool json, std::ostream& out) {
  System system = load_system(path);
  ConsistencyReport report = is_consistently_connected(system);
  out << (json ? render_consistency_json(system, report)
               : render_consistency_text(system, report));
  return report.consistent ? kExitOk : kExitInconsistent;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Contextuality-by-Default analysis toolkit"};
  app.name("cbd");
  app.require_subcommand(1);

  std::string analyze_path;
  std::string method = "auto";
  bool analyze_json = false;
  int cap_bits = 20;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Decide contextuality and compute the measure cntx for a system file");
  analyze->add_option("path", analyze_path, "system file (JSON)")->required();
  analyze->add_option("--method", method, "analysis route")
      ->check(CLI::IsMember({"auto", "lp", "cyclic"}))
      ->capture_default_str();
  analyze->add_flag("--json", analyze_json, "machine-readable output");
  analyze->add_option("--cap-bits", cap_bits, "assignment-space cap as a power of two")
      ->check(CLI::Range(1, 62))
      ->capture_default_str();

  std::string trials_path;
  std::string out_path;
  CLI::App* estimate = app.add_subcommand(
      "estimate", "Estimate a system from a long-format trial CSV and write it as a system file");
  estimate->add_option("trials", trials_path, "trial CSV")->required();
  estimate->add_option("--out", out_path, "output system file")->required();

  std::string consistency_path;
  bool consistency_json_flag = false;
  CLI::App* consistency = app.add_subcommand(
      "consistency", "Report per-object marginal discrepancies across contexts");
  consistency->add_option("path", consistency_path, "system file (JSON)")->required();
  consistency->add_flag("--json", consistency_json_flag, "machine-readable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (analyze->parsed()) {
      return cmd_analyze(analyze_path, method, analyze_json, cap_bits, out, err);
    }
    if (estimate->parsed()) {
      return cmd_estimate(trials_path, out_path, out);
    }
    return cmd_consistency(consistency_path, consistency_json_flag, out);
  } catch (const Error& e) {
    err << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

}  // namespace cbd
