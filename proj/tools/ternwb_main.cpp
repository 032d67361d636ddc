#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ternwb/report.hpp"
#include "ternwb/spectral.hpp"
#include "ternwb/suites.hpp"

namespace cli = ternwb::cli;
namespace spc = ternwb::spectral;

namespace {

void print_outcome(const std::vector<cli::CheckRecord>& recs) {
  int pass = 0, fail = 0, disc = 0;
  for (const auto& r : recs) {
    if (r.status == "pass")
      ++pass;
    else if (r.status == "fail")
      ++fail;
    else
      ++disc;
  }
  std::cout << recs.size() << " checks: " << pass << " pass, " << fail
            << " fail, " << disc << " discrepancy_documented\n";
  for (const auto& r : recs)
    if (r.status != "pass")
      std::cout << "  [" << r.status << "] " << r.suite << "/" << r.check_id
                << ": " << r.lhs << "\n";
}

void write_report_files(const std::vector<cli::CheckRecord>& recs,
                        const cli::RunConfig& cfg, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::path out(dir);
  cli::write_text_file(out / "report.json", cli::records_to_json(recs));
  cli::write_text_file(out / "summary.md", cli::summary_markdown(recs, cfg));
}

int run_verify(const std::string& suite, const cli::RunConfig& cfg,
               const std::string& out_dir) {
  std::vector<std::string> names;
  if (suite == "all")
    names = {"algebra", "clifford", "forms", "heisenberg"};
  else
    names = {suite};
  auto recs = cli::run_suites(names, cfg);
  write_report_files(recs, cfg, out_dir);
  print_outcome(recs);
  return cli::has_failure(recs) ? 1 : 0;
}

int run_spectrum(int M, bool harmonic, const std::string& out_dir) {
  spc::Spectrum sp;
  if (M < 64) {
    std::cerr << "warning: M = " << M
              << " is below the convergence floor (64); eigenvalues beyond "
                 "the first few are unconverged\n";
    sp = spc::operator_spectrum(harmonic ? spc::harmonic_op() : spc::sextic_op(),
                                M);
  } else {
    sp = harmonic ? spc::harmonic_spectrum(M) : spc::sextic_spectrum(M);
  }
  std::string csv = cli::spectrum_csv(sp);
  std::cout << csv;
  if (!out_dir.empty())
    cli::write_text_file(std::filesystem::path(out_dir) / "spectrum.csv", csv);
  return 0;
}

int run_series(int branch, int terms) {
  spc::SeriesSolution sol = spc::series_solution(branch, terms);
  spc::HypergeomMatch m = spc::match_series(sol);
  spc::EigenResidual er = spc::khat_eigen_residual(sol);
  nlohmann::ordered_json j;
  j["branch"] = branch;
  j["terms"] = terms;
  j["ode_residual"] = spc::series_ode_residual(sol);
  j["low_degrees_vanish"] = er.low_degrees_vanish;
  j["p_derived"] = ternwb::exactfield::to_string(m.p_derived);
  j["q_derived"] = ternwb::exactfield::to_string(m.q_derived);
  j["p_printed"] = ternwb::exactfield::to_string(m.p_printed);
  j["q_printed"] = ternwb::exactfield::to_string(m.q_printed);
  j["printed_matches"] = m.printed_matches;
  j["argument_minus_matches"] = m.minus_sign_matches;
  j["argument_plus_matches"] = m.plus_sign_matches;
  j["printed_first_gap"] = m.printed_residual;
  nlohmann::ordered_json lead = nlohmann::ordered_json::array();
  for (int k = 0; k < 6; ++k) {
    size_t deg = static_cast<size_t>(branch + 6 * k);
    if (deg >= sol.coeffs.size()) break;
    lead.push_back("x^" + std::to_string(deg) + ": " +
                   sol.coeffs[deg].to_string());
  }
  j["leading_coefficients"] = std::move(lead);
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_bohr_sommerfeld(int n_max, const std::string& convention,
                        const std::string& out_dir) {
  std::string internal =
      convention == "paper" ? "paper_nh" : "standard_2pi_half";
  auto rows = spc::energy_levels(n_max, internal, 1.0, 1.0, 1.0);
  std::string csv = cli::quantization_csv(rows);
  std::cout << csv;
  if (!out_dir.empty())
    cli::write_text_file(std::filesystem::path(out_dir) / "quantization.csv",
                         csv);
  return 0;
}

int run_report(const cli::RunConfig& cfg) {
  auto recs = cli::run_suites(
      {"algebra", "clifford", "forms", "heisenberg", "spectral"}, cfg);
  namespace fs = std::filesystem;
  fs::path out(cfg.out_dir);
  write_report_files(recs, cfg, cfg.out_dir);
  cli::write_text_file(out / "dimensions.csv",
                       cli::dimension_census_csv(cfg.n_values));
  cli::write_text_file(out / "spectrum.csv",
                       cli::spectrum_csv(spc::sextic_spectrum(cfg.spectral_m)));
  cli::write_text_file(
      out / "quantization.csv",
      cli::quantization_csv(spc::energy_levels(40, cfg.convention, 1.0, 1.0, 1.0)));
  cli::write_text_file(out / "series_match.json", cli::series_match_json());
  print_outcome(recs);
  std::cout << "report written to " << out.string() << "\n";
  return cli::has_failure(recs) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "ternwb: verification workbench for Z3-graded ternary algebras and the "
      "ternary oscillator"};
  app.require_subcommand(1);

  cli::RunConfig cfg;
  int n_single = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--N", n_single,
                    "restrict the generator-count census to a single N")
        ->check(CLI::Range(2, 4));
    sub->add_option("--seed", cfg.seed, "seed for the randomized property checks");
    sub->add_option("--jobs", cfg.jobs, "run suites concurrently")
        ->check(CLI::Range(1, 16));
  };

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify->add_option("suite", suite, "suite to run")
      ->required()
      ->check(CLI::IsMember(
          {"algebra", "clifford", "forms", "heisenberg", "spectral", "all"}));
  std::string verify_out = ".";
  verify->add_option("--out", verify_out, "output directory for the report");
  add_common(verify);

  // spectrum
  auto* spectrum = app.add_subcommand(
      "spectrum", "eigenvalues of the sextic oscillator with error estimates");
  int M = 400;
  bool harmonic = false;
  spectrum->add_option("--M", M, "basis size")->check(CLI::Range(8, 4000));
  spectrum->add_flag("--harmonic", harmonic,
                     "use the quadratic oscillator instead");
  std::string spectrum_out;
  spectrum->add_option("--out", spectrum_out, "also write spectrum.csv here");

  // series
  auto* series = app.add_subcommand(
      "series", "power-series eigenfunction of the third-order operator");
  int branch = 0, terms = 40;
  series->add_option("--branch", branch, "starting degree 0, 1 or 2")
      ->required()
      ->check(CLI::Range(0, 2));
  series->add_option("--terms", terms, "number of retained series terms")
      ->check(CLI::Range(4, 400));

  // bohr-sommerfeld
  auto* bs = app.add_subcommand(
      "bohr-sommerfeld", "semiclassical energy levels of the sextic oscillator");
  int n_max = 10;
  std::string convention = "standard";
  bs->add_option("--n-max", n_max, "highest quantum number")
      ->check(CLI::Range(1, 10000));
  bs->add_option("--convention", convention,
                 "quantization rule: nh on the action, or 2 pi h (n + 1/2)")
      ->check(CLI::IsMember({"paper", "standard"}));
  std::string bs_out;
  bs->add_option("--out", bs_out, "also write quantization.csv here");

  // report
  auto* report = app.add_subcommand(
      "report", "run every suite and write the full artifact bundle");
  report->add_option("--out", cfg.out_dir, "output directory")->required();
  report->add_option("--M", cfg.spectral_m, "basis size for the spectrum export")
      ->check(CLI::Range(64, 4000));
  add_common(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (n_single != 0) cfg.n_values = {n_single};

  try {
    if (*verify) return run_verify(suite, cfg, verify_out);
    if (*spectrum) return run_spectrum(M, harmonic, spectrum_out);
    if (*series) return run_series(branch, terms);
    if (*bs) return run_bohr_sommerfeld(n_max, convention, bs_out);
    if (*report) return run_report(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
