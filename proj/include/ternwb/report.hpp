#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace ternwb::cli {

// One verified statement.  paper_ref names an anchor in docs/identities.md;
// status is "pass", "fail", or "discrepancy_documented" (the source text
// prints something the oracle contradicts, and the gap is catalogued).
struct CheckRecord {
  std::string suite;
  std::string check_id;
  std::string paper_ref;
  std::string status;
  std::string lhs;
  std::string rhs;
  std::optional<double> residual;
};

struct RunConfig {
  std::vector<int> n_values{2, 3, 4};  // generator counts for algebra suites
  int spectral_m = 400;                // oscillator-basis truncation
  std::uint64_t seed = 1729;
  std::string convention = "standard_2pi_half";
  std::string out_dir = ".";
  int jobs = 1;
  double tol_eigen = 1e-8;
  double tol_ode = 1e-10;
  double tol_quad = 1e-10;
};

// Shortest decimal form that round-trips; used everywhere a double is
// rendered so that identical runs serialize byte-identically.
std::string format_double(double v);

void sort_records(std::vector<CheckRecord>& recs);
bool has_failure(const std::vector<CheckRecord>& recs);

// Top-level JSON array, records in (suite, check_id) order, two-space indent.
std::string records_to_json(const std::vector<CheckRecord>& recs);

std::string summary_markdown(const std::vector<CheckRecord>& recs,
                             const RunConfig& cfg);

void write_text_file(const std::filesystem::path& path,
                     const std::string& content);

}  // namespace ternwb::cli
