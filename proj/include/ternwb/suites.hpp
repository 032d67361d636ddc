#pragma once

#include <string>
#include <vector>

#include "ternwb/report.hpp"
#include "ternwb/spectral.hpp"

namespace ternwb::cli {

// Exact-arithmetic suites; each record is an identity checked over Q(zeta12).
std::vector<CheckRecord> suite_algebra(const RunConfig& cfg);
std::vector<CheckRecord> suite_clifford(const RunConfig& cfg);
std::vector<CheckRecord> suite_forms(const RunConfig& cfg);
std::vector<CheckRecord> suite_heisenberg(const RunConfig& cfg);

// Floating-point suite: spectra, series solutions, quantization.
std::vector<CheckRecord> suite_spectral(const RunConfig& cfg);

// Runs the named suites (honoring cfg.jobs) and returns the records sorted
// by (suite, check_id) regardless of execution order.
std::vector<CheckRecord> run_suites(const std::vector<std::string>& names,
                                    const RunConfig& cfg);

// CSV exports.  Columns are fixed: see each builder.
std::string dimension_census_csv(const std::vector<int>& n_values);  // variant,N,degree,dimension
std::string spectrum_csv(const spectral::Spectrum& sp);              // n,eigenvalue,error_estimate,M
std::string quantization_csv(
    const std::vector<spectral::QuantizationResult>& rows);          // n,E_n,action,convention

// JSON table of the series-vs-hypergeometric parameter comparison.
std::string series_match_json();

}  // namespace ternwb::cli
