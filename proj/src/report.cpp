#include "ternwb/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <stdexcept>

#include <json.hpp>

namespace ternwb::cli {

std::string format_double(double v) {
  char buf[40];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw std::runtime_error("format_double: to_chars failed");
  return std::string(buf, ptr);
}

void sort_records(std::vector<CheckRecord>& recs) {
  std::stable_sort(recs.begin(), recs.end(),
                   [](const CheckRecord& a, const CheckRecord& b) {
                     if (a.suite != b.suite) return a.suite < b.suite;
                     return a.check_id < b.check_id;
                   });
}

bool has_failure(const std::vector<CheckRecord>& recs) {
  return std::any_of(recs.begin(), recs.end(),
                     [](const CheckRecord& r) { return r.status == "fail"; });
}

std::string records_to_json(const std::vector<CheckRecord>& recs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : recs) {
    nlohmann::ordered_json item;
    item["suite"] = r.suite;
    item["check_id"] = r.check_id;
    item["paper_ref"] = r.paper_ref;
    item["status"] = r.status;
    item["lhs"] = r.lhs;
    item["rhs"] = r.rhs;
    if (r.residual) item["residual"] = *r.residual;
    arr.push_back(std::move(item));
  }
  return arr.dump(2) + "\n";
}

std::string summary_markdown(const std::vector<CheckRecord>& recs,
                             const RunConfig& cfg) {
  std::map<std::string, std::array<int, 3>> by_suite;  // pass, fail, disc
  for (const auto& r : recs) {
    auto& c = by_suite[r.suite];
    if (r.status == "pass") ++c[0];
    else if (r.status == "fail") ++c[1];
    else ++c[2];
  }
  int pass = 0, fail = 0, disc = 0;
  for (const auto& [_, c] : by_suite) {
    pass += c[0];
    fail += c[1];
    disc += c[2];
  }

  std::string md;
  md += "# Verification summary\n\n";
  md += "Config: N = {";
  for (size_t i = 0; i < cfg.n_values.size(); ++i) {
    if (i) md += ",";
    md += std::to_string(cfg.n_values[i]);
  }
  md += "}, M = " + std::to_string(cfg.spectral_m) +
        ", seed = " + std::to_string(cfg.seed) +
        ", convention = " + cfg.convention + "\n\n";
  md += "Totals: " + std::to_string(recs.size()) + " checks, " +
        std::to_string(pass) + " pass, " + std::to_string(fail) + " fail, " +
        std::to_string(disc) + " discrepancy_documented\n\n";
  md += "| suite | pass | fail | discrepancy_documented |\n";
  md += "|---|---|---|---|\n";
  for (const auto& [name, c] : by_suite) {
    md += "| " + name + " | " + std::to_string(c[0]) + " | " +
          std::to_string(c[1]) + " | " + std::to_string(c[2]) + " |\n";
  }
  md += "\n";
  md += "References resolve to anchors in docs/identities.md.\n";

  std::string current;
  for (const auto& r : recs) {
    if (r.suite != current) {
      current = r.suite;
      md += "\n## " + current + "\n\n";
      md += "| check | status | reference | residual |\n";
      md += "|---|---|---|---|\n";
    }
    md += "| " + r.check_id + " | " + r.status + " | " + r.paper_ref + " | " +
          (r.residual ? format_double(*r.residual) : std::string("")) + " |\n";
  }
  return md;
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace ternwb::cli
