#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wmg/estimators.hpp"
#include "wmg/geodesics.hpp"
#include "wmg/harness.hpp"

namespace wmg {

using json = nlohmann::ordered_json;

json json_of(const Point& p);
json json_of(const GeodesicResult& r);
json json_of(const ConditionReport& r);
json json_of(const NormEstimate& e);
json json_of(const TheoremReport& r);
json json_of(const QProfile& p);

/// One vertex per row, coordinates comma-separated.
std::string curve_csv(const Curve& c);

void write_text_file(const std::string& path, const std::string& text);

struct VerifySummaryRow {
    std::string theorem_id;
    double left = 0.0;
    double right = 0.0;
    std::optional<double> slack;
    std::string status;
};

struct VerifyOutcome {
    int exit_code = 0;  // 0 all pass/hypothesis-unmet, 1 some fail
    std::string json_path;
    std::string summary_path;
    std::vector<VerifySummaryRow> rows;
};

/// Full `verify` run for one config: sample, run the enabled theorem checks
/// concurrently, write <stem>.json and summary.csv under out_dir.
/// Config errors throw invalid_input_error (CLI exit 2).
VerifyOutcome run_verify(const std::string& config_path, const std::string& out_dir);

} // namespace wmg
