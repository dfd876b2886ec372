#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cpring/analysis.hpp"
#include "cpring/closed_forms.hpp"

namespace cpring {

// One sweep: every (theta, h) pair of the cartesian grid, in grid order
// (theta outer, h inner). Angles at this boundary are degrees; the core
// works in radians.
struct SweepRequest {
    BodyKind body = BodyKind::Ring;
    Polarization pol = Polarization::Axial;
    std::vector<double> theta_deg = {0.0};
    double h_min = 0.0;
    double h_max = 0.0;
    int h_count = 1;  // 1 collapses the range to h_min
    std::optional<double> b_hat;
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;

    std::vector<double> heights() const;
    void validate() const;  // throws std::invalid_argument
};

// One output row. Unset optionals print as empty CSV fields and are omitted
// from JSON. Inputs are echoed exactly as requested.
struct ResultRecord {
    double h_hat = 0.0;
    double theta_deg = 0.0;
    std::optional<double> b_hat;
    std::optional<double> energy_reduced;
    std::optional<double> force_reduced;
    std::optional<double> e_iso;
    std::optional<double> e_aniso;
    std::vector<Flag> flags;
    std::optional<double> error_estimate;  // JSON only; CSV has fixed columns
};

inline constexpr const char* kCsvHeader =
    "h_hat,theta_deg,b_hat,energy_reduced,force_reduced,e_iso,e_aniso,flags";

// 17 significant digits, deterministic formatting.
std::string format_double(double v);

void write_csv(std::ostream& os, const std::vector<ResultRecord>& records);

struct ReportMeta {
    std::string command;
    std::string energy_scale;
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    std::vector<std::string> notes;
};

// Serialized JSON object: {"inputs": ..., "results": [...], "flags": [...],
// "meta": {...}}. `inputs_json` must be a serialized JSON object; results
// carry per-record fields including error estimates where quadrature was
// used. Validates against share/report.schema.json.
std::string json_report(const std::string& inputs_json,
                        const std::vector<ResultRecord>& records,
                        const std::vector<Flag>& report_flags,
                        const ReportMeta& meta);

}  // namespace cpring
