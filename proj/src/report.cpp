#include "cpring/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace cpring {

std::vector<double> SweepRequest::heights() const {
    std::vector<double> hs;
    hs.reserve(static_cast<std::size_t>(h_count));
    if (h_count == 1) {
        hs.push_back(h_min);
        return hs;
    }
    const double span = h_max - h_min;
    for (int i = 0; i < h_count; ++i)
        hs.push_back(h_min + span * static_cast<double>(i) / (h_count - 1));
    return hs;
}

void SweepRequest::validate() const {
    if (h_count < 1) throw std::invalid_argument("sweep: h count must be >= 1");
    if (h_count > 1 && !(h_min < h_max))
        throw std::invalid_argument("sweep: h range needs min < max");
    if (!std::isfinite(h_min) || !std::isfinite(h_max))
        throw std::invalid_argument("sweep: h range must be finite");
    if (theta_deg.empty()) throw std::invalid_argument("sweep: at least one theta required");
    for (double t : theta_deg)
        if (!std::isfinite(t)) throw std::invalid_argument("sweep: theta must be finite");
    if (body == BodyKind::Annulus) {
        if (!b_hat) throw std::invalid_argument("sweep: annulus needs an outer radius");
        if (!(*b_hat >= 1.0)) throw std::invalid_argument("sweep: outer radius must be >= 1");
    }
    if (pol == Polarization::Tensor)
        throw std::invalid_argument("sweep: constant-tensor pattern has no sweep form");
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
        throw std::invalid_argument("sweep: tolerances must be positive");
}

std::string format_double(double v) {
    if (v == 0.0) return "0";  // merge the two zero signs
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string flags_field(const std::vector<Flag>& flags) {
    std::string out;
    for (const Flag f : flags) {
        if (!out.empty()) out += ';';
        out += flag_name(f);
    }
    return out;
}

void append_field(std::string& line, const std::optional<double>& v) {
    line += ',';
    if (v) line += format_double(*v);
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<ResultRecord>& records) {
    os << kCsvHeader << '\n';
    for (const auto& r : records) {
        std::string line = format_double(r.h_hat);
        line += ',';
        line += format_double(r.theta_deg);
        append_field(line, r.b_hat);
        append_field(line, r.energy_reduced);
        append_field(line, r.force_reduced);
        append_field(line, r.e_iso);
        append_field(line, r.e_aniso);
        line += ',';
        line += flags_field(r.flags);
        os << line << '\n';
    }
}

std::string json_report(const std::string& inputs_json,
                        const std::vector<ResultRecord>& records,
                        const std::vector<Flag>& report_flags, const ReportMeta& meta) {
    nlohmann::json doc;
    doc["inputs"] = nlohmann::json::parse(inputs_json);

    nlohmann::json results = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json row;
        row["h_hat"] = r.h_hat;
        row["theta_deg"] = r.theta_deg;
        if (r.b_hat) row["b_hat"] = *r.b_hat;
        if (r.energy_reduced) row["energy_reduced"] = *r.energy_reduced;
        if (r.force_reduced) row["force_reduced"] = *r.force_reduced;
        if (r.e_iso) row["e_iso"] = *r.e_iso;
        if (r.e_aniso) row["e_aniso"] = *r.e_aniso;
        if (r.error_estimate) row["error_estimate"] = *r.error_estimate;
        nlohmann::json row_flags = nlohmann::json::array();
        for (const Flag f : r.flags) row_flags.push_back(flag_name(f));
        row["flags"] = row_flags;
        results.push_back(std::move(row));
    }
    doc["results"] = std::move(results);

    nlohmann::json top_flags = nlohmann::json::array();
    for (const Flag f : report_flags) top_flags.push_back(flag_name(f));
    doc["flags"] = std::move(top_flags);

    doc["meta"] = {{"version", "1.0.0"},
                   {"command", meta.command},
                   {"energy_scale", meta.energy_scale},
                   {"rel_tol", meta.rel_tol},
                   {"abs_tol", meta.abs_tol},
                   {"notes", meta.notes}};
    return doc.dump(2) + "\n";
}

}  // namespace cpring
