#include "cpring/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cpring/analysis.hpp"
#include "cpring/body_quadrature.hpp"
#include "cpring/closed_forms.hpp"
#include "cpring/figures.hpp"
#include "cpring/point_kernel.hpp"
#include "cpring/root_finding.hpp"

#ifndef CPRING_GOLDEN_DIR
#define CPRING_GOLDEN_DIR ""
#endif

namespace cpring {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

struct Ctx {
    const VerifyOptions& opts;
    double scaled(double tol) const { return tol * opts.tol_scale; }
    // Mutation canary: nudges one designated measurement of the named check
    // far enough to defeat every tolerance that check applies.
    double corrupt(const char* id, double v) const {
        if (opts.corrupt_check == id) return v + 0.05 * std::max(1.0, std::abs(v));
        return v;
    }
};

bool rounds_to(double v, long hundredths) { return std::lround(v * 100.0) == hundredths; }

// ---- C1: ring torsion-free heights --------------------------------------

CheckResult check_ring_torsion_free(const Ctx& cx) {
    CheckResult r{"C1", "ring torsion-free heights", false, true, "", 0.0};
    const auto tf = ring_torsion_free();
    const double h1 = cx.corrupt("C1", tf.h1);
    const double h2 = tf.h2.value();
    const BodyGeometry ring{BodyKind::Ring, 1.0, Polarization::Axial};
    const double a1 = decompose(ring, h1).e_aniso;
    const double a2 = decompose(ring, h2).e_aniso;
    const double tol_aniso = cx.scaled(1e-9);
    r.pass = rounds_to(h1, 48) && rounds_to(h2, 169) && std::abs(h1 - 0.477847) <= 1e-6 &&
             std::abs(h2 - 1.687206) <= 1e-6 && std::abs(a1) <= tol_aniso &&
             std::abs(a2) <= tol_aniso;
    r.detail = "h1=" + fmt(h1) + " h2=" + fmt(h2) +
               " (published 0.48, 1.69); |e_aniso| = " + fmt(std::abs(a1)) + ", " +
               fmt(std::abs(a2)) + " <= " + fmt(tol_aniso);
    return r;
}

// ---- C2: 90-degree repulsion boundary ------------------------------------

CheckResult check_perpendicular_boundary(const Ctx& cx) {
    CheckResult r{"C2", "90 deg repulsion boundary", false, true, "", 0.0};
    const auto rep = repulsion_windows(0.5 * kPi);
    if (rep.windows.size() != 1 || rep.windows[0].lo != 0.0) {
        r.detail = "expected exactly one center-anchored window";
        return r;
    }
    const double hi = cx.corrupt("C2", rep.windows[0].hi);
    const double target = std::sqrt(2.0 / 9.0);
    const double before = ring_force({hi - 1e-6, 0.5 * kPi});
    const double after = ring_force({hi + 1e-6, 0.5 * kPi});
    r.pass = std::abs(hi - target) <= cx.scaled(1e-9) && rounds_to(hi, 47) && before > 0.0 &&
             after < 0.0;
    r.detail = "boundary=" + fmt(hi) + " target sqrt(2/9)=" + fmt(target) +
               " (published 0.47); force sign +/- across it: " + fmt(before) + " / " +
               fmt(after);
    return r;
}

// ---- C3: critical angles --------------------------------------------------

CheckResult check_critical_angles(const Ctx& cx) {
    CheckResult r{"C3", "critical tilt angles", false, false, "", 0.0};
    const auto ang = critical_angles();
    const double lo = cx.corrupt("C3", ang.lo_deg);
    r.pass = std::abs(lo - 60.88) <= 0.01 && std::abs(ang.hi_deg - 119.12) <= 0.01 &&
             std::abs(ang.intermediate_deg - 13.27) <= 0.01;
    r.detail = "onset=" + fmt(lo) + " mirror=" + fmt(ang.hi_deg) +
               " detached-window limit=" + fmt(ang.intermediate_deg) +
               " vs published 60.88 / 119.12 / 13.27 (tol 0.01 deg)";
    return r;
}

// ---- C4: plate-limit torsion-free heights --------------------------------

CheckResult check_plate_torsion_free(const Ctx& cx) {
    CheckResult r{"C4", "plate torsion-free heights", false, false, "", 0.0};
    const auto tf = plate_torsion_free();
    const double h1 = cx.corrupt("C4", tf.h1);
    const double h2 = tf.h2.value();

    bool ok = std::abs(h1 - 0.60602) <= 1e-5 && std::abs(h2 - 3.43503) <= 1e-5;
    ok = ok && std::abs(h2 - 3.44) <= 0.005;

    // Continuity of the annulus root pair toward both limits.
    const auto near_ring = annulus_torsion_free(1.0 + 1e-6);
    const auto near_plate = annulus_torsion_free(1e6);
    ok = ok && std::abs(near_ring.h1 - 0.4778) <= 1e-3 &&
         std::abs(near_ring.h2.value() - 1.6872) <= 1e-3 &&
         std::abs(near_plate.h1 - h1) <= 1e-5 && std::abs(near_plate.h2.value() - h2) <= 1e-5;

    r.pass = ok;
    r.detail = "h1=" + fmt(h1) + " h2=" + fmt(h2) +
               "; h1 differs from the published 0.60 by " + fmt(std::abs(h1 - 0.60)) +
               " (> 0.005): paper-text-conflict, reported not failed; ring-limit continuity " +
               fmt(near_ring.h1) + ", " + fmt(near_ring.h2.value());
    return r;
}

// ---- C5: radial pattern through the quadrature route ----------------------

CheckResult check_radial_heights(const Ctx& cx) {
    CheckResult r{"C5", "radial-pattern torsion-free heights", false, false, "", 0.0};

    const BodyGeometry ring{BodyKind::Ring, 1.0, Polarization::Radial};
    const auto tf_ring = torsion_free_quadrature(ring, 5.0, 0.05, 1e-9);
    const double r1 = cx.corrupt("C5", tf_ring.h1);
    if (!tf_ring.h2) {
        r.detail = "ring radial: second height not found in scan";
        return r;
    }
    const double r2 = tf_ring.h2.value();

    const BodyGeometry plate{BodyKind::Plate, 1.0, Polarization::Radial};
    const auto tf_plate = torsion_free_quadrature(plate, 50.0, 0.05, 1e-8);
    const double p1 = tf_plate.h1;
    const bool p2_absent = !tf_plate.h2.has_value();

    // Outer height for finite outer radii, on grids proportional to the
    // radius; it must keep growing as the body widens.
    const auto outer_height = [](double b_hat) {
        const BodyGeometry geom{BodyKind::Annulus, b_hat, Polarization::Radial};
        const auto f = [&](double h) {
            return decompose_quadrature(geom, h, 1e-6, 1e-30).decomposition.e_aniso;
        };
        const auto brackets = scan_brackets(f, 0.5 * b_hat, 3.5 * b_hat, 0.05 * b_hat);
        if (brackets.empty())
            throw NonConvergenceError("radial outer height: no sign change in scaled scan");
        return bisect(f, brackets.back().first, brackets.back().second, 1e-3 * b_hat);
    };
    const double z1 = outer_height(10.0);
    const double z2 = outer_height(100.0);
    const double z3 = outer_height(1000.0);

    r.pass = std::abs(r1 - 0.36) <= 0.01 && std::abs(r2 - 3.45) <= 0.01 &&
             std::abs(p1 - 0.44) <= 0.01 && p2_absent && z1 < z2 && z2 < z3 && z2 > 50.0 &&
             z3 > 500.0;
    r.detail = "ring " + fmt(r1) + ", " + fmt(r2) + " (published 0.36, 3.45); plate first " +
               fmt(p1) + " (published 0.44), second absent for h <= 50: " +
               (p2_absent ? "yes" : "no") + "; outer height at widths 10/100/1000: " + fmt(z1) +
               " / " + fmt(z2) + " / " + fmt(z3);
    return r;
}

// ---- C6: critical outer radii ---------------------------------------------

CheckResult check_critical_radii(const Ctx& cx) {
    CheckResult r{"C6", "critical outer radii", false, false, "", 0.0};
    const struct {
        double deg;
        double expect;
    } rows[] = {{0.0, 1.6505}, {6.0, 1.559}, {9.0, 1.4379}, {12.0, 1.2323}};

    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string measured;
    bool first = true;
    for (const auto& row : rows) {
        double b = critical_outer_radius(row.deg * kPi / 180.0);
        if (first) b = cx.corrupt("C6", b);
        first = false;
        ok = ok && std::abs(b - row.expect) <= 1e-3;
        if (!measured.empty()) measured += ", ";
        measured += fmt(b);
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ok = ok && elapsed <= 10.0;

    r.pass = ok;
    r.detail = "b* at 0/6/9/12 deg = " + measured +
               " vs published 1.6505, 1.559, 1.4379, 1.2323 (tol 1e-3); search time " +
               fmt(elapsed) + " s (limit 10)";
    return r;
}

// ---- C7: closed forms against the quadrature oracle -----------------------

CheckResult check_oracle_equivalence(const Ctx& cx) {
    CheckResult r{"C7", "closed form vs quadrature", false, true, "", 0.0};
    const double tol = cx.scaled(1e-8);

    double worst_ring = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double h = -3.0 + 6.0 * i / 9.0;
        for (int j = 0; j < 10; ++j) {
            const double theta = kPi * j / 10.0;
            const double closed = ring_energy({h, theta});
            const double quad =
                ring_energy_quadrature({h, theta}, Polarization::Axial, 1e-11, 1e-14).value;
            worst_ring = std::max(worst_ring, std::abs(quad - closed) / std::abs(closed));
        }
    }

    double worst_annulus = 0.0;
    for (const double b : {1.2, 1.6505, 2.0, 5.0}) {
        for (int i = 0; i < 10; ++i) {
            const double h = -3.0 + 6.0 * i / 9.0;
            for (int j = 0; j < 10; ++j) {
                const double theta = kPi * j / 10.0;
                const double closed = annulus_energy({h, theta}, b);
                const double quad =
                    annulus_energy_quadrature({h, theta}, b, Polarization::Axial, 1e-11, 1e-14)
                        .value;
                const double denom = std::max(std::abs(closed), 1e-3);
                worst_annulus = std::max(worst_annulus, std::abs(quad - closed) / denom);
            }
        }
    }

    // Outer-radius derivative of the annulus energy against the scaled
    // one-ring form: two independent closed-form routes.
    double worst_nesting = 0.0;
    const double fd_step = 1e-3;
    for (const double rho : {1.1, 1.5, 2.0, 3.0}) {
        for (const double h : {0.3, 0.7, 1.2, 2.5}) {
            for (const double theta : {0.0, 0.6, 1.2, 0.5 * kPi}) {
                const AtomConfiguration cfg{h, theta};
                const auto e_at = [&](double b) { return annulus_energy(cfg, b); };
                const double d1 =
                    (e_at(rho + fd_step) - e_at(rho - fd_step)) / (2.0 * fd_step);
                const double d2 =
                    (e_at(rho + 0.5 * fd_step) - e_at(rho - 0.5 * fd_step)) / fd_step;
                const double fd = (4.0 * d2 - d1) / 3.0;
                const double ring_form =
                    ring_energy({h / rho, theta}) / (rho * rho * rho * rho * rho * rho);
                const double denom = std::max(1.0, std::abs(ring_form));
                worst_nesting = std::max(worst_nesting, std::abs(fd - ring_form) / denom);
            }
        }
    }

    const double worst_ring_c = cx.corrupt("C7", worst_ring);
    r.pass = worst_ring_c <= tol && worst_annulus <= tol && worst_nesting <= cx.scaled(1e-10);
    r.detail = "worst relative mismatch: ring " + fmt(worst_ring_c) + ", annulus " +
               fmt(worst_annulus) + " (tol " + fmt(tol) + "); outer-derivative identity " +
               fmt(worst_nesting) + " (tol " + fmt(cx.scaled(1e-10)) + ")";
    return r;
}

// ---- C8: detached window at zero tilt -------------------------------------

CheckResult check_intermediate_window(const Ctx& cx) {
    CheckResult r{"C8", "detached repulsion window at 0 deg", false, false, "", 0.0};
    const auto rep = repulsion_windows(0.0);
    if (rep.windows.size() != 1) {
        r.detail = "expected exactly one window, got " + std::to_string(rep.windows.size());
        return r;
    }
    const double lo = cx.corrupt("C8", rep.windows[0].lo);
    const double hi = rep.windows[0].hi;
    const bool flagged = std::find(rep.flags.begin(), rep.flags.end(),
                                   Flag::PaperTextConflict) != rep.flags.end();

    // Brute scan, finer than the library's own cross-check.
    std::vector<double> crossings;
    const double step = 1e-4;
    double h_prev = step;
    double f_prev = ring_force({h_prev, 0.0});
    for (double h = 2.0 * step; h <= 3.0 + 0.5 * step; h += step) {
        const double fh = ring_force({h, 0.0});
        if ((f_prev <= 0.0) != (fh <= 0.0)) crossings.push_back(0.5 * (h_prev + h));
        h_prev = h;
        f_prev = fh;
    }

    r.pass = std::abs(lo - 0.956342) <= 1e-6 && std::abs(hi - 1.259131) <= 1e-6 && flagged &&
             crossings.size() == 2 && std::abs(crossings[0] - lo) <= step &&
             std::abs(crossings[1] - hi) <= step;
    r.detail = "window (" + fmt(lo) + ", " + fmt(hi) +
               ") confirmed by 1e-4 sign scan; published text range 1.24..1.41 disagrees with "
               "the force condition and is flagged paper-text-conflict";
    return r;
}

// ---- C9: four-stroke cycle -------------------------------------------------

CheckResult check_machine_cycle(const Ctx& cx) {
    CheckResult r{"C9", "energy cycle", false, true, "", 0.0};
    const auto cyc = machine_cycle();
    const double e_c = cx.corrupt("C9", cyc.e_c);
    r.pass = std::abs(cyc.e_a + 52.0) <= 1e-12 && std::abs(cyc.e_b) <= 1e-12 &&
             std::abs(e_c + 9.2832) <= 1e-4 && std::abs(cyc.e_d - e_c) <= cx.scaled(1e-9) &&
             std::abs(cyc.net) <= cx.scaled(1e-12);
    r.detail = "E_A=" + fmt(cyc.e_a) + " E_B=" + fmt(cyc.e_b) + " E_C=" + fmt(e_c) +
               " (published -9.2832, tol 1e-4), net work " + fmt(cyc.net);
    return r;
}

// ---- C10: point-kernel certification ---------------------------------------

CheckResult check_kernel(const Ctx& cx) {
    CheckResult r{"C10", "point kernel certification", false, true, "", 0.0};
    const double tol = cx.scaled(1e-12);

    const auto ri = retardation_integrals(1e-14);
    const bool integrals_ok = std::abs(ri.i_uu - 3.25) <= tol && std::abs(ri.i_uv - 7.0) <= tol &&
                              std::abs(ri.i_vv - 15.75) <= tol;

    const auto ident = PolarizabilityTensor::identity();
    const double bracket = cx.corrupt("C10", cp_point_bracket(ident, ident, {0.0, 0.0, 1.0}));
    const bool bracket_ok = bracket == 46.0;

    // Constancy of the frequency-quadrature/closed ratio over random inputs.
    std::mt19937 rng(20260822u);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::uniform_real_distribution<double> rad(0.7, 2.0);
    const auto random_tensor = [&]() {
        // M^T M is symmetric positive semi-definite by construction.
        double m[3][3];
        for (auto& row : m)
            for (double& e : row) e = uni(rng);
        PolarizabilityTensor t;
        t.xx = m[0][0] * m[0][0] + m[1][0] * m[1][0] + m[2][0] * m[2][0];
        t.yy = m[0][1] * m[0][1] + m[1][1] * m[1][1] + m[2][1] * m[2][1];
        t.zz = m[0][2] * m[0][2] + m[1][2] * m[1][2] + m[2][2] * m[2][2];
        t.xy = m[0][0] * m[0][1] + m[1][0] * m[1][1] + m[2][0] * m[2][1];
        t.xz = m[0][0] * m[0][2] + m[1][0] * m[1][2] + m[2][0] * m[2][2];
        t.yz = m[0][1] * m[0][2] + m[1][1] * m[1][2] + m[2][1] * m[2][2];
        return t;
    };

    double ratio0 = 0.0;
    double worst = 0.0;
    bool ratio_ok = true;
    for (int k = 0; k < 20; ++k) {
        const auto a1 = random_tensor();
        const auto a2 = random_tensor();
        Vec3 dir{uni(rng), uni(rng), uni(rng)};
        while (dir.norm() < 0.1) dir = {uni(rng), uni(rng), uni(rng)};
        const Vec3 r_vec = dir.normalized() * rad(rng);
        const double closed = cp_point_kernel(a1, a2, r_vec);
        if (std::abs(closed) < 1e-12) continue;
        const double ratio = cp_point_kernel_zeta(a1, a2, r_vec, 1e-12) / closed;
        if (k == 0)
            ratio0 = ratio;
        else
            worst = std::max(worst, std::abs(ratio - ratio0) / std::abs(ratio0));
    }
    ratio_ok = worst <= cx.scaled(1e-8);

    r.pass = integrals_ok && bracket_ok && ratio_ok;
    r.detail = "integrals (" + fmt(ri.i_uu) + ", " + fmt(ri.i_uv) + ", " + fmt(ri.i_vv) +
               ") vs (3.25, 7, 15.75); isotropic bracket " + fmt(bracket) +
               "; frequency-route/closed ratio " + fmt(ratio0) +
               " constant to " + fmt(worst);
    return r;
}

// ---- C11: figure data against golden references ----------------------------

struct CsvTable {
    std::string header;
    std::vector<std::array<std::optional<double>, 7>> numeric;
    std::vector<std::string> flags;
};

CsvTable parse_result_csv(const std::string& text) {
    CsvTable table;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty CSV");
    table.header = line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::array<std::optional<double>, 7> row{};
        std::size_t pos = 0;
        for (int col = 0; col < 8; ++col) {
            const std::size_t next = line.find(',', pos);
            const std::string field = line.substr(
                pos, next == std::string::npos ? std::string::npos : next - pos);
            if (col < 7) {
                if (!field.empty()) row[static_cast<std::size_t>(col)] = std::stod(field);
            } else {
                table.flags.push_back(field);
            }
            if (next == std::string::npos) {
                if (col < 7) throw std::runtime_error("short CSV row");
                break;
            }
            pos = next + 1;
        }
        table.numeric.push_back(row);
    }
    return table;
}

// Midpoints of grid cells where the column changes sign.
std::vector<double> sign_change_heights(const CsvTable& t, std::size_t col, std::size_t begin,
                                        std::size_t count) {
    std::vector<double> out;
    for (std::size_t i = begin + 1; i < begin + count; ++i) {
        const double prev = t.numeric[i - 1][col].value();
        const double cur = t.numeric[i][col].value();
        if ((prev <= 0.0) != (cur <= 0.0))
            out.push_back(0.5 * (t.numeric[i - 1][0].value() + t.numeric[i][0].value()));
    }
    return out;
}

std::vector<double> interior_minima(const CsvTable& t, std::size_t col, std::size_t begin,
                                    std::size_t count, double sign) {
    std::vector<double> out;
    for (std::size_t i = begin + 1; i + 1 < begin + count; ++i) {
        const double prev = sign * t.numeric[i - 1][col].value();
        const double cur = sign * t.numeric[i][col].value();
        const double next = sign * t.numeric[i + 1][col].value();
        if (cur < prev && cur <= next) out.push_back(t.numeric[i][0].value());
    }
    return out;
}

bool near_one_of(const std::vector<double>& xs, std::size_t idx, double target, double tol) {
    return idx < xs.size() && std::abs(xs[idx] - target) <= tol;
}

CheckResult check_figures(const Ctx& cx) {
    CheckResult r{"C11", "figure data vs golden references", false, true, "", 0.0};
    const std::string dir = cx.opts.golden_dir.empty() ? CPRING_GOLDEN_DIR : cx.opts.golden_dir;
    if (dir.empty()) {
        r.detail = "no golden directory configured";
        return r;
    }

    const double tol = cx.scaled(1e-10);
    bool first_cell = true;
    double worst = 0.0;

    std::vector<std::pair<std::string, CsvTable>> fresh_tables;
    for (const auto& curve : figure_curves()) {
        const std::string path = dir + "/" + curve.filename;
        std::ifstream in(path);
        if (!in) {
            r.detail = "missing golden file " + path +
                       " (regenerate with: cpring golden --out-dir <dir>)";
            return r;
        }
        std::ostringstream buf;
        buf << in.rdbuf();

        CsvTable golden;
        CsvTable fresh;
        try {
            golden = parse_result_csv(buf.str());
            fresh = parse_result_csv(render_figure_csv(curve));
        } catch (const std::exception& e) {
            r.detail = curve.filename + ": unreadable CSV (" + e.what() + ")";
            return r;
        }

        if (golden.header != fresh.header || golden.numeric.size() != fresh.numeric.size()) {
            r.detail = curve.filename + ": layout drifted from the golden file";
            return r;
        }
        for (std::size_t i = 0; i < golden.numeric.size(); ++i) {
            if (golden.flags[i] != fresh.flags[i]) {
                r.detail = curve.filename + ": flags column drifted at row " +
                           std::to_string(i + 1);
                return r;
            }
            for (std::size_t c = 0; c < 7; ++c) {
                const auto& g = golden.numeric[i][c];
                auto& f = fresh.numeric[i][c];
                if (g.has_value() != f.has_value()) {
                    r.detail = curve.filename + ": field presence drifted at row " +
                               std::to_string(i + 1);
                    return r;
                }
                if (!g) continue;
                if (first_cell) {
                    f = cx.corrupt("C11", *f);
                    first_cell = false;
                }
                const double err = std::abs(*f - *g) / std::max(1.0, std::abs(*g));
                worst = std::max(worst, err);
            }
        }
        fresh_tables.emplace_back(curve.filename, std::move(fresh));
    }
    if (worst > tol) {
        r.detail = "worst golden mismatch " + fmt(worst) + " > " + fmt(tol);
        return r;
    }

    // Sign structure of the regenerated curves must reproduce the published
    // landmarks: energy extrema of the tilt family and the zero crossings of
    // the anisotropy coefficient.
    const auto& fig2 = fresh_tables[0].second;        // 4 blocks of 301 rows
    const auto& ring_axial = fresh_tables[1].second;  // 401 rows
    const auto& plate_axial = fresh_tables[2].second;
    const auto& ring_radial = fresh_tables[3].second;  // 81 rows
    const auto& plate_radial = fresh_tables[4].second;

    const auto max0 = interior_minima(fig2, 3, 0, 301, -1.0);
    const auto min0 = interior_minima(fig2, 3, 0, 301, 1.0);
    const auto min90 = interior_minima(fig2, 3, 3 * 301, 301, 1.0);
    bool ok = max0.size() == 1 && std::abs(max0[0] - 0.956342) <= 0.011 && min0.size() == 1 &&
              std::abs(min0[0] - 1.259131) <= 0.011 && min90.size() == 1 &&
              std::abs(min90[0] - 0.471405) <= 0.011;

    const auto z_ring = sign_change_heights(ring_axial, 6, 0, 401);
    ok = ok && z_ring.size() == 2 && near_one_of(z_ring, 0, 0.477847, 0.011) &&
         near_one_of(z_ring, 1, 1.687206, 0.011);
    const auto z_plate = sign_change_heights(plate_axial, 6, 0, 401);
    ok = ok && z_plate.size() == 2 && near_one_of(z_plate, 0, 0.60602, 0.011) &&
         near_one_of(z_plate, 1, 3.43503, 0.011);
    const auto z_ring_rad = sign_change_heights(ring_radial, 6, 0, 81);
    ok = ok && z_ring_rad.size() == 2 && near_one_of(z_ring_rad, 0, 0.360007, 0.051) &&
         near_one_of(z_ring_rad, 1, 3.445344, 0.051);
    const auto z_plate_rad = sign_change_heights(plate_radial, 6, 0, 81);
    ok = ok && z_plate_rad.size() == 1 && near_one_of(z_plate_rad, 0, 0.440835, 0.051);

    r.pass = ok;
    r.detail = "5 curves match goldens (worst cell error " + fmt(worst) +
               "); extrema and zero crossings at the published landmarks: " +
               (ok ? "yes" : "no");
    return r;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
    const Ctx cx{opts};
    struct Entry {
        const char* id;
        const char* name;
        CheckResult (*fn)(const Ctx&);
    };
    std::vector<Entry> checks = {
        {"C1", "ring torsion-free heights", check_ring_torsion_free},
        {"C2", "90 deg repulsion boundary", check_perpendicular_boundary},
        {"C3", "critical tilt angles", check_critical_angles},
        {"C4", "plate torsion-free heights", check_plate_torsion_free},
    };
    if (opts.quadrature_checks)
        checks.push_back({"C5", "radial-pattern torsion-free heights", check_radial_heights});
    checks.insert(checks.end(),
                  {{"C6", "critical outer radii", check_critical_radii},
                   {"C7", "closed form vs quadrature", check_oracle_equivalence},
                   {"C8", "detached repulsion window at 0 deg", check_intermediate_window},
                   {"C9", "energy cycle", check_machine_cycle},
                   {"C10", "point kernel certification", check_kernel},
                   {"C11", "figure data vs golden references", check_figures}});

    std::vector<CheckResult> results;
    results.reserve(checks.size());
    for (const auto& entry : checks) {
        const auto t0 = std::chrono::steady_clock::now();
        CheckResult res;
        try {
            res = entry.fn(cx);
        } catch (const std::exception& e) {
            res.id = entry.id;
            res.name = entry.name;
            res.pass = false;
            res.detail = std::string("exception: ") + e.what();
        }
        res.elapsed_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        results.push_back(std::move(res));
    }
    return results;
}

bool print_verification(std::ostream& os, const std::vector<CheckResult>& results) {
    std::size_t passed = 0;
    for (const auto& r : results) {
        char timing[32];
        std::snprintf(timing, sizeof timing, " (%.2fs)", r.elapsed_s);
        os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.name << ": " << r.detail
           << timing << '\n';
        if (r.pass) ++passed;
    }
    os << (passed == results.size() ? "verification passed: " : "verification FAILED: ")
       << passed << '/' << results.size() << " checks\n";
    return passed == results.size();
}

}  // namespace cpring
