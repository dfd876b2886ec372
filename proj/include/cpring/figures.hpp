#pragma once

#include <string>
#include <vector>

#include "cpring/report.hpp"

namespace cpring {

// The reference curve families shipped under tests/golden and regenerated by
// `cpring golden`. Definitions are frozen: changing a grid breaks the golden
// comparison on purpose.
struct FigureCurve {
    std::string filename;          // e.g. "fig2_ring_axial.csv"
    SweepRequest request;
};

std::vector<FigureCurve> figure_curves();

// CSV content for one curve (header + rows), exactly what `cpring golden`
// writes and what the figure-regeneration check compares at 1e-10.
std::string render_figure_csv(const FigureCurve& curve);

// Evaluate a sweep into records (energy + decomposition; force column only
// for the axial pattern where the closed form applies).
std::vector<ResultRecord> evaluate_energy_sweep(const SweepRequest& req);

}  // namespace cpring
