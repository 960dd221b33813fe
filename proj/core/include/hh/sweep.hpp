#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hh/rational.hpp"

namespace hh {

// One grid axis: exact values (expression text) for one parameter.
struct GridAxis {
    std::string param;
    std::vector<std::string> values;
};

// "b1=0:1:0.5" -> {0, 1/2, 1}; "alpha=1,2,5/2" -> the explicit list
GridAxis parse_grid_axis(const std::string& text);

struct SweepRow {
    std::map<std::string, std::string> assignment; // param -> value text
    std::string status;
    std::map<std::string, double> stats; // e.g. driftH, driftI, sectionResidual
};

using RowRunner = std::function<SweepRow(const std::map<std::string, std::string>&)>;

// Runs the runner on the cartesian product of the axes in lexicographic
// order. Rows are distributed over a worker pool and merged back in grid
// order; a failing row records its error in `status` and never aborts the
// sweep.
std::vector<SweepRow> run_sweep(const std::vector<GridAxis>& axes, const RowRunner& runner,
                                int workers = 0);

} // namespace hh
