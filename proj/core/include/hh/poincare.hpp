#pragma once

#include <string>
#include <vector>

#include "hh/integrate.hpp"

namespace hh {

// Hyperplane state[slot] == value, crossed with the given sign of
// d(state[slot])/dt. Default: q1 = 0 crossed upward (p1 > 0 for unit-mass
// kinetic terms).
struct SectionPlane {
    int slot = 0;
    double value = 0.0;
    int direction = +1;
};

struct SectionPoints {
    SectionPlane plane;
    std::vector<double> times;
    std::vector<std::vector<double>> points; // full states on the section
    std::vector<double> residuals;           // |state[slot] - value| after refinement
    bool no_crossings = false;
};

// Detects sign-changing crossings between stored trajectory samples and
// refines each on the cubic Hermite interpolant (exact endpoint
// derivatives) until |state[slot] - value| < 1e-10.
SectionPoints poincare(const CompiledField& field, const Trajectory& traj,
                       const SectionPlane& plane);

// Local-dimensionality statistic for a section cloud: median over points of
// the PCA line-fit RMS residual of the k nearest neighbours, computed in
// variance-normalized coordinates (cx, cy are state-component indices).
// Near zero for points on a smooth invariant curve; O(spacing) for a
// chaotic area-filling cloud.
double section_curve_residual(const SectionPoints& pts, int cx, int cy, int k = 8);

} // namespace hh
