#include "hh/poincare.hpp"

#include <algorithm>
#include <cmath>

namespace hh {

namespace {

// cubic Hermite value on [0,1] for one component
double hermite(double x0, double m0, double x1, double m1, double h, double u) {
    double u2 = u * u, u3 = u2 * u;
    return (2 * u3 - 3 * u2 + 1) * x0 + (u3 - 2 * u2 + u) * h * m0 +
           (-2 * u3 + 3 * u2) * x1 + (u3 - u2) * h * m1;
}

} // namespace

SectionPoints poincare(const CompiledField& field, const Trajectory& traj,
                       const SectionPlane& plane) {
    SectionPoints out;
    out.plane = plane;
    const std::size_t dim = traj.states.empty() ? 0 : traj.states[0].size();
    std::vector<double> f0(dim), f1(dim), xt(dim);

    for (std::size_t k = 0; k + 1 < traj.states.size(); ++k) {
        const auto& a = traj.states[k];
        const auto& b = traj.states[k + 1];
        double sa = a[plane.slot] - plane.value;
        double sb = b[plane.slot] - plane.value;
        bool crossing = plane.direction >= 0 ? (sa < 0.0 && sb >= 0.0)
                                             : (sa > 0.0 && sb <= 0.0);
        if (!crossing) continue;
        double h = traj.times[k + 1] - traj.times[k];
        field.rhs(a.data(), f0.data());
        field.rhs(b.data(), f1.data());
        // bisection on the Hermite interpolant of the section coordinate
        double lo = 0.0, hi = 1.0;
        double su = 0.0, u = 0.5;
        for (int it = 0; it < 200; ++it) {
            u = 0.5 * (lo + hi);
            su = hermite(a[plane.slot], f0[plane.slot], b[plane.slot], f1[plane.slot], h,
                         u) -
                 plane.value;
            if (std::fabs(su) < 1e-13) break;
            if ((su < 0.0) == (sa < 0.0))
                lo = u;
            else
                hi = u;
        }
        for (std::size_t i = 0; i < dim; ++i)
            xt[i] = hermite(a[i], f0[i], b[i], f1[i], h, u);
        xt[plane.slot] = plane.value + su; // keep the refined residual explicit
        out.times.push_back(traj.times[k] + u * h);
        out.points.push_back(xt);
        out.residuals.push_back(std::fabs(su));
    }
    out.no_crossings = out.points.empty();
    return out;
}

double section_curve_residual(const SectionPoints& pts, int cx, int cy, int k) {
    const std::size_t n = pts.points.size();
    if (n < static_cast<std::size_t>(3 * k)) return -1.0;

    // variance-normalized projection
    std::vector<double> xs(n), ys(n);
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = pts.points[i][cx];
        ys[i] = pts.points[i][cy];
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double vx = 0, vy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        vx += (xs[i] - mx) * (xs[i] - mx);
        vy += (ys[i] - my) * (ys[i] - my);
    }
    double sx = std::sqrt(vx / n), sy = std::sqrt(vy / n);
    if (sx <= 0) sx = 1;
    if (sy <= 0) sy = 1;
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = (xs[i] - mx) / sx;
        ys[i] = (ys[i] - my) / sy;
    }

    std::vector<double> res;
    res.reserve(n);
    std::vector<std::pair<double, std::size_t>> dist(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double dx = xs[j] - xs[i], dy = ys[j] - ys[i];
            dist[j] = {dx * dx + dy * dy, j};
        }
        std::partial_sort(dist.begin(), dist.begin() + k + 1, dist.end());
        // covariance of the k nearest neighbours (self excluded)
        double cmx = 0, cmy = 0;
        for (int t = 1; t <= k; ++t) {
            cmx += xs[dist[t].second];
            cmy += ys[dist[t].second];
        }
        cmx /= k;
        cmy /= k;
        double sxx = 0, sxy = 0, syy = 0;
        for (int t = 1; t <= k; ++t) {
            double dx = xs[dist[t].second] - cmx, dy = ys[dist[t].second] - cmy;
            sxx += dx * dx;
            sxy += dx * dy;
            syy += dy * dy;
        }
        sxx /= k;
        sxy /= k;
        syy /= k;
        // smaller eigenvalue of the 2x2 covariance = squared RMS distance
        // to the best-fit line through the neighbourhood
        double tr = sxx + syy;
        double det = sxx * syy - sxy * sxy;
        double disc = std::sqrt(std::max(tr * tr / 4 - det, 0.0));
        double lmin = tr / 2 - disc;
        res.push_back(std::sqrt(std::max(lmin, 0.0)));
    }
    std::nth_element(res.begin(), res.begin() + res.size() / 2, res.end());
    return res[res.size() / 2];
}

} // namespace hh
