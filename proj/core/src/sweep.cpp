#include "hh/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "hh/errors.hpp"

namespace hh {

GridAxis parse_grid_axis(const std::string& text) {
    auto eq = text.find('=');
    if (eq == std::string::npos)
        throw ConfigError("grid axis needs param=spec, got '" + text + "'");
    GridAxis axis;
    axis.param = text.substr(0, eq);
    std::string spec = text.substr(eq + 1);

    auto colons = std::count(spec.begin(), spec.end(), ':');
    if (colons == 2) {
        auto c1 = spec.find(':');
        auto c2 = spec.find(':', c1 + 1);
        Rational start = rat_parse(spec.substr(0, c1));
        Rational stop = rat_parse(spec.substr(c1 + 1, c2 - c1 - 1));
        Rational step = rat_parse(spec.substr(c2 + 1));
        if (step == 0) throw ConfigError("grid step must be nonzero");
        if (step > 0)
            for (Rational v = start; v <= stop; v += step) axis.values.push_back(rat_str(v));
        else
            for (Rational v = start; v >= stop; v += step) axis.values.push_back(rat_str(v));
        if (axis.values.empty()) throw ConfigError("empty grid axis '" + text + "'");
        return axis;
    }
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        auto comma = spec.find(',', pos);
        std::string item =
            comma == std::string::npos ? spec.substr(pos) : spec.substr(pos, comma - pos);
        if (!item.empty()) axis.values.push_back(item);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (axis.values.empty()) throw ConfigError("empty grid axis '" + text + "'");
    return axis;
}

std::vector<SweepRow> run_sweep(const std::vector<GridAxis>& axes, const RowRunner& runner,
                                int workers) {
    std::size_t total = 1;
    for (const auto& a : axes) total *= a.values.size();

    std::vector<std::map<std::string, std::string>> assignments(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rem = idx;
        // lexicographic: last axis varies fastest
        for (std::size_t a = axes.size(); a-- > 0;) {
            const auto& axis = axes[a];
            assignments[idx][axis.param] = axis.values[rem % axis.values.size()];
            rem /= axis.values.size();
        }
    }

    std::vector<SweepRow> rows(total);
    if (workers <= 0)
        workers = static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min<int>(workers, static_cast<int>(total)));

    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        while (true) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= total) return;
            SweepRow row;
            row.assignment = assignments[idx];
            try {
                row = runner(assignments[idx]);
                row.assignment = assignments[idx];
            } catch (const std::exception& e) {
                row.status = std::string("error: ") + e.what();
            }
            rows[idx] = std::move(row);
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return rows;
}

} // namespace hh
