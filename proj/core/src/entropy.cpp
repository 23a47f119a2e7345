#include "hca/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "hca/pathops.hpp"
#include "hca/rng.hpp"

namespace hca {

namespace {

double pow_checked(double base, std::size_t exp) {
    return std::pow(base, static_cast<double>(exp));
}

// Gamma history of `window` over `horizon` snapshots, appended to `key`.
void append_word(const StepPlan& plan, const FiniteGroup& group,
                 const std::vector<std::size_t>& window_idx, int horizon, std::uint32_t slice_m,
                 std::uint32_t phase0, std::vector<std::uint32_t>& cur,
                 std::vector<std::uint32_t>& scratch, std::string& key) {
    std::uint32_t phase = phase0;
    for (int t = 0; t < horizon; ++t) {
        for (std::size_t idx : window_idx) {
            std::uint32_t v = cur[idx];
            key.push_back(static_cast<char>(v & 0xff));
            key.push_back(static_cast<char>((v >> 8) & 0xff));
        }
        if (t + 1 == horizon) break;
        if (phase == 0) {
            plan_step(plan, group, cur, scratch);
            cur.swap(scratch);
        }
        phase = (phase + 1) % slice_m;
    }
}

}  // namespace

WordSet count_words_exact(const Grid& grid, const FiniteGroup& group,
                          std::span<const Cell> window, int horizon, double budget,
                          std::uint32_t slice_m, std::uint32_t phase) {
    WordSet out;
    out.window.assign(window.begin(), window.end());
    out.horizon = horizon;
    out.dependency = dependency_set(grid, window, horizon, slice_m, phase);

    const double required = pow_checked(group.order(), out.dependency.size());
    if (required > budget)
        throw BudgetError("count_words_exact: would need |G|^|D| = " + std::to_string(required) +
                              " assignments, budget is " + std::to_string(budget),
                          required);

    StepPlan plan = make_step_plan(grid);
    std::vector<std::size_t> dep_idx, win_idx;
    for (Cell c : out.dependency) dep_idx.push_back(grid.index(c));
    for (Cell c : window) win_idx.push_back(grid.index(c));

    std::vector<std::uint32_t> assignment(dep_idx.size(), 0);
    std::vector<std::uint32_t> gamma(grid.cell_count(), 0);
    std::vector<std::uint32_t> cur, scratch;
    std::string key;
    while (true) {
        for (std::size_t i = 0; i < dep_idx.size(); ++i) gamma[dep_idx[i]] = assignment[i];
        cur = gamma;
        key.clear();
        append_word(plan, group, win_idx, horizon, slice_m, phase, cur, scratch, key);
        ++out.counts[key];

        std::size_t pos = 0;
        while (pos < assignment.size()) {
            if (++assignment[pos] < group.order()) break;
            assignment[pos] = 0;
            ++pos;
        }
        if (pos == assignment.size()) break;
        if (assignment.empty()) break;
    }
    return out;
}

WordSet count_words_sampled(const Grid& grid, const FiniteGroup& group,
                            std::span<const Cell> window, int horizon, std::uint64_t samples,
                            std::uint64_t seed, std::uint32_t slice_m, std::uint32_t phase) {
    if (samples < 1) throw std::invalid_argument("count_words_sampled: samples must be >= 1");
    WordSet out;
    out.window.assign(window.begin(), window.end());
    out.horizon = horizon;
    out.sampled = true;
    out.sample_count = samples;
    out.seed = seed;
    out.dependency = dependency_set(grid, window, horizon, slice_m, phase);

    StepPlan plan = make_step_plan(grid);
    std::vector<std::size_t> dep_idx, win_idx;
    for (Cell c : out.dependency) dep_idx.push_back(grid.index(c));
    for (Cell c : window) win_idx.push_back(grid.index(c));

    std::vector<std::uint32_t> gamma(grid.cell_count(), 0);
    std::vector<std::uint32_t> cur, scratch;
    std::string key;
    for (std::uint64_t s = 0; s < samples; ++s) {
        for (std::size_t i = 0; i < dep_idx.size(); ++i)
            gamma[dep_idx[i]] =
                static_cast<std::uint32_t>(bounded(counter_rng(seed, s, i), group.order()));
        cur = gamma;
        key.clear();
        append_word(plan, group, win_idx, horizon, slice_m, phase, cur, scratch, key);
        ++out.counts[key];
    }
    return out;
}

EntropyEstimate entropy_rate(std::span<const int> horizons, std::span<const double> values) {
    if (horizons.size() != values.size())
        throw std::invalid_argument("entropy_rate: length mismatch");
    if (horizons.size() < 3)
        throw std::invalid_argument("entropy_rate: need at least 3 horizons");
    EntropyEstimate est;
    est.horizons.assign(horizons.begin(), horizons.end());
    est.values.assign(values.begin(), values.end());
    const double n = static_cast<double>(horizons.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < horizons.size(); ++i) {
        double x = horizons[i], y = values[i];
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    est.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    est.last_diff = values[values.size() - 1] - values[values.size() - 2];
    est.hn_over_n = values.back() / horizons.back();
    return est;
}

PeriodicityResult periodicity_check(const Grid& grid, const FiniteGroup& group,
                                    std::span<const Cell> window, std::uint64_t bound) {
    auto comps = path_components(grid);
    if (comps.escaping_count > 0)
        throw std::invalid_argument(
            "periodicity_check: grid has escaping path components; periods are only defined "
            "for finite maximal paths");

    // Forward closure of the window.
    StepPlan plan = make_step_plan(grid);
    std::vector<char> seen(grid.cell_count(), 0);
    std::vector<std::size_t> closure;
    for (Cell c : window) {
        if (!grid.in_bounds(c))
            throw std::invalid_argument("periodicity_check: cell outside grid");
        std::size_t idx = grid.index(c);
        if (!seen[idx]) {
            seen[idx] = 1;
            closure.push_back(idx);
        }
    }
    for (std::size_t i = 0; i < closure.size(); ++i) {
        std::int32_t s = plan.successor[closure[i]];
        if (s >= 0 && !seen[static_cast<std::size_t>(s)]) {
            seen[static_cast<std::size_t>(s)] = 1;
            closure.push_back(static_cast<std::size_t>(s));
        }
    }

    const double states = pow_checked(group.order(), closure.size());
    if (states > double(1 << 20))
        throw BudgetError("periodicity_check: state space too large", states);

    PeriodicityResult out;
    out.bound = bound;
    for (std::size_t idx : closure) out.closure.push_back(grid.cell_of(idx));

    std::vector<std::size_t> win_idx;
    for (Cell c : window) win_idx.push_back(grid.index(c));

    if (bound < 1 || bound > 65536)
        throw std::invalid_argument("periodicity_check: bound must be in [1, 65536]");

    // ok[t] stays set while T^t restricted to the window is the identity on
    // every initial state examined so far.
    std::vector<char> ok(bound + 1, 1);
    std::vector<std::uint32_t> init(grid.cell_count(), 0);
    std::vector<std::uint32_t> cur, scratch;
    const std::uint64_t total = static_cast<std::uint64_t>(states);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t rest = code;
        for (std::size_t idx : closure) {
            init[idx] = static_cast<std::uint32_t>(rest % group.order());
            rest /= group.order();
        }
        cur = init;
        bool any = false;
        for (std::uint64_t t = 1; t <= bound; ++t) {
            plan_step(plan, group, cur, scratch);
            cur.swap(scratch);
            if (!ok[t]) continue;
            for (std::size_t w : win_idx)
                if (cur[w] != init[w]) {
                    ok[t] = 0;
                    break;
                }
            any = any || ok[t];
        }
        if (!any) return out;  // every candidate period ruled out
    }
    for (std::uint64_t t = 1; t <= bound; ++t)
        if (ok[t]) {
            out.found = true;
            out.period = t;
            return out;
        }
    return out;
}

EntropyEstimate measure_entropy_estimate(const std::shared_ptr<const DirectedTileSet>& tiles,
                                         const FiniteGroup& group,
                                         const MeasureEntropyParams& params) {
    const int n = params.horizon;
    if (n < 3) throw std::invalid_argument("measure_entropy_estimate: horizon must be >= 3");
    if (params.window_w < 1 || params.window_h < 1)
        throw std::invalid_argument("measure_entropy_estimate: empty window");
    // The tracked window block sits at the center of a margin wide enough
    // that its word never sees the boundary.
    const int margin = n + 1;
    const int side_x = 2 * margin + params.window_w;
    const int side_y = 2 * margin + params.window_h;
    Grid grid(tiles, side_x, side_y, Topology::window);
    std::vector<std::size_t> win_idx;
    for (int dy = 0; dy < params.window_h; ++dy)
        for (int dx = 0; dx < params.window_w; ++dx)
            win_idx.push_back(grid.index({margin + dx, margin + dy}));

    std::vector<std::unordered_map<std::string, std::uint64_t>> counts(
        static_cast<std::size_t>(n));
    std::vector<std::uint32_t> gamma(grid.cell_count());
    std::vector<std::uint32_t> scratch;
    const std::uint64_t tile_count = tiles->tile_count();
    const std::size_t ncells = grid.cell_count();

    for (std::uint64_t s = 0; s < params.samples; ++s) {
        for (std::size_t i = 0; i < ncells; ++i) {
            grid.cells()[i] = static_cast<std::uint32_t>(
                bounded(counter_rng(params.seed, 2 * s, i), tile_count));
            gamma[i] = static_cast<std::uint32_t>(
                bounded(counter_rng(params.seed, 2 * s + 1, i), group.order()));
        }
        StepPlan plan = make_step_plan(grid);
        std::string key;
        for (std::size_t w : win_idx) {
            std::uint32_t t0 = grid.cells()[w];
            key.push_back(static_cast<char>(t0 & 0xff));
            key.push_back(static_cast<char>((t0 >> 8) & 0xff));
            key.push_back(static_cast<char>((t0 >> 16) & 0xff));
        }
        std::vector<std::uint32_t>& cur = gamma;
        for (int t = 0; t < n; ++t) {
            for (std::size_t w : win_idx) {
                std::uint32_t v = cur[w];
                key.push_back(static_cast<char>(v & 0xff));
                key.push_back(static_cast<char>((v >> 8) & 0xff));
            }
            ++counts[static_cast<std::size_t>(t)][key];
            if (t + 1 == n) break;
            plan_step(plan, group, cur, scratch);
            cur.swap(scratch);
        }
    }

    std::vector<int> horizons;
    std::vector<double> values;
    const double total = static_cast<double>(params.samples);
    for (int t = 0; t < n; ++t) {
        double h = 0.0;
        for (const auto& [k, c] : counts[static_cast<std::size_t>(t)]) {
            double p = static_cast<double>(c) / total;
            h -= p * std::log(p);
        }
        horizons.push_back(t + 1);
        values.push_back(h);
    }
    EntropyEstimate est = entropy_rate(horizons, values);
    est.note = "plug-in estimates from " + std::to_string(params.samples) +
               " samples (seed " + std::to_string(params.seed) +
               "); no bias correction; headline estimate is the fitted slope";
    return est;
}

std::vector<SurvivalRow> valid_path_survival(const std::shared_ptr<const DirectedTileSet>& tiles,
                                             std::span<const int> window_sizes,
                                             std::span<const int> thresholds,
                                             std::uint64_t samples, std::uint64_t seed) {
    std::vector<SurvivalRow> rows;
    std::vector<int> sorted_thresholds(thresholds.begin(), thresholds.end());
    std::sort(sorted_thresholds.begin(), sorted_thresholds.end());
    const std::uint64_t tile_count = tiles->tile_count();

    for (int w : window_sizes) {
        if (w < 4) throw std::invalid_argument("valid_path_survival: window too small");
        Grid grid(tiles, w, w, Topology::window);
        std::vector<std::uint64_t> hits(sorted_thresholds.size(), 0);
        const int q0 = w / 4, q1 = w / 4 + w / 2;  // central quarter
        const int max_len = sorted_thresholds.back();

        for (std::uint64_t s = 0; s < samples; ++s) {
            for (std::size_t i = 0; i < grid.cell_count(); ++i)
                grid.cells()[i] = static_cast<std::uint32_t>(
                    bounded(counter_rng(seed, (static_cast<std::uint64_t>(w) << 32) | s, i),
                            tile_count));
            // Longest valid path from any start in the central quarter.
            std::size_t longest = 0;
            std::vector<std::int8_t> valid_cache(grid.cell_count(), -1);
            auto is_valid = [&](Cell c) {
                std::size_t idx = grid.index(c);
                if (valid_cache[idx] < 0)
                    valid_cache[idx] = grid.valid_at(c) ? 1 : 0;
                return valid_cache[idx] == 1;
            };
            for (int y = q0; y < q1 && longest < static_cast<std::size_t>(max_len); ++y) {
                for (int x = q0; x < q1; ++x) {
                    Cell cur{x, y};
                    std::size_t len = 0;
                    std::unordered_set<std::size_t> seen;
                    while (grid.in_bounds(cur) && is_valid(cur) &&
                           len < static_cast<std::size_t>(max_len)) {
                        if (!seen.insert(grid.index(cur)).second) break;
                        ++len;
                        Cell next = step(cur, tiles->direction(grid.at(cur)));
                        auto r = grid.resolve(next);
                        if (!r) break;
                        cur = *r;
                    }
                    longest = std::max(longest, len);
                    if (longest >= static_cast<std::size_t>(max_len)) break;
                }
            }
            for (std::size_t i = 0; i < sorted_thresholds.size(); ++i)
                if (longest >= static_cast<std::size_t>(sorted_thresholds[i])) ++hits[i];
        }
        for (std::size_t i = 0; i < sorted_thresholds.size(); ++i) {
            SurvivalRow row;
            row.window = w;
            row.threshold = sorted_thresholds[i];
            row.hits = hits[i];
            row.samples = samples;
            row.seed = seed;
            row.probability = samples ? static_cast<double>(hits[i]) / samples : 0.0;
            rows.push_back(row);
        }
    }
    return rows;
}

BoundConstants report_constants() { return {}; }

}  // namespace hca
