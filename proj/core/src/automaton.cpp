#include "hca/automaton.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace hca {

Configuration make_configuration(Grid grid, FiniteGroup group, std::uint32_t slice_m) {
    if (slice_m < 1) throw std::invalid_argument("make_configuration: slice_m must be >= 1");
    Configuration c{std::move(grid), std::move(group), {}, 0, slice_m};
    c.gamma.assign(c.grid.cell_count(), 0);
    return c;
}

StepPlan make_step_plan(const Grid& grid) {
    StepPlan plan;
    plan.successor.assign(grid.cell_count(), -1);
    for (std::size_t i = 0; i < grid.cell_count(); ++i) {
        Cell c = grid.cell_of(i);
        if (!grid.valid_at(c)) continue;
        auto next = grid.successor(c);
        if (!next) continue;  // successor outside a window grid: identity
        plan.successor[i] = static_cast<std::int32_t>(grid.index(*next));
    }
    return plan;
}

void plan_step(const StepPlan& plan, const FiniteGroup& group,
               const std::vector<std::uint32_t>& in, std::vector<std::uint32_t>& out) {
    out.resize(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
        std::int32_t s = plan.successor[i];
        out[i] = s < 0 ? in[i] : group.op(in[i], in[static_cast<std::size_t>(s)]);
    }
}

Configuration step(const Configuration& config) {
    StepPlan plan = make_step_plan(config.grid);
    Configuration out = config;
    plan_step(plan, config.group, config.gamma, out.gamma);
    return out;
}

Configuration step_sliced(const Configuration& config) {
    Configuration out = config;
    if (config.phase == 0) {
        StepPlan plan = make_step_plan(config.grid);
        plan_step(plan, config.group, config.gamma, out.gamma);
    }
    out.phase = (config.phase + 1) % config.slice_m;
    return out;
}

Configuration preimage(const Configuration& target, std::span<const Cell> window) {
    const Grid& grid = target.grid;
    Configuration x = target;
    x.gamma.assign(grid.cell_count(), 0);

    std::unordered_set<std::size_t> in_window;
    for (Cell c : window) {
        if (!grid.in_bounds(c)) throw std::invalid_argument("preimage: window cell outside grid");
        in_window.insert(grid.index(c));
    }

    StepPlan plan = make_step_plan(grid);
    // Assign each window cell after its forward path inside the window; the
    // walk is bounded by the window size on acyclic inputs.
    enum class State : std::uint8_t { unset, in_progress, done };
    std::vector<State> state(grid.cell_count(), State::unset);

    auto assign = [&](std::size_t idx, auto&& self) -> void {
        if (state[idx] == State::done) return;
        if (state[idx] == State::in_progress)
            throw std::runtime_error("preimage: cyclic dependency inside window");
        state[idx] = State::in_progress;
        std::int32_t s = plan.successor[idx];
        if (s < 0 || !in_window.contains(static_cast<std::size_t>(s))) {
            // Invalid cell or successor outside the window: copy the target.
            x.gamma[idx] = target.gamma[idx];
        } else {
            self(static_cast<std::size_t>(s), self);
            x.gamma[idx] = target.group.sub(target.gamma[idx], x.gamma[static_cast<std::size_t>(s)]);
        }
        state[idx] = State::done;
    };
    for (std::size_t idx : in_window) assign(idx, assign);
    return x;
}

std::vector<Cell> dependency_set(const Grid& grid, std::span<const Cell> window, int horizon,
                                 std::uint32_t slice_m, std::uint32_t phase) {
    if (horizon < 1) throw std::invalid_argument("dependency_set: horizon must be >= 1");
    if (slice_m < 1) throw std::invalid_argument("dependency_set: slice_m must be >= 1");
    // Number of firing updates among the horizon-1 applications.
    int updates = 0;
    for (int t = 0; t < horizon - 1; ++t)
        if ((phase + static_cast<std::uint32_t>(t)) % slice_m == 0) ++updates;

    StepPlan plan = make_step_plan(grid);
    std::vector<char> seen(grid.cell_count(), 0);
    std::vector<std::size_t> frontier;
    std::vector<Cell> out;
    for (Cell c : window) {
        if (!grid.in_bounds(c)) throw std::invalid_argument("dependency_set: cell outside grid");
        std::size_t idx = grid.index(c);
        if (!seen[idx]) {
            seen[idx] = 1;
            frontier.push_back(idx);
            out.push_back(c);
        }
    }
    for (int depth = 0; depth < updates; ++depth) {
        std::vector<std::size_t> next;
        for (std::size_t idx : frontier) {
            std::int32_t s = plan.successor[idx];
            if (s < 0) continue;
            std::size_t sidx = static_cast<std::size_t>(s);
            if (!seen[sidx]) {
                seen[sidx] = 1;
                next.push_back(sidx);
                out.push_back(grid.cell_of(sidx));
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string SpaceTimeWord::key() const {
    std::string k;
    k.reserve(tiles.size() * 4 + gamma_steps.size() * 4);
    auto put = [&k](std::uint32_t v) {
        k.push_back(static_cast<char>(v & 0xff));
        k.push_back(static_cast<char>((v >> 8) & 0xff));
        k.push_back(static_cast<char>((v >> 16) & 0xff));
        k.push_back(static_cast<char>((v >> 24) & 0xff));
    };
    for (std::uint32_t t : tiles) put(t);
    for (std::uint32_t g : gamma_steps) put(g);
    return k;
}

SpaceTimeWord trajectory_word(const Configuration& config, std::span<const Cell> window,
                              int horizon) {
    if (horizon < 1) throw std::invalid_argument("trajectory_word: horizon must be >= 1");
    SpaceTimeWord w;
    w.window.assign(window.begin(), window.end());
    w.horizon = horizon;
    for (Cell c : window) {
        if (!config.grid.in_bounds(c))
            throw std::invalid_argument("trajectory_word: cell outside grid");
        w.tiles.push_back(config.grid.at(c));
    }
    StepPlan plan = make_step_plan(config.grid);
    std::vector<std::uint32_t> cur = config.gamma;
    std::vector<std::uint32_t> next;
    std::uint32_t phase = config.phase;
    for (int t = 0; t < horizon; ++t) {
        for (Cell c : window) w.gamma_steps.push_back(cur[config.grid.index(c)]);
        if (t + 1 == horizon) break;
        if (phase == 0) {
            plan_step(plan, config.group, cur, next);
            cur.swap(next);
        }
        phase = (phase + 1) % config.slice_m;
    }
    return w;
}

}  // namespace hca
