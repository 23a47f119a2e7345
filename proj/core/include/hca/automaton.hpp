#pragma once

#include <span>
#include <string>
#include <vector>

#include "hca/grid.hpp"
#include "hca/group.hpp"

namespace hca {

// State of the path-accumulation automaton over a finite grid: the tile part
// (immutable under the dynamics), one group element per cell, and a slicing
// phase. slice_m == 1 is the plain automaton.
struct Configuration {
    Grid grid;
    FiniteGroup group;
    std::vector<std::uint32_t> gamma;
    std::uint32_t phase = 0;
    std::uint32_t slice_m = 1;
};

Configuration make_configuration(Grid grid, FiniteGroup group, std::uint32_t slice_m = 1);

// Precomputed update plan: successor cell index per cell, or -1 where the
// dynamics is the identity (invalid cell, or successor outside a window
// grid). Validity is evaluated once.
struct StepPlan {
    std::vector<std::int32_t> successor;
};
StepPlan make_step_plan(const Grid& grid);

// Synchronous update: at every cell with a successor, the new value is
// gamma[cell] + gamma[successor] (old values); elsewhere gamma is unchanged.
void plan_step(const StepPlan& plan, const FiniteGroup& group,
               const std::vector<std::uint32_t>& in, std::vector<std::uint32_t>& out);

Configuration step(const Configuration& config);

// Sliced update: the gamma update fires only at phase 0; the phase advances
// modulo slice_m every step.
Configuration step_sliced(const Configuration& config);

// Constructive preimage: returns x with the same tile part such that
// step(x) agrees with `target` on `window`; gamma(x) is the identity outside
// the window. Throws std::runtime_error on a cyclic dependency inside the
// window (possible only on torus topology).
Configuration preimage(const Configuration& target, std::span<const Cell> window);

// Minimal cell set whose gamma values determine the space-time word of
// `window` over `horizon` snapshots: cells reachable from the window by at
// most (number of update steps) valid forward moves.
std::vector<Cell> dependency_set(const Grid& grid, std::span<const Cell> window, int horizon,
                                 std::uint32_t slice_m = 1, std::uint32_t phase = 0);

struct SpaceTimeWord {
    std::vector<Cell> window;
    int horizon = 0;
    std::vector<std::uint32_t> tiles;        // one per window cell
    std::vector<std::uint32_t> gamma_steps;  // horizon x window, row-major
    // Byte key identifying the word (tiles + gamma history).
    std::string key() const;
};

SpaceTimeWord trajectory_word(const Configuration& config, std::span<const Cell> window,
                              int horizon);

}  // namespace hca
