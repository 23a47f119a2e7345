#pragma once

#include <cstddef>
#include <vector>

#include "hca/grid.hpp"

namespace hca {

enum class Termination : std::uint8_t { left_window, hit_invalid, cycle_detected, max_length };

const char* to_string(Termination t);

struct PathTrace {
    std::vector<Cell> cells;  // valid cells visited, in order
    Termination termination = Termination::hit_invalid;
};

// Follows forward directions through valid cells starting at `start`. Stops
// when the walk reaches an invalid cell (hit_invalid), leaves a window grid
// (left_window), revisits a cell (cycle_detected) or exceeds max_length.
PathTrace trace_path(const Grid& grid, Cell start, std::size_t max_length = 1 << 20);

struct PathComponents {
    struct Component {
        std::vector<Cell> cells;
        bool escapes_window = false;
    };
    std::vector<Component> components;
    std::size_t escaping_count = 0;          // finite-window surrogate for I(w)
    std::vector<int> component_of;           // per grid cell index
};

// Weakly-connected components of the directed graph with an edge from every
// valid cell to its forward neighbor. A component whose walk crosses the grid
// boundary (only possible on window topology) is classified as escaping.
PathComponents path_components(const Grid& grid);

}  // namespace hca
