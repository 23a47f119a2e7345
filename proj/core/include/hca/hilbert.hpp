#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "hca/geometry.hpp"

namespace hca {

// The four basic plane-filling path shapes on a 2x2 square, named after the
// classic Hilbert curve family. Every level-n path starts and ends at corners
// adjacent along one side of its 2^n x 2^n square:
//
//   a: SW -> NW -> NE -> SE   (endpoints on the south side)
//   b: SW -> SE -> NE -> NW   (west side)
//   c: NE -> NW -> SW -> SE   (east side)
//   d: NE -> SE -> SW -> NW   (north side)
enum class HilbertVariant : std::uint8_t { a = 0, b = 1, c = 2, d = 3 };

inline constexpr std::array<HilbertVariant, 4> all_variants{
    HilbertVariant::a, HilbertVariant::b, HilbertVariant::c, HilbertVariant::d};

const char* to_string(HilbertVariant v);
std::optional<HilbertVariant> variant_from_string(std::string_view s);

// One quadrant visit in the inductive definition of a level-(n+1) path.
struct QuadrantStep {
    Corner quadrant;
    HilbertVariant variant;
};

// Quadrant traversal order and sub-variants for each variant's inductive step.
const std::array<QuadrantStep, 4>& hilbert_recursion(HilbertVariant v);

// Sub-variant placed in a given quadrant of a level-(n+1) square of variant v.
HilbertVariant quadrant_variant(HilbertVariant v, Corner quadrant);

// The four cells of the level-1 path through {0,1}^2.
std::array<Cell, 4> basic_path(HilbertVariant v);

// Level-n path visiting every cell of the 2^n x 2^n square anchored at (0,0)
// exactly once with unit steps. Throws std::invalid_argument for level < 1
// or level > 12 (4^12 cells is the supported ceiling).
std::vector<Cell> hilbert_path(HilbertVariant v, int level);

// Scans for the earliest window of 4^n consecutive path cells that covers an
// axis-aligned 2^n x 2^n square exactly. Indices are 1-based: a result (i, j)
// means cells p_i ... p_{j-1} fill the square and j - i = 4^n.
std::optional<std::pair<std::size_t, std::size_t>> find_square_fill(
    std::span<const Cell> path, int n);

}  // namespace hca
