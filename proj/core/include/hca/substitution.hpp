#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hca/hilbert.hpp"

namespace hca {

enum class Side : std::uint8_t { none = 0, N = 1, S = 2, E = 3, W = 4 };

const char* to_string(Side s);
Side side_of(Dir d);

// A block tile of the Hilbert substitution system: the shape of the 4-cell
// sub-path through a 2x2 block together with the sides through which the path
// enters and leaves the block. Groupings of finite paths produce tiles with
// `none` at the global endpoints; the substitution alphabet proper consists of
// the 12 tiles where both sides are present.
struct SubstTile {
    HilbertVariant variant = HilbertVariant::a;
    Side entry = Side::none;
    Side exit = Side::none;
    friend bool operator==(const SubstTile&, const SubstTile&) = default;
    friend auto operator<=>(const SubstTile&, const SubstTile&) = default;
};

// The 12-tile alphabet in canonical id order.
std::span<const SubstTile> subst_alphabet();
std::optional<int> subst_tile_id(const SubstTile& t);

// 2x2 block of tiles, addressed with y growing north: at(0,0) is SW.
struct SubstBlock {
    std::array<SubstTile, 4> tiles;  // index = y*2 + x
    SubstTile& at(int x, int y) { return tiles[static_cast<std::size_t>(y) * 2 + x]; }
    const SubstTile& at(int x, int y) const {
        return tiles[static_cast<std::size_t>(y) * 2 + x];
    }
    friend bool operator==(const SubstBlock&, const SubstBlock&) = default;
};

// Substitution rule. Throws std::invalid_argument for tiles outside the
// 12-tile alphabet.
SubstBlock substitute(const SubstTile& t);

// Rectangular configuration of substitution tiles, row of y=0 at the south.
struct SubstGrid {
    int width = 0;
    int height = 0;
    std::vector<SubstTile> cells;

    SubstGrid() = default;
    SubstGrid(int w, int h) : width(w), height(h), cells(static_cast<std::size_t>(w) * h) {}
    SubstTile& at(int x, int y) { return cells[static_cast<std::size_t>(y) * width + x]; }
    const SubstTile& at(int x, int y) const {
        return cells[static_cast<std::size_t>(y) * width + x];
    }
    friend bool operator==(const SubstGrid&, const SubstGrid&) = default;
};

// rho^n(s): the 2^n x 2^n expansion of a single tile.
SubstGrid expand(const SubstTile& s, int n);

struct DeriveResult {
    enum class Status { ok, not_admissible, not_unique };
    Status status = Status::not_admissible;
    // Offset of the substitution lattice relative to the grid origin, in
    // {0,1}^2: complete 2x2 groups start at (shift.x + 2i, shift.y + 2j).
    Cell shift{0, 0};
    SubstGrid preimage;
};

// Inverts one substitution level. Tries all four shift classes; a shift class
// is viable when it yields at least one complete 2x2 group and every complete
// group is a substitution image. Exactly one viable shift -> ok; zero ->
// not_admissible; several -> not_unique.
DeriveResult derive(const SubstGrid& g);

// All w x h sub-configurations of rho^n(s) over every alphabet tile s,
// deduplicated. Throws std::invalid_argument if w or h exceeds 2^n.
std::vector<SubstGrid> admissible_blocks(int n, int w, int h);

// Groups a path into 2x2 blocks of 4 consecutive cells each. Requires the
// path length to be a multiple of 4 and each quadruple to fill one aligned
// 2x2 block (alignment inferred from the first quadruple); throws otherwise.
struct PathGrouping {
    std::vector<SubstTile> tiles;      // one per block, in traversal order
    std::vector<Cell> block_origins;   // SW corner of each block
};
PathGrouping group_path(std::span<const Cell> path);

}  // namespace hca
