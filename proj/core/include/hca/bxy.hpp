#pragma once

#include <memory>
#include <vector>

#include "hca/kari.hpp"

namespace hca {

// A hierarchical Kari configuration: a central cross surrounded by four
// recursively constructed quadrant blocks, with connecting arm chains, blank
// crosses on the even sublattice, and all labels (offsets, Hilbert labels,
// corner parities, directions) filled in the unique way compatible with the
// adjacency rules and the requested central Hilbert label.
struct BxyResult {
    Grid grid;                     // side 2^(level+1) - 1 + 2*margin
    std::vector<Cell> blank_path;  // blank crosses in path order, grid coordinates
    Cell entry{0, 0};              // first blank cross of the designated path
    int level = 0;
    int margin = 0;
    Corner orientation = Corner::NE;
    HilbertVariant label = HilbertVariant::a;
    Cell origin_global{0, 0};      // grid (0,0) within the construction lattice
};

// Builds the level-n block with the given central orientation and Hilbert
// label. The block is cut out of a larger construction so that with
// margin >= 1 every cell of the block proper (not just its interior) has a
// fully determined neighborhood and validates; the default margin 0 returns
// exactly the 2^(n+1)-1 square. Margin is capped at 2^(n+1) - 1.
BxyResult build_bxy(std::shared_ptr<const KariTileSet> tiles, int level, Corner orientation,
                    HilbertVariant label, int margin = 0);

}  // namespace hca
