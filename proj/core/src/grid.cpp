#include "hca/grid.hpp"

#include <stdexcept>

namespace hca {

Grid::Grid(std::shared_ptr<const DirectedTileSet> tiles, int width, int height,
           Topology topology)
    : tiles_(std::move(tiles)), width_(width), height_(height), topology_(topology) {
    if (!tiles_) throw std::invalid_argument("Grid: null tileset");
    if (width_ < 1 || height_ < 1) throw std::invalid_argument("Grid: empty dimensions");
    cells_.assign(static_cast<std::size_t>(width_) * height_, 0);
}

SimpleTileSet::SimpleTileSet(int dimension) : dim_(dimension) {
    if (dimension < 1 || dimension > 2)
        throw std::invalid_argument("SimpleTileSet: dimension must be 1 or 2");
}

std::string SimpleTileSet::name() const { return "simple" + std::to_string(dim_); }

std::shared_ptr<const SimpleTileSet> simple_tileset(int dimension) {
    static const auto s1 = std::make_shared<const SimpleTileSet>(1);
    static const auto s2 = std::make_shared<const SimpleTileSet>(2);
    if (dimension == 1) return s1;
    if (dimension == 2) return s2;
    throw std::invalid_argument("simple_tileset: dimension must be 1 or 2");
}

}  // namespace hca
