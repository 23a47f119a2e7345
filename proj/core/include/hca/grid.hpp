#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hca/geometry.hpp"

namespace hca {

class Grid;

enum class Topology : std::uint8_t { window, torus };

// A set of directed tiles: every tile has a forward direction, and a local
// validity predicate evaluated over the tile's neighborhood in a grid.
class DirectedTileSet {
public:
    virtual ~DirectedTileSet() = default;
    virtual std::string name() const = 0;
    virtual std::uint32_t tile_count() const = 0;
    virtual Dir direction(std::uint32_t tile) const = 0;
    virtual int radius() const = 0;
    virtual bool valid_at(const Grid& grid, Cell cell) const = 0;
};

// Finite rectangular patch of tile states. Cells are addressed with x east
// and y north; (0,0) is the south-west cell.
class Grid {
public:
    Grid() = default;
    Grid(std::shared_ptr<const DirectedTileSet> tiles, int width, int height,
         Topology topology = Topology::window);

    const DirectedTileSet& tileset() const { return *tiles_; }
    const std::shared_ptr<const DirectedTileSet>& tileset_ptr() const { return tiles_; }
    int width() const { return width_; }
    int height() const { return height_; }
    Topology topology() const { return topology_; }
    Cell origin() const { return origin_; }
    void set_origin(Cell o) { origin_ = o; }

    bool in_bounds(Cell c) const {
        return c.x >= 0 && c.x < width_ && c.y >= 0 && c.y < height_;
    }
    // Wraps on a torus; nullopt outside a window grid.
    std::optional<Cell> resolve(Cell c) const {
        if (in_bounds(c)) return c;
        if (topology_ == Topology::window) return std::nullopt;
        int x = c.x % width_, y = c.y % height_;
        if (x < 0) x += width_;
        if (y < 0) y += height_;
        return Cell{x, y};
    }

    std::uint32_t at(Cell c) const { return cells_[index(c)]; }
    std::uint32_t at(int x, int y) const { return cells_[index({x, y})]; }
    void set(Cell c, std::uint32_t tile) { cells_[index(c)] = tile; }

    std::size_t cell_count() const { return cells_.size(); }
    std::size_t index(Cell c) const {
        return static_cast<std::size_t>(c.y) * width_ + c.x;
    }
    Cell cell_of(std::size_t idx) const {
        return {static_cast<int>(idx % width_), static_cast<int>(idx / width_)};
    }
    const std::vector<std::uint32_t>& cells() const { return cells_; }
    std::vector<std::uint32_t>& cells() { return cells_; }

    bool valid_at(Cell c) const { return tiles_->valid_at(*this, c); }
    // Forward neighbor of a cell under the tile direction, if inside.
    std::optional<Cell> successor(Cell c) const {
        return resolve(step(c, tiles_->direction(at(c))));
    }

    friend bool operator==(const Grid& a, const Grid& b) {
        return a.width_ == b.width_ && a.height_ == b.height_ && a.topology_ == b.topology_ &&
               a.origin_ == b.origin_ && a.cells_ == b.cells_ &&
               a.tiles_->name() == b.tiles_->name();
    }

private:
    std::shared_ptr<const DirectedTileSet> tiles_;
    int width_ = 0;
    int height_ = 0;
    Cell origin_{0, 0};
    Topology topology_ = Topology::window;
    std::vector<std::uint32_t> cells_;
};

// Constraint-free tile sets with directions +e_1 .. +e_d ("simple1",
// "simple2"). Only d <= 2 is representable on a planar grid.
class SimpleTileSet : public DirectedTileSet {
public:
    explicit SimpleTileSet(int dimension);
    std::string name() const override;
    std::uint32_t tile_count() const override { return static_cast<std::uint32_t>(dim_); }
    Dir direction(std::uint32_t tile) const override { return tile == 0 ? Dir::E : Dir::N; }
    int radius() const override { return 0; }
    bool valid_at(const Grid&, Cell) const override { return true; }

private:
    int dim_;
};

std::shared_ptr<const SimpleTileSet> simple_tileset(int dimension);

}  // namespace hca
