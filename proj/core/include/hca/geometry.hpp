#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

namespace hca {

// Lattice coordinates: x grows east, y grows north.
struct Cell {
    int x = 0;
    int y = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

enum class Dir : std::uint8_t { N = 0, S = 1, E = 2, W = 3 };

inline constexpr std::array<Dir, 4> all_dirs{Dir::N, Dir::S, Dir::E, Dir::W};

constexpr Cell dir_offset(Dir d) {
    switch (d) {
        case Dir::N: return {0, 1};
        case Dir::S: return {0, -1};
        case Dir::E: return {1, 0};
        default: return {-1, 0};
    }
}

constexpr Dir opposite(Dir d) {
    switch (d) {
        case Dir::N: return Dir::S;
        case Dir::S: return Dir::N;
        case Dir::E: return Dir::W;
        default: return Dir::E;
    }
}

constexpr bool is_vertical(Dir d) { return d == Dir::N || d == Dir::S; }

constexpr Cell step(Cell c, Dir d) {
    Cell o = dir_offset(d);
    return {c.x + o.x, c.y + o.y};
}

// Direction of a unit step a -> b, if it is one.
inline std::optional<Dir> dir_between(Cell a, Cell b) {
    for (Dir d : all_dirs)
        if (step(a, d) == b) return d;
    return std::nullopt;
}

// Corner-wise directions (quadrants of a square).
enum class Corner : std::uint8_t { NE = 0, NW = 1, SE = 2, SW = 3 };

inline constexpr std::array<Corner, 4> all_corners{Corner::NE, Corner::NW, Corner::SE, Corner::SW};

constexpr Cell corner_offset(Corner c) {
    switch (c) {
        case Corner::NE: return {1, 1};
        case Corner::NW: return {-1, 1};
        case Corner::SE: return {1, -1};
        default: return {-1, -1};
    }
}

constexpr Corner opposite(Corner c) {
    switch (c) {
        case Corner::NE: return Corner::SW;
        case Corner::NW: return Corner::SE;
        case Corner::SE: return Corner::NW;
        default: return Corner::NE;
    }
}

constexpr Corner make_corner(Dir ns, Dir ew) {
    if (ns == Dir::N) return ew == Dir::E ? Corner::NE : Corner::NW;
    return ew == Dir::E ? Corner::SE : Corner::SW;
}

constexpr Dir corner_ns(Corner c) {
    return (c == Corner::NE || c == Corner::NW) ? Dir::N : Dir::S;
}

constexpr Dir corner_ew(Corner c) {
    return (c == Corner::NE || c == Corner::SE) ? Dir::E : Dir::W;
}

const char* to_string(Dir d);
const char* to_string(Corner c);
std::optional<Dir> dir_from_string(std::string_view s);
std::optional<Corner> corner_from_string(std::string_view s);

struct CellHash {
    std::size_t operator()(const Cell& c) const {
        std::uint64_t k = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.x)) << 32) |
                          static_cast<std::uint32_t>(c.y);
        k ^= k >> 33;
        k *= 0xff51afd7ed558ccdULL;
        k ^= k >> 33;
        return static_cast<std::size_t>(k);
    }
};

}  // namespace hca
