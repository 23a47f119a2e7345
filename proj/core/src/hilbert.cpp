#include "hca/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

namespace hca {

const char* to_string(Dir d) {
    switch (d) {
        case Dir::N: return "N";
        case Dir::S: return "S";
        case Dir::E: return "E";
        default: return "W";
    }
}

const char* to_string(Corner c) {
    switch (c) {
        case Corner::NE: return "NE";
        case Corner::NW: return "NW";
        case Corner::SE: return "SE";
        default: return "SW";
    }
}

std::optional<Dir> dir_from_string(std::string_view s) {
    if (s == "N") return Dir::N;
    if (s == "S") return Dir::S;
    if (s == "E") return Dir::E;
    if (s == "W") return Dir::W;
    return std::nullopt;
}

std::optional<Corner> corner_from_string(std::string_view s) {
    if (s == "NE") return Corner::NE;
    if (s == "NW") return Corner::NW;
    if (s == "SE") return Corner::SE;
    if (s == "SW") return Corner::SW;
    return std::nullopt;
}

const char* to_string(HilbertVariant v) {
    switch (v) {
        case HilbertVariant::a: return "a";
        case HilbertVariant::b: return "b";
        case HilbertVariant::c: return "c";
        default: return "d";
    }
}

std::optional<HilbertVariant> variant_from_string(std::string_view s) {
    if (s == "a") return HilbertVariant::a;
    if (s == "b") return HilbertVariant::b;
    if (s == "c") return HilbertVariant::c;
    if (s == "d") return HilbertVariant::d;
    return std::nullopt;
}

std::array<Cell, 4> basic_path(HilbertVariant v) {
    switch (v) {
        case HilbertVariant::a:
            return {Cell{0, 0}, Cell{0, 1}, Cell{1, 1}, Cell{1, 0}};
        case HilbertVariant::b:
            return {Cell{0, 0}, Cell{1, 0}, Cell{1, 1}, Cell{0, 1}};
        case HilbertVariant::c:
            return {Cell{1, 1}, Cell{0, 1}, Cell{0, 0}, Cell{1, 0}};
        default:
            return {Cell{1, 1}, Cell{1, 0}, Cell{0, 0}, Cell{0, 1}};
    }
}

const std::array<QuadrantStep, 4>& hilbert_recursion(HilbertVariant v) {
    using V = HilbertVariant;
    static const std::array<QuadrantStep, 4> rec_a{
        QuadrantStep{Corner::SW, V::b}, QuadrantStep{Corner::NW, V::a},
        QuadrantStep{Corner::NE, V::a}, QuadrantStep{Corner::SE, V::c}};
    static const std::array<QuadrantStep, 4> rec_b{
        QuadrantStep{Corner::SW, V::a}, QuadrantStep{Corner::SE, V::b},
        QuadrantStep{Corner::NE, V::b}, QuadrantStep{Corner::NW, V::d}};
    static const std::array<QuadrantStep, 4> rec_c{
        QuadrantStep{Corner::NE, V::d}, QuadrantStep{Corner::NW, V::c},
        QuadrantStep{Corner::SW, V::c}, QuadrantStep{Corner::SE, V::a}};
    static const std::array<QuadrantStep, 4> rec_d{
        QuadrantStep{Corner::NE, V::c}, QuadrantStep{Corner::SE, V::d},
        QuadrantStep{Corner::SW, V::d}, QuadrantStep{Corner::NW, V::b}};
    switch (v) {
        case V::a: return rec_a;
        case V::b: return rec_b;
        case V::c: return rec_c;
        default: return rec_d;
    }
}

HilbertVariant quadrant_variant(HilbertVariant v, Corner quadrant) {
    for (const auto& qs : hilbert_recursion(v))
        if (qs.quadrant == quadrant) return qs.variant;
    throw std::logic_error("quadrant_variant: unreachable");
}

namespace {

void emit_path(HilbertVariant v, int level, Cell origin, std::vector<Cell>& out) {
    if (level == 1) {
        for (Cell c : basic_path(v))
            out.push_back({origin.x + c.x, origin.y + c.y});
        return;
    }
    const int half = 1 << (level - 1);
    for (const auto& qs : hilbert_recursion(v)) {
        Cell q{origin.x + (corner_ew(qs.quadrant) == Dir::E ? half : 0),
               origin.y + (corner_ns(qs.quadrant) == Dir::N ? half : 0)};
        emit_path(qs.variant, level - 1, q, out);
    }
}

}  // namespace

std::vector<Cell> hilbert_path(HilbertVariant v, int level) {
    if (level < 1) throw std::invalid_argument("hilbert_path: level must be >= 1");
    if (level > 12) throw std::invalid_argument("hilbert_path: level > 12 not supported");
    std::vector<Cell> out;
    out.reserve(std::size_t{1} << (2 * level));
    emit_path(v, level, {0, 0}, out);
    return out;
}

std::optional<std::pair<std::size_t, std::size_t>> find_square_fill(
    std::span<const Cell> path, int n) {
    if (n < 0 || n > 15) throw std::invalid_argument("find_square_fill: bad n");
    const std::size_t len = std::size_t{1} << (2 * n);
    const int side = 1 << n;
    if (path.size() < len) return std::nullopt;
    std::vector<char> seen(static_cast<std::size_t>(side) * side);
    for (std::size_t i = 0; i + len <= path.size(); ++i) {
        int minx = path[i].x, maxx = path[i].x;
        int miny = path[i].y, maxy = path[i].y;
        for (std::size_t k = 1; k < len; ++k) {
            const Cell& c = path[i + k];
            minx = std::min(minx, c.x);
            maxx = std::max(maxx, c.x);
            miny = std::min(miny, c.y);
            maxy = std::max(maxy, c.y);
        }
        if (maxx - minx + 1 != side || maxy - miny + 1 != side) continue;
        std::fill(seen.begin(), seen.end(), 0);
        bool dup = false;
        for (std::size_t k = 0; k < len; ++k) {
            const Cell& c = path[i + k];
            std::size_t idx = static_cast<std::size_t>(c.y - miny) * side + (c.x - minx);
            if (seen[idx]) {
                dup = true;
                break;
            }
            seen[idx] = 1;
        }
        if (!dup) return std::make_pair(i + 1, i + 1 + len);
    }
    return std::nullopt;
}

}  // namespace hca
