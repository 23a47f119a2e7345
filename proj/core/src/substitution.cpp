#include "hca/substitution.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace hca {

const char* to_string(Side s) {
    switch (s) {
        case Side::none: return "-";
        case Side::N: return "N";
        case Side::S: return "S";
        case Side::E: return "E";
        default: return "W";
    }
}

Side side_of(Dir d) {
    switch (d) {
        case Dir::N: return Side::N;
        case Dir::S: return Side::S;
        case Dir::E: return Side::E;
        default: return Side::W;
    }
}

namespace {

// Matches 4 consecutive path cells against the four basic shapes.
std::optional<HilbertVariant> block_variant(std::span<const Cell> quad, Cell origin) {
    for (HilbertVariant v : all_variants) {
        auto base = basic_path(v);
        bool ok = true;
        for (int k = 0; k < 4; ++k) {
            if (Cell{origin.x + base[k].x, origin.y + base[k].y} != quad[k]) {
                ok = false;
                break;
            }
        }
        if (ok) return v;
    }
    return std::nullopt;
}

// Blocks of the level-2 path of v, indexed by quadrant, with interior
// entry/exit sides filled in and `none` at the global endpoints.
struct LevelTwoGrouping {
    std::array<SubstTile, 4> by_quadrant;     // index = static_cast<int>(Corner)
    std::array<Corner, 4> traversal;          // quadrants in visit order
};

LevelTwoGrouping level_two_grouping(HilbertVariant v) {
    auto path = hilbert_path(v, 2);
    auto grouping = group_path(path);
    LevelTwoGrouping out;
    for (int i = 0; i < 4; ++i) {
        Cell o = grouping.block_origins[static_cast<std::size_t>(i)];
        Corner q = o.x == 0 ? (o.y == 0 ? Corner::SW : Corner::NW)
                            : (o.y == 0 ? Corner::SE : Corner::NE);
        out.by_quadrant[static_cast<int>(q)] = grouping.tiles[static_cast<std::size_t>(i)];
        out.traversal[static_cast<std::size_t>(i)] = q;
    }
    return out;
}

std::vector<SubstTile> build_alphabet() {
    std::unordered_set<int> seen;
    std::vector<SubstTile> tiles;
    for (HilbertVariant v : all_variants) {
        for (int level = 2; level <= 5; ++level) {
            auto grouping = group_path(hilbert_path(v, level));
            for (const SubstTile& t : grouping.tiles) {
                if (t.entry == Side::none || t.exit == Side::none) continue;
                int key = static_cast<int>(t.variant) * 64 + static_cast<int>(t.entry) * 8 +
                          static_cast<int>(t.exit);
                if (seen.insert(key).second) tiles.push_back(t);
            }
        }
    }
    std::sort(tiles.begin(), tiles.end());
    return tiles;
}

const std::vector<SubstTile>& alphabet_vec() {
    static const std::vector<SubstTile> alpha = build_alphabet();
    return alpha;
}

std::uint32_t pack_block(const SubstBlock& b) {
    std::uint32_t key = 0;
    for (int i = 0; i < 4; ++i) {
        auto id = subst_tile_id(b.tiles[static_cast<std::size_t>(i)]);
        if (!id) return 0xffffffffu;
        key |= static_cast<std::uint32_t>(*id) << (8 * i);
    }
    return key;
}

const std::unordered_map<std::uint32_t, SubstTile>& inverse_rule() {
    static const std::unordered_map<std::uint32_t, SubstTile> inv = [] {
        std::unordered_map<std::uint32_t, SubstTile> m;
        for (const SubstTile& t : alphabet_vec()) m.emplace(pack_block(substitute(t)), t);
        return m;
    }();
    return inv;
}

std::string grid_key(const SubstGrid& g) {
    std::string s;
    s.reserve(static_cast<std::size_t>(g.width) * g.height + 2);
    s.push_back(static_cast<char>(g.width));
    for (const SubstTile& t : g.cells)
        s.push_back(static_cast<char>(*subst_tile_id(t)));
    return s;
}

}  // namespace

std::span<const SubstTile> subst_alphabet() { return alphabet_vec(); }

std::optional<int> subst_tile_id(const SubstTile& t) {
    const auto& alpha = alphabet_vec();
    auto it = std::lower_bound(alpha.begin(), alpha.end(), t);
    if (it != alpha.end() && *it == t) return static_cast<int>(it - alpha.begin());
    return std::nullopt;
}

SubstBlock substitute(const SubstTile& t) {
    if (!subst_tile_id(t)) throw std::invalid_argument("substitute: tile not in alphabet");
    static const std::array<LevelTwoGrouping, 4> groupings = [] {
        std::array<LevelTwoGrouping, 4> g;
        for (HilbertVariant v : all_variants)
            g[static_cast<std::size_t>(v)] = level_two_grouping(v);
        return g;
    }();
    const LevelTwoGrouping& g = groupings[static_cast<std::size_t>(t.variant)];
    SubstBlock out;
    for (Corner q : all_corners) {
        SubstTile sub = g.by_quadrant[static_cast<int>(q)];
        if (q == g.traversal.front()) sub.entry = t.entry;
        if (q == g.traversal.back()) sub.exit = t.exit;
        int x = corner_ew(q) == Dir::E ? 1 : 0;
        int y = corner_ns(q) == Dir::N ? 1 : 0;
        out.at(x, y) = sub;
    }
    return out;
}

SubstGrid expand(const SubstTile& s, int n) {
    if (n < 0 || n > 7) throw std::invalid_argument("expand: n out of range");
    SubstGrid g(1, 1);
    g.at(0, 0) = s;
    for (int step = 0; step < n; ++step) {
        SubstGrid next(g.width * 2, g.height * 2);
        for (int y = 0; y < g.height; ++y)
            for (int x = 0; x < g.width; ++x) {
                SubstBlock b = substitute(g.at(x, y));
                for (int dy = 0; dy < 2; ++dy)
                    for (int dx = 0; dx < 2; ++dx)
                        next.at(2 * x + dx, 2 * y + dy) = b.at(dx, dy);
            }
        g = std::move(next);
    }
    return g;
}

DeriveResult derive(const SubstGrid& g) {
    const auto& inv = inverse_rule();
    DeriveResult best;
    int viable = 0;
    for (int sy = 0; sy < 2; ++sy) {
        for (int sx = 0; sx < 2; ++sx) {
            int nx = (g.width - sx) / 2;
            int ny = (g.height - sy) / 2;
            if (nx <= 0 || ny <= 0) continue;
            SubstGrid pre(nx, ny);
            bool ok = true;
            for (int y = 0; ok && y < ny; ++y) {
                for (int x = 0; ok && x < nx; ++x) {
                    SubstBlock b;
                    for (int dy = 0; dy < 2; ++dy)
                        for (int dx = 0; dx < 2; ++dx)
                            b.at(dx, dy) = g.at(sx + 2 * x + dx, sy + 2 * y + dy);
                    auto it = inv.find(pack_block(b));
                    if (it == inv.end()) {
                        ok = false;
                    } else {
                        pre.at(x, y) = it->second;
                    }
                }
            }
            if (ok) {
                ++viable;
                best.shift = {sx, sy};
                best.preimage = std::move(pre);
            }
        }
    }
    if (viable == 0) {
        best.status = DeriveResult::Status::not_admissible;
    } else if (viable > 1) {
        best.status = DeriveResult::Status::not_unique;
    } else {
        best.status = DeriveResult::Status::ok;
    }
    return best;
}

std::vector<SubstGrid> admissible_blocks(int n, int w, int h) {
    if (w < 1 || h < 1 || w > (1 << n) || h > (1 << n))
        throw std::invalid_argument("admissible_blocks: window exceeds 2^n");
    std::vector<SubstGrid> out;
    std::unordered_set<std::string> seen;
    for (const SubstTile& s : subst_alphabet()) {
        SubstGrid big = expand(s, n);
        for (int y = 0; y + h <= big.height; ++y) {
            for (int x = 0; x + w <= big.width; ++x) {
                SubstGrid sub(w, h);
                for (int dy = 0; dy < h; ++dy)
                    for (int dx = 0; dx < w; ++dx)
                        sub.at(dx, dy) = big.at(x + dx, y + dy);
                if (seen.insert(grid_key(sub)).second) out.push_back(std::move(sub));
            }
        }
    }
    return out;
}

PathGrouping group_path(std::span<const Cell> path) {
    if (path.empty() || path.size() % 4 != 0)
        throw std::invalid_argument("group_path: path length must be a positive multiple of 4");
    PathGrouping out;
    out.tiles.reserve(path.size() / 4);
    out.block_origins.reserve(path.size() / 4);
    for (std::size_t i = 0; i < path.size(); i += 4) {
        auto quad = path.subspan(i, 4);
        int minx = quad[0].x, miny = quad[0].y;
        for (const Cell& c : quad) {
            minx = std::min(minx, c.x);
            miny = std::min(miny, c.y);
        }
        Cell origin{minx, miny};
        auto v = block_variant(quad, origin);
        if (!v) throw std::invalid_argument("group_path: quadruple is not a 2x2 block path");
        SubstTile t{*v, Side::none, Side::none};
        if (i > 0) {
            auto d = dir_between(path[i - 1], quad[0]);
            if (!d) throw std::invalid_argument("group_path: non-unit step between blocks");
            // The side crossed on the way in is opposite to the step direction.
            t.entry = side_of(opposite(*d));
        }
        if (i + 4 < path.size()) {
            auto d = dir_between(quad[3], path[i + 4]);
            if (!d) throw std::invalid_argument("group_path: non-unit step between blocks");
            t.exit = side_of(*d);
        }
        out.tiles.push_back(t);
        out.block_origins.push_back(origin);
    }
    return out;
}

}  // namespace hca
