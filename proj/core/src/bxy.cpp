#include "hca/bxy.hpp"

#include <optional>
#include <stdexcept>

namespace hca {

namespace {

struct CellSpec {
    enum class Kind : std::uint8_t { blank, bold, arm } kind = Kind::blank;
    Corner orientation = Corner::NE;            // crosses
    HilbertVariant hilbert = HilbertVariant::a; // cross label / principal label
    Dir facing = Dir::N;                        // arms
    Dir principal_offset = Dir::N;              // arms
    Dir stub_offset = Dir::N;
    std::array<HilbertVariant, 2> stub_hilbert{HilbertVariant::a, HilbertVariant::a};
    std::array<Weight, 2> stub_weight{Weight::blank, Weight::blank};
    std::uint8_t corner_phase = 0;              // crosses
    Dir direction = Dir::N;
    bool is_cross() const { return kind != Kind::arm; }
};

struct Builder {
    int side = 0;
    std::vector<CellSpec> cells;

    CellSpec& at(int x, int y) { return cells[static_cast<std::size_t>(y) * side + x]; }
    const CellSpec& at(int x, int y) const {
        return cells[static_cast<std::size_t>(y) * side + x];
    }
    bool inside(int x, int y) const { return x >= 0 && x < side && y >= 0 && y < side; }

    void place_block(int level, Cell origin, Corner orientation, HilbertVariant label) {
        if (level == 0) {
            CellSpec& s = at(origin.x, origin.y);
            s.kind = CellSpec::Kind::blank;
            s.orientation = orientation;
            s.hilbert = label;
            return;
        }
        const int half = 1 << level;
        Cell center{origin.x + half - 1, origin.y + half - 1};
        CellSpec& c = at(center.x, center.y);
        c.kind = CellSpec::Kind::bold;
        c.orientation = orientation;
        c.hilbert = label;
        for (Dir d : all_dirs) {
            Dir po = is_vertical(d) ? corner_ew(orientation) : corner_ns(orientation);
            for (int i = 1; i < half; ++i) {
                Cell p = center;
                Cell off = dir_offset(d);
                p.x += off.x * i;
                p.y += off.y * i;
                CellSpec& a = at(p.x, p.y);
                a.kind = CellSpec::Kind::arm;
                a.facing = d;
                a.hilbert = label;
                a.principal_offset = po;
            }
        }
        for (Corner q : all_corners) {
            Cell sub{origin.x + (corner_ew(q) == Dir::E ? half : 0),
                     origin.y + (corner_ns(q) == Dir::N ? half : 0)};
            place_block(level - 1, sub, opposite(q), quadrant_variant(label, q));
        }
    }

    // Head arriving at a cell from neighbor spec `r`, travelling `travel`.
    struct Feed {
        Dir offset;
        Weight weight;
        HilbertVariant hilbert;
    };
    std::optional<Feed> head_toward(const CellSpec& r, Dir travel) const {
        if (r.is_cross()) {
            Dir off = is_vertical(travel) ? corner_ew(r.orientation) : corner_ns(r.orientation);
            Weight w = r.kind == CellSpec::Kind::blank ? Weight::blank : Weight::bold;
            return Feed{off, w, r.hilbert};
        }
        if (r.facing != travel) return std::nullopt;
        return Feed{r.principal_offset, Weight::bold, r.hilbert};
    }

    void assign_stubs() {
        for (int y = 0; y < side; ++y) {
            for (int x = 0; x < side; ++x) {
                CellSpec& s = at(x, y);
                if (s.kind != CellSpec::Kind::arm) continue;
                const bool horiz = !is_vertical(s.facing);
                const std::array<Dir, 2> flanks =
                    horiz ? std::array<Dir, 2>{Dir::N, Dir::S} : std::array<Dir, 2>{Dir::W, Dir::E};
                bool offset_set = false;
                for (int i = 0; i < 2; ++i) {
                    Cell rp = step({x, y}, flanks[static_cast<std::size_t>(i)]);
                    std::optional<Feed> feed;
                    if (inside(rp.x, rp.y))
                        feed = head_toward(at(rp.x, rp.y),
                                           opposite(flanks[static_cast<std::size_t>(i)]));
                    if (feed) {
                        s.stub_offset = feed->offset;
                        offset_set = true;
                        s.stub_hilbert[static_cast<std::size_t>(i)] = feed->hilbert;
                        s.stub_weight[static_cast<std::size_t>(i)] = feed->weight;
                    } else {
                        // Outside the construction; pick the lattice default so
                        // the tile still exists. Such cells sit on the outer
                        // ring, which crops never include.
                        if (!offset_set)
                            s.stub_offset = horiz ? (x % 4 == 0 ? Dir::E : Dir::W)
                                                  : (y % 4 == 0 ? Dir::N : Dir::S);
                        s.stub_hilbert[static_cast<std::size_t>(i)] = s.hilbert;
                        s.stub_weight[static_cast<std::size_t>(i)] = Weight::blank;
                    }
                }
            }
        }
    }

    void assign_path(HilbertVariant top_label, int m) {
        auto sub_path = hilbert_path(top_label, m);
        for (std::size_t i = 0; i < sub_path.size(); ++i) {
            Cell b{2 * sub_path[i].x, 2 * sub_path[i].y};
            Dir d;
            if (i + 1 < sub_path.size()) {
                Cell n{2 * sub_path[i + 1].x, 2 * sub_path[i + 1].y};
                Cell mid{(b.x + n.x) / 2, (b.y + n.y) / 2};
                auto dd = dir_between(sub_path[i], sub_path[i + 1]);
                if (!dd) throw std::logic_error("bxy: blank path is not connected");
                d = *dd;
                at(mid.x, mid.y).direction = d;
            } else {
                // Exit side convention: the opening side of the variant.
                switch (top_label) {
                    case HilbertVariant::a: d = Dir::S; break;
                    case HilbertVariant::b: d = Dir::W; break;
                    case HilbertVariant::c: d = Dir::E; break;
                    default: d = Dir::N; break;
                }
            }
            at(b.x, b.y).direction = d;
        }
    }

    void default_directions() {
        for (int y = 0; y < side; ++y)
            for (int x = 0; x < side; ++x) {
                CellSpec& s = at(x, y);
                if (s.kind == CellSpec::Kind::arm)
                    s.direction = s.facing;
                else if (s.kind == CellSpec::Kind::bold)
                    s.direction = corner_ns(s.orientation);
            }
    }

    std::uint8_t arm_bit(const CellSpec& s, Corner c) const {
        bool top = (c == Corner::NW || c == Corner::NE);
        if (!is_vertical(s.facing)) return top ? 0 : 1;
        return top ? 1 : 0;
    }

    // Solves corner phases along NW->SE diagonals: consecutive diagonal cells
    // share a corner point, crosses carry a free phase there, arm corners are
    // fixed by their axis.
    void solve_corner_phases() {
        for (int start = 0; start < 2 * side - 1; ++start) {
            // Cells (x, y) with x + y == start, scanned with x ascending
            // (moving SE along the diagonal).
            std::vector<Cell> diag;
            for (int x = std::max(0, start - side + 1); x <= std::min(side - 1, start); ++x)
                diag.push_back({x, start - x});
            std::size_t i = 0;
            while (i < diag.size()) {
                const CellSpec& s = at(diag[i].x, diag[i].y);
                if (!s.is_cross()) {
                    ++i;
                    continue;
                }
                std::size_t j = i;
                while (j + 1 < diag.size() && at(diag[j + 1].x, diag[j + 1].y).is_cross()) ++j;
                std::optional<std::uint8_t> value;
                if (i > 0) {
                    const CellSpec& left = at(diag[i - 1].x, diag[i - 1].y);
                    value = arm_bit(left, Corner::SE);
                }
                if (j + 1 < diag.size()) {
                    const CellSpec& right = at(diag[j + 1].x, diag[j + 1].y);
                    std::uint8_t v = arm_bit(right, Corner::NW);
                    if (value && *value != v)
                        throw std::logic_error("bxy: inconsistent corner-parity chain");
                    value = v;
                }
                for (std::size_t k = i; k <= j; ++k)
                    at(diag[k].x, diag[k].y).corner_phase = value.value_or(0);
                i = j + 1;
            }
        }
    }

    KariTile tile_at(int x, int y) const {
        const CellSpec& s = at(x, y);
        KariTile t;
        if (s.is_cross()) {
            t.basic = s.kind == CellSpec::Kind::blank ? KariBasic::blank_cross
                                                      : KariBasic::bold_cross;
            t.cross_ns = corner_ns(s.orientation);
            t.cross_ew = corner_ew(s.orientation);
            t.hilbert = s.hilbert;
            t.corner_phase = s.corner_phase;
            if (t.basic == KariBasic::bold_cross) {
                t.h_parity = static_cast<std::uint8_t>(x & 1);
                t.v_parity = static_cast<std::uint8_t>(y & 1);
            }
            t.direction = s.direction;
            return t;
        }
        const bool b0 = s.stub_weight[0] == Weight::bold;
        const bool b1 = s.stub_weight[1] == Weight::bold;
        if (b0 != b1) throw std::logic_error("bxy: mixed stub weights not expected here");
        t.basic = b0 ? KariBasic::bold_arm : KariBasic::blank_arm;
        t.hilbert = s.hilbert;
        t.facing = s.facing;
        t.principal_offset = s.principal_offset;
        t.stub_offset = s.stub_offset;
        t.stub_hilbert = s.stub_hilbert;
        t.h_parity = static_cast<std::uint8_t>(x & 1);
        t.v_parity = static_cast<std::uint8_t>(y & 1);
        t.direction = s.direction;
        return t;
    }
};

}  // namespace

BxyResult build_bxy(std::shared_ptr<const KariTileSet> tiles, int level, Corner orientation,
                    HilbertVariant label, int margin) {
    if (!tiles) throw std::invalid_argument("build_bxy: null tileset");
    if (level < 0 || level > 4) throw std::invalid_argument("build_bxy: level must be in [0, 4]");
    const int max_margin = (1 << (level + 1)) - 1;
    if (margin < 0 || margin > max_margin)
        throw std::invalid_argument("build_bxy: margin must be in [0, " +
                                    std::to_string(max_margin) + "]");

    const int m = level + 2;
    const Corner q1 = orientation;
    const Corner q2 = opposite(q1);

    // Central label of the construction whose (q1, q2) sub-block carries the
    // requested label.
    std::optional<HilbertVariant> top;
    for (HilbertVariant x : all_variants)
        if (quadrant_variant(quadrant_variant(x, q1), q2) == label) top = x;
    if (!top) throw std::logic_error("build_bxy: no central label candidate");

    Builder b;
    b.side = (1 << (m + 1)) - 1;
    b.cells.assign(static_cast<std::size_t>(b.side) * b.side, CellSpec{});
    b.place_block(m, {0, 0}, orientation, *top);
    b.assign_stubs();
    b.default_directions();
    b.assign_path(*top, m);
    b.solve_corner_phases();

    const int quarter = 1 << (m - 1);
    Cell copy_origin;
    switch (q1) {
        case Corner::NE: copy_origin = {2 * quarter, 2 * quarter}; break;
        case Corner::NW: copy_origin = {quarter, 2 * quarter}; break;
        case Corner::SE: copy_origin = {2 * quarter, quarter}; break;
        default: copy_origin = {quarter, quarter}; break;
    }
    const int block_side = (1 << (level + 1)) - 1;
    const int crop_side = block_side + 2 * margin;
    Cell crop_origin{copy_origin.x - margin, copy_origin.y - margin};

    BxyResult out;
    out.level = level;
    out.margin = margin;
    out.orientation = orientation;
    out.label = label;
    out.origin_global = crop_origin;
    out.grid = Grid(tiles, crop_side, crop_side, Topology::window);
    out.grid.set_origin(crop_origin);
    for (int y = 0; y < crop_side; ++y)
        for (int x = 0; x < crop_side; ++x) {
            KariTile t = b.tile_at(crop_origin.x + x, crop_origin.y + y);
            auto id = tiles->id_of(t);
            if (!id) throw std::logic_error("build_bxy: constructed tile not in enumeration");
            out.grid.set({x, y}, *id);
        }

    // Designated path: the contiguous run of the global blank path inside the
    // level-n block.
    auto sub_path = hilbert_path(*top, m);
    bool started = false;
    for (const Cell& sc : sub_path) {
        Cell g{2 * sc.x, 2 * sc.y};
        bool in_block = g.x >= copy_origin.x && g.x < copy_origin.x + block_side &&
                        g.y >= copy_origin.y && g.y < copy_origin.y + block_side;
        if (in_block) {
            out.blank_path.push_back({g.x - crop_origin.x, g.y - crop_origin.y});
            started = true;
        } else if (started && out.blank_path.size() < (std::size_t{1} << (2 * level))) {
            throw std::logic_error("build_bxy: designated path is not contiguous");
        }
    }
    if (out.blank_path.size() != (std::size_t{1} << (2 * level)))
        throw std::logic_error("build_bxy: designated path has wrong length");
    out.entry = out.blank_path.front();
    return out;
}

}  // namespace hca
