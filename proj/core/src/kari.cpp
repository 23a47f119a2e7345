#include "hca/kari.hpp"

#include <mutex>
#include <stdexcept>

namespace hca {

const char* to_string(KariBasic b) {
    switch (b) {
        case KariBasic::blank_cross: return "blank_cross";
        case KariBasic::bold_cross: return "bold_cross";
        case KariBasic::blank_arm: return "blank_arm";
        case KariBasic::bold_arm: return "bold_arm";
        default: return "mixed_arm";
    }
}

std::uint8_t KariTile::corner_bit(Corner c) const {
    if (is_cross()) {
        return (c == Corner::NW || c == Corner::SE) ? corner_phase
                                                    : static_cast<std::uint8_t>(1 - corner_phase);
    }
    bool top = (c == Corner::NW || c == Corner::NE);
    if (horizontal_arm()) return top ? 0 : 1;
    return top ? 1 : 0;
}

Weight KariTile::stub_weight(int idx) const {
    switch (basic) {
        case KariBasic::blank_arm: return Weight::blank;
        case KariBasic::bold_arm: return Weight::bold;
        case KariBasic::mixed_arm: return idx == 0 ? Weight::bold : Weight::blank;
        default: return Weight::blank;
    }
}

Corner KariTile::principal_orientation() const {
    if (horizontal_arm()) return make_corner(principal_offset, facing);
    return make_corner(facing, principal_offset);
}

Corner KariTile::stub_orientation(int idx) const {
    if (horizontal_arm()) {
        // Stub 0 enters from the north flank travelling S, stub 1 from the south.
        return make_corner(idx == 0 ? Dir::S : Dir::N, stub_offset);
    }
    // Stub 0 enters from the west flank travelling E, stub 1 from the east.
    return make_corner(stub_offset, idx == 0 ? Dir::E : Dir::W);
}

std::uint64_t KariTile::pack() const {
    std::uint64_t k = 0;
    auto push = [&k](std::uint64_t v, int bits) { k = (k << bits) | v; };
    push(static_cast<std::uint64_t>(basic), 3);
    push(static_cast<std::uint64_t>(cross_ns), 2);
    push(static_cast<std::uint64_t>(cross_ew), 2);
    push(static_cast<std::uint64_t>(hilbert), 2);
    push(static_cast<std::uint64_t>(facing), 2);
    push(static_cast<std::uint64_t>(principal_offset), 2);
    push(static_cast<std::uint64_t>(stub_offset), 2);
    push(static_cast<std::uint64_t>(stub_hilbert[0]), 2);
    push(static_cast<std::uint64_t>(stub_hilbert[1]), 2);
    push(corner_phase, 1);
    push(h_parity, 1);
    push(v_parity, 1);
    push(static_cast<std::uint64_t>(direction), 2);
    return k;
}

std::array<HilbertVariant, 2> mixed_arm_stub_hilberts(HilbertVariant principal, Dir facing) {
    if (!is_vertical(facing)) {
        return {quadrant_variant(principal, make_corner(Dir::N, facing)),
                quadrant_variant(principal, make_corner(Dir::S, facing))};
    }
    return {quadrant_variant(principal, make_corner(facing, Dir::W)),
            quadrant_variant(principal, make_corner(facing, Dir::E))};
}

namespace {

constexpr std::array<std::pair<std::uint8_t, std::uint8_t>, 3> kNonBlankParities{
    std::pair<std::uint8_t, std::uint8_t>{0, 1}, {1, 0}, {1, 1}};

struct Arrow {
    bool vertical = false;
    Dir travel = Dir::N;
    Dir offset = Dir::N;
    Weight weight = Weight::blank;
    HilbertVariant hilbert = HilbertVariant::a;
    friend bool operator==(const Arrow&, const Arrow&) = default;
};

enum class PortKind : std::uint8_t { none, head, tail_principal, tail_stub };

struct Port {
    PortKind kind = PortKind::none;
    Arrow arrow;
};

Port port(const KariTile& t, Dir edge) {
    if (t.is_cross()) {
        Weight w = t.basic == KariBasic::blank_cross ? Weight::blank : Weight::bold;
        if (is_vertical(edge))
            return {PortKind::head, Arrow{true, edge, t.cross_ew, w, t.hilbert}};
        return {PortKind::head, Arrow{false, edge, t.cross_ns, w, t.hilbert}};
    }
    const bool horiz = t.horizontal_arm();
    Arrow principal{!horiz, t.facing, t.principal_offset, Weight::bold, t.hilbert};
    if (edge == t.facing) return {PortKind::head, principal};
    if (edge == opposite(t.facing)) return {PortKind::tail_principal, principal};
    int idx;
    Dir travel;
    if (horiz) {
        idx = edge == Dir::N ? 0 : 1;
        travel = edge == Dir::N ? Dir::S : Dir::N;  // stubs point inward
    } else {
        idx = edge == Dir::W ? 0 : 1;
        travel = edge == Dir::W ? Dir::E : Dir::W;
    }
    // Stubs run perpendicular to the arm axis.
    return {PortKind::tail_stub,
            Arrow{horiz, travel, t.stub_offset, t.stub_weight(idx),
                  t.stub_hilbert[static_cast<std::size_t>(idx)]}};
}

bool in_set(HilbertVariant h, HilbertVariant x, HilbertVariant y) { return h == x || h == y; }

}  // namespace

KariTileSet::KariTileSet(Rule6Variant rule6) : rule6_(rule6) {
    using V = HilbertVariant;
    const std::array<Dir, 2> ns{Dir::N, Dir::S};
    const std::array<Dir, 2> ew{Dir::E, Dir::W};

    // Crosses.
    for (KariBasic basic : {KariBasic::blank_cross, KariBasic::bold_cross}) {
        for (Dir cns : ns)
            for (Dir cew : ew)
                for (V h : all_variants)
                    for (std::uint8_t phase : {0, 1}) {
                        if (basic == KariBasic::blank_cross) {
                            for (Dir dir : all_dirs) {
                                KariTile t;
                                t.basic = basic;
                                t.cross_ns = cns;
                                t.cross_ew = cew;
                                t.hilbert = h;
                                t.corner_phase = phase;
                                t.direction = dir;
                                tiles_.push_back(t);
                            }
                        } else {
                            for (auto [hp, vp] : kNonBlankParities)
                                for (Dir dir : all_dirs) {
                                    KariTile t;
                                    t.basic = basic;
                                    t.cross_ns = cns;
                                    t.cross_ew = cew;
                                    t.hilbert = h;
                                    t.corner_phase = phase;
                                    t.h_parity = hp;
                                    t.v_parity = vp;
                                    t.direction = dir;
                                    tiles_.push_back(t);
                                }
                        }
                    }
    }

    // Arms.
    for (KariBasic basic : {KariBasic::blank_arm, KariBasic::bold_arm, KariBasic::mixed_arm}) {
        for (Dir facing : all_dirs) {
            const bool horiz = !is_vertical(facing);
            const auto& po_range = horiz ? ns : ew;
            const auto& so_range = horiz ? ew : ns;
            for (Dir po : po_range)
                for (Dir so : so_range)
                    for (V ph : all_variants) {
                        std::vector<std::array<V, 2>> stub_choices;
                        if (basic == KariBasic::mixed_arm) {
                            stub_choices.push_back(mixed_arm_stub_hilberts(ph, facing));
                        } else {
                            for (V s0 : all_variants)
                                for (V s1 : all_variants)
                                    stub_choices.push_back({s0, s1});
                        }
                        for (const auto& sh : stub_choices)
                            for (auto [hp, vp] : kNonBlankParities)
                                for (Dir dir : all_dirs) {
                                    KariTile t;
                                    t.basic = basic;
                                    t.hilbert = ph;
                                    t.facing = facing;
                                    t.principal_offset = po;
                                    t.stub_offset = so;
                                    t.stub_hilbert = sh;
                                    t.h_parity = hp;
                                    t.v_parity = vp;
                                    t.direction = dir;
                                    tiles_.push_back(t);
                                }
                    }
        }
    }

    index_.reserve(tiles_.size());
    for (std::uint32_t i = 0; i < tiles_.size(); ++i) index_.emplace(tiles_[i].pack(), i);
    if (index_.size() != tiles_.size())
        throw std::logic_error("KariTileSet: duplicate tiles in enumeration");
}

std::string KariTileSet::name() const {
    return rule6_ == Rule6Variant::corrected_e ? "kari" : "kari:rule6a";
}

std::optional<std::uint32_t> KariTileSet::id_of(const KariTile& t) const {
    auto it = index_.find(t.pack());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t KariTileSet::count_of(KariBasic b) const {
    std::size_t n = 0;
    for (const auto& t : tiles_)
        if (t.basic == b) ++n;
    return n;
}

std::shared_ptr<const KariTileSet> KariTileSet::instance(Rule6Variant rule6) {
    static std::shared_ptr<const KariTileSet> corrected;
    static std::shared_ptr<const KariTileSet> paper;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto& slot = rule6 == Rule6Variant::corrected_e ? corrected : paper;
    if (!slot) slot = std::make_shared<const KariTileSet>(rule6);
    return slot;
}

bool KariTileSet::valid_at(const Grid& grid, Cell cell) const {
    const KariTile& t = tiles_[grid.at(cell)];

    // Edge neighbors are required by rule 5 (parity alternation) alone.
    std::array<const KariTile*, 4> nb{};
    for (Dir d : all_dirs) {
        auto r = grid.resolve(step(cell, d));
        if (!r) return false;
        nb[static_cast<std::size_t>(d)] = &tiles_[grid.at(*r)];
    }

    // Rule 5.
    if (t.h_parity == nb[static_cast<std::size_t>(Dir::E)]->h_parity) return false;
    if (t.h_parity == nb[static_cast<std::size_t>(Dir::W)]->h_parity) return false;
    if (t.v_parity == nb[static_cast<std::size_t>(Dir::N)]->v_parity) return false;
    if (t.v_parity == nb[static_cast<std::size_t>(Dir::S)]->v_parity) return false;

    // Rules 1-3: outward heads meet matching tails, inward stubs are fed by
    // matching heads.
    for (Dir d : all_dirs) {
        Port p = port(t, d);
        Port q = port(*nb[static_cast<std::size_t>(d)], opposite(d));
        if (p.kind == PortKind::head) {
            if (q.kind != PortKind::tail_principal && q.kind != PortKind::tail_stub) return false;
            if (!(p.arrow == q.arrow)) return false;
        } else if (p.kind == PortKind::tail_stub) {
            if (q.kind != PortKind::head) return false;
            if (!(p.arrow == q.arrow)) return false;
        }
    }

    // Rule 4: corner parities agree across NW<->SE diagonal contacts.
    auto nw = grid.resolve({cell.x - 1, cell.y + 1});
    auto se = grid.resolve({cell.x + 1, cell.y - 1});
    if (!nw || !se) return false;
    const KariTile& tnw = tiles_[grid.at(*nw)];
    const KariTile& tse = tiles_[grid.at(*se)];
    if (t.corner_bit(Corner::NW) != tnw.corner_bit(Corner::SE)) return false;
    if (t.corner_bit(Corner::SE) != tse.corner_bit(Corner::NW)) return false;

    // Rule 6.
    using V = HilbertVariant;
    if (t.basic == KariBasic::blank_cross) {
        bool ok = false;
        switch (t.direction) {
            case Dir::N:
                ok = (tnw.basic == KariBasic::bold_cross && tnw.hilbert == V::b) ||
                     (tnw.is_arm() && is_vertical(tnw.facing) &&
                      in_set(tnw.stub_hilbert[1], V::a, V::d));
                break;
            case Dir::W:
                ok = (tnw.basic == KariBasic::bold_cross && tnw.hilbert == V::d) ||
                     (tnw.is_arm() && !is_vertical(tnw.facing) &&
                      in_set(tnw.stub_hilbert[1], V::c, V::b));
                if (rule6_ == Rule6Variant::as_printed) {
                    // The printed fourth case duplicates direction W against the
                    // SE neighbor.
                    ok = ok ||
                         (tse.basic == KariBasic::bold_cross && tse.hilbert == V::a) ||
                         (tse.is_arm() && !is_vertical(tse.facing) &&
                          in_set(tse.stub_hilbert[1], V::c, V::b));
                }
                break;
            case Dir::S:
                ok = (tse.basic == KariBasic::bold_cross && tse.hilbert == V::c) ||
                     (tse.is_arm() && is_vertical(tse.facing) &&
                      in_set(tse.stub_hilbert[0], V::a, V::d));
                break;
            case Dir::E:
                if (rule6_ == Rule6Variant::corrected_e) {
                    ok = (tse.basic == KariBasic::bold_cross && tse.hilbert == V::a) ||
                         (tse.is_arm() && !is_vertical(tse.facing) &&
                          in_set(tse.stub_hilbert[0], V::c, V::b));
                }
                break;
        }
        if (!ok) return false;
    } else {
        // Non-blank tiles must agree with every neighboring blank cross that
        // points at them.
        for (Dir d : all_dirs) {
            const KariTile& n = *nb[static_cast<std::size_t>(d)];
            if (n.basic != KariBasic::blank_cross) continue;
            if (n.direction != opposite(d)) continue;  // not pointing at us
            if (t.direction != n.direction) return false;
        }
    }
    return true;
}

}  // namespace hca
