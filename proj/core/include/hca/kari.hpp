#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hca/grid.hpp"
#include "hca/hilbert.hpp"

namespace hca {

// Kari's directed tile set, built on Robinson-style square tiles.
//
// Geometric reading used here: every tile carries arrows running along the
// two axes, each displaced off-center toward one side (its offset). A cross
// is the crossing of a full horizontal and a full vertical line, both
// double-headed, so a cross presents an arrow head on all four edges. The
// orientation label of a cross is the quadrant holding the crossing point,
// i.e. the pair (offset of the horizontal line, offset of the vertical
// line). An arm carries one full line along its axis (the principal arrow,
// head at the facing edge, tail at the back edge) and is crossed by two
// inward stubs of the perpendicular axis, one per flank, sharing a lateral
// offset. The orientation label of any single arrow combines its travel
// direction with its offset, which reproduces the printed side-arrow label
// scheme: the two legal labelings of a horizontal arm's side arrows,
// (upper SE, lower NE) and (upper SW, lower NW), are exactly the two choices
// of stub offset.
//
// Arrow heads must meet matching tails across edges (rules 1-3); matching
// compares axis, travel, offset, weight (bold/blank) and Hilbert label.
// Corner-parity labels couple across NW<->SE diagonal contacts (rule 4),
// horizontal and vertical parity bits alternate (rule 5), and direction
// labels obey the blank-cross steering conditions (rule 6).

enum class KariBasic : std::uint8_t {
    blank_cross = 0,
    bold_cross = 1,
    blank_arm = 2,
    bold_arm = 3,
    mixed_arm = 4,
};

enum class Weight : std::uint8_t { blank = 0, bold = 1 };

const char* to_string(KariBasic b);

struct KariTile {
    KariBasic basic = KariBasic::blank_cross;
    // Crosses: offsets of the two lines; orientation label = (cross_ns, cross_ew).
    Dir cross_ns = Dir::N;
    Dir cross_ew = Dir::E;
    // Crosses: the shared head label. Arms: the principal arrow's Hilbert label.
    HilbertVariant hilbert = HilbertVariant::a;
    // Arms only.
    Dir facing = Dir::N;
    Dir principal_offset = Dir::N;  // N/S for horizontal arms, E/W for vertical
    Dir stub_offset = Dir::N;       // E/W for horizontal arms, N/S for vertical
    std::array<HilbertVariant, 2> stub_hilbert{HilbertVariant::a, HilbertVariant::a};
    // Corner parity. Arms are fixed by their axis; crosses have a free phase
    // (value of the NW and SE corner bits; NE and SW carry the complement).
    std::uint8_t corner_phase = 0;
    std::uint8_t h_parity = 0;
    std::uint8_t v_parity = 0;
    Dir direction = Dir::N;  // d(s)

    bool is_cross() const {
        return basic == KariBasic::blank_cross || basic == KariBasic::bold_cross;
    }
    bool is_arm() const { return !is_cross(); }
    bool horizontal_arm() const { return is_arm() && !is_vertical(facing); }
    Corner orientation() const { return make_corner(cross_ns, cross_ew); }
    std::uint8_t corner_bit(Corner c) const;
    Weight stub_weight(int idx) const;
    // Orientation label of the principal arrow / the two side stubs.
    Corner principal_orientation() const;
    Corner stub_orientation(int idx) const;

    std::uint64_t pack() const;
    friend bool operator==(const KariTile&, const KariTile&) = default;
};

// Typo switch for rule 6's fourth steering case, which the printed rules give
// as a second W case referencing the SE neighbor. `corrected_e` reads it as
// the E case (with the upper side arrow), which is the unique reading under
// which the hierarchical B-configurations validate; `as_printed` keeps the text
// as printed.
enum class Rule6Variant : std::uint8_t { as_printed, corrected_e };

class KariTileSet : public DirectedTileSet,
                    public std::enable_shared_from_this<KariTileSet> {
public:
    explicit KariTileSet(Rule6Variant rule6 = Rule6Variant::corrected_e);

    std::string name() const override;
    std::uint32_t tile_count() const override { return static_cast<std::uint32_t>(tiles_.size()); }
    Dir direction(std::uint32_t tile) const override { return tiles_[tile].direction; }
    int radius() const override { return 1; }
    bool valid_at(const Grid& grid, Cell cell) const override;

    Rule6Variant rule6() const { return rule6_; }
    const KariTile& tile(std::uint32_t id) const { return tiles_[id]; }
    const std::vector<KariTile>& tiles() const { return tiles_; }
    std::optional<std::uint32_t> id_of(const KariTile& t) const;
    std::size_t count_of(KariBasic b) const;

    // Shared instances (the enumeration is deterministic, so they are safe to
    // reuse across threads).
    static std::shared_ptr<const KariTileSet> instance(
        Rule6Variant rule6 = Rule6Variant::corrected_e);

private:
    Rule6Variant rule6_;
    std::vector<KariTile> tiles_;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

// Side Hilbert labels a mixed arm must carry, by the quadrant rule: each side
// stub takes the sub-path variant of the quadrant at the corner formed by the
// facing direction and the stub's flank.
std::array<HilbertVariant, 2> mixed_arm_stub_hilberts(HilbertVariant principal, Dir facing);

}  // namespace hca
