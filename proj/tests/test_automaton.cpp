#include "doctest.h"

#include <algorithm>

#include "chain_tileset.hpp"
#include "hca/automaton.hpp"
#include "hca/bxy.hpp"
#include "hca/rng.hpp"

using namespace hca;

namespace {

Configuration chain_config(int k, std::uint32_t slice_m = 1) {
    return make_configuration(chain_grid(k), FiniteGroup::cyclic(2), slice_m);
}

}  // namespace

TEST_CASE("one step on the chain a->b->c with gamma (1,1,0)") {
    // Cell a is updated with b's value, b with c's, and c's successor is the
    // blocker, still inside the window but invalid, so c is updated with the
    // blocker's frozen 0... the blocker cell itself never changes.
    Configuration c = chain_config(3);
    c.gamma[0] = 1;
    c.gamma[1] = 1;
    c.gamma[2] = 0;
    Configuration next = step(c);
    CHECK(next.gamma[0] == 0);  // 1 + 1
    CHECK(next.gamma[1] == 1);  // 1 + 0
    CHECK(next.gamma[2] == 0);  // 0 + blocker 0
    CHECK(next.gamma[3] == 0);
    // The tile part never changes.
    CHECK(next.grid.cells() == c.grid.cells());
}

TEST_CASE("all-invalid grids give identity dynamics") {
    Grid g(chain_tileset(), 4, 1);
    for (auto& t : g.cells()) t = 1;  // blockers everywhere
    Configuration c = make_configuration(g, FiniteGroup::cyclic(4));
    for (std::size_t i = 0; i < c.gamma.size(); ++i) c.gamma[i] = static_cast<std::uint32_t>(i);
    Configuration next = step(c);
    CHECK(next.gamma == c.gamma);
}

TEST_CASE("a cell whose successor leaves the window is frozen") {
    Grid g(simple_tileset(2), 1, 1);  // a single east arrow, successor outside
    Configuration c = make_configuration(g, FiniteGroup::cyclic(2));
    c.gamma[0] = 1;
    CHECK(step(c).gamma[0] == 1);
}

TEST_CASE("step is linear in gamma over a fixed tile part") {
    Configuration base = chain_config(6);
    const FiniteGroup& zp = base.group;
    for (int trial = 0; trial < 32; ++trial) {
        Configuration u = base, v = base, w = base;
        for (std::size_t i = 0; i < u.gamma.size(); ++i) {
            u.gamma[i] = static_cast<std::uint32_t>(bounded(counter_rng(3, trial, i), 2));
            v.gamma[i] = static_cast<std::uint32_t>(bounded(counter_rng(4, trial, i), 2));
            w.gamma[i] = zp.op(u.gamma[i], v.gamma[i]);
        }
        Configuration su = step(u), sv = step(v), sw = step(w);
        for (std::size_t i = 0; i < u.gamma.size(); ++i)
            CHECK(sw.gamma[i] == zp.op(su.gamma[i], sv.gamma[i]));
    }
}

TEST_CASE("slicing with m = 1 equals the plain step") {
    Configuration c = chain_config(4);
    for (std::size_t i = 0; i < c.gamma.size(); ++i)
        c.gamma[i] = static_cast<std::uint32_t>(bounded(counter_rng(5, 0, i), 2));
    Configuration a = step(c);
    Configuration b = step_sliced(c);
    CHECK(a.gamma == b.gamma);
    CHECK(b.phase == 0);
}

TEST_CASE("away from phase 0 the sliced automaton only advances the phase") {
    Configuration c = chain_config(4, 3);
    c.phase = 1;
    for (std::size_t i = 0; i < c.gamma.size(); ++i) c.gamma[i] = 1;
    Configuration next = step_sliced(c);
    CHECK(next.gamma == c.gamma);
    CHECK(next.phase == 2);
}

TEST_CASE("m sliced steps from phase 0 equal one plain step") {
    for (std::uint32_t m = 1; m <= 8; ++m) {
        Configuration c = chain_config(5, m);
        for (std::size_t i = 0; i < c.gamma.size(); ++i)
            c.gamma[i] = static_cast<std::uint32_t>(bounded(counter_rng(6, m, i), 2));
        Configuration sliced = c;
        for (std::uint32_t t = 0; t < m; ++t) sliced = step_sliced(sliced);
        Configuration plain = step(c);
        CHECK(sliced.gamma == plain.gamma);
        CHECK(sliced.phase == 0);
    }
}

TEST_CASE("preimage of the identity is the identity") {
    Configuration target = chain_config(4);
    std::vector<Cell> window{{0, 0}, {1, 0}, {2, 0}};
    Configuration x = preimage(target, window);
    CHECK(std::all_of(x.gamma.begin(), x.gamma.end(), [](std::uint32_t v) { return v == 0; }));
    Configuration sx = step(x);
    for (Cell c : window) CHECK(sx.gamma[x.grid.index(c)] == 0);
}

TEST_CASE("hand-derived preimage on the chain with window {a, b}") {
    // Window F = {a, b}, target gamma_F = (1, 0). b's successor c lies outside
    // F, so gamma(x)_b copies the target 0; then gamma(x)_a = 1 - 0 = 1.
    Configuration target = chain_config(3);
    target.gamma[0] = 1;
    target.gamma[1] = 0;
    std::vector<Cell> window{{0, 0}, {1, 0}};
    Configuration x = preimage(target, window);
    CHECK(x.gamma[0] == 1);
    CHECK(x.gamma[1] == 0);
    CHECK(x.gamma[2] == 0);
    Configuration sx = step(x);
    CHECK(sx.gamma[0] == 1);
    CHECK(sx.gamma[1] == 0);
}

TEST_CASE("preimage soundness on structured Kari windows, 100 seeded trials") {
    auto kari = KariTileSet::instance();
    BxyResult r = build_bxy(kari, 2, Corner::NE, HilbertVariant::a, 1);
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    for (int trial = 0; trial < 100; ++trial) {
        Configuration target = make_configuration(r.grid, z2);
        for (std::size_t i = 0; i < target.gamma.size(); ++i)
            target.gamma[i] = static_cast<std::uint32_t>(bounded(counter_rng(1, trial, i), 2));
        int x0 = 1 + static_cast<int>(bounded(counter_rng(2, trial, 0), 5));
        int y0 = 1 + static_cast<int>(bounded(counter_rng(2, trial, 1), 5));
        std::vector<Cell> window;
        for (int dy = 0; dy < 3; ++dy)
            for (int dx = 0; dx < 3; ++dx) window.push_back({x0 + dx, y0 + dy});
        Configuration x = preimage(target, window);
        Configuration sx = step(x);
        for (Cell c : window)
            CHECK(sx.gamma[sx.grid.index(c)] == target.gamma[target.grid.index(c)]);
    }
}

TEST_CASE("preimage detects cyclic dependencies on a torus") {
    Grid g(simple_tileset(2), 4, 1, Topology::torus);  // a 4-cycle of east arrows
    Configuration target = make_configuration(g, FiniteGroup::cyclic(2));
    std::vector<Cell> window{{0, 0}, {1, 0}, {2, 0}, {3, 0}};
    CHECK_THROWS_AS(preimage(target, window), std::runtime_error);
}

TEST_CASE("dependency set expands along valid forward steps only") {
    Grid g(simple_tileset(2), 6, 1);
    std::vector<Cell> window{{0, 0}};
    auto d3 = dependency_set(g, window, 3);
    CHECK(d3 == std::vector<Cell>{{0, 0}, {1, 0}, {2, 0}});
    auto d1 = dependency_set(g, window, 1);
    CHECK(d1 == std::vector<Cell>{{0, 0}});
}

TEST_CASE("dependency set of an invalid cell is the window itself") {
    Grid g = chain_grid(3);
    std::vector<Cell> window{{3, 0}};  // the blocker
    for (int n = 1; n <= 5; ++n) CHECK(dependency_set(g, window, n) == window);
}

TEST_CASE("sliced dependency sets grow once per firing update") {
    Grid g(simple_tileset(2), 16, 1);
    std::vector<Cell> window{{0, 0}};
    // Starting at phase 0, horizon 9 with m = 3 fires updates at t = 0, 3, 6,
    // so the window reaches three cells ahead.
    auto d = dependency_set(g, window, 9, 3, 0);
    CHECK(d.size() == 4);
    // The unsliced cone over the same horizon is much larger.
    CHECK(dependency_set(g, window, 9).size() == 9);
}

TEST_CASE("the defining chain example: successor outside the window freezes c") {
    Grid g(simple_tileset(2), 3, 1);  // a -> b -> c, c points outside
    Configuration c = make_configuration(g, FiniteGroup::cyclic(2));
    c.gamma = {1, 1, 0};
    Configuration next = step(c);
    CHECK(next.gamma == std::vector<std::uint32_t>{0, 1, 0});
}

TEST_CASE("trajectory word of the chain head, frozen by hand") {
    Configuration c = chain_config(3);
    c.gamma[0] = 1;
    c.gamma[1] = 1;
    c.gamma[2] = 0;
    std::vector<Cell> window{{0, 0}};
    SpaceTimeWord w = trajectory_word(c, window, 3);
    REQUIRE(w.gamma_steps.size() == 3);
    CHECK(w.gamma_steps[0] == 1);
    CHECK(w.gamma_steps[1] == 0);
    CHECK(w.gamma_steps[2] == 1);
}

TEST_CASE("a horizon of one records only the initial restriction") {
    Configuration c = chain_config(2);
    c.gamma[0] = 1;
    std::vector<Cell> window{{0, 0}, {1, 0}};
    SpaceTimeWord w = trajectory_word(c, window, 1);
    CHECK(w.gamma_steps == std::vector<std::uint32_t>{1, 0});
    CHECK(w.tiles.size() == 2);
}

TEST_CASE("words on invalid windows are constant") {
    Grid g(chain_tileset(), 3, 1);
    for (auto& t : g.cells()) t = 1;
    Configuration c = make_configuration(g, FiniteGroup::cyclic(3));
    c.gamma[1] = 2;
    std::vector<Cell> window{{1, 0}};
    SpaceTimeWord w = trajectory_word(c, window, 4);
    for (int t = 0; t < 4; ++t) CHECK(w.gamma_steps[static_cast<std::size_t>(t)] == 2);
}

TEST_CASE("locality of the update: mutating outside {n, successor} changes nothing at n") {
    Configuration c = chain_config(5);
    for (std::size_t i = 0; i < c.gamma.size(); ++i)
        c.gamma[i] = static_cast<std::uint32_t>(bounded(counter_rng(9, 0, i), 2));
    Configuration base = step(c);
    for (std::size_t mutate = 2; mutate < c.gamma.size(); ++mutate) {
        Configuration altered = c;
        altered.gamma[mutate] ^= 1;
        Configuration stepped = step(altered);
        CHECK(stepped.gamma[0] == base.gamma[0]);  // cell 0 depends on cells {0, 1}
    }
}

TEST_CASE("words are invariant under changes outside the dependency set") {
    Grid g(simple_tileset(2), 8, 8);
    for (std::size_t i = 0; i < g.cell_count(); ++i)
        g.cells()[i] = static_cast<std::uint32_t>(bounded(counter_rng(21, 0, i), 2));
    Configuration c = make_configuration(g, FiniteGroup::cyclic(2));
    for (std::size_t i = 0; i < c.gamma.size(); ++i)
        c.gamma[i] = static_cast<std::uint32_t>(bounded(counter_rng(22, 0, i), 2));
    std::vector<Cell> window{{2, 2}};
    const int horizon = 4;
    auto dep = dependency_set(g, window, horizon);
    std::string base = trajectory_word(c, window, horizon).key();
    for (int trial = 0; trial < 64; ++trial) {
        Configuration altered = c;
        std::size_t idx = bounded(counter_rng(23, trial, 0), altered.gamma.size());
        Cell cell = g.cell_of(idx);
        if (std::find(dep.begin(), dep.end(), cell) != dep.end()) continue;
        altered.gamma[idx] ^= 1;
        CHECK(trajectory_word(altered, window, horizon).key() == base);
    }
}

TEST_CASE("sliced conjugacy holds on structured Kari configurations") {
    auto kari = KariTileSet::instance();
    BxyResult r = build_bxy(kari, 2, Corner::SE, HilbertVariant::c, 1);
    for (std::uint32_t m = 2; m <= 8; ++m) {
        Configuration c = make_configuration(r.grid, FiniteGroup::cyclic(3), m);
        for (std::size_t i = 0; i < c.gamma.size(); ++i)
            c.gamma[i] = static_cast<std::uint32_t>(bounded(counter_rng(41, m, i), 3));
        Configuration sliced = c;
        for (std::uint32_t t = 0; t < m; ++t) sliced = step_sliced(sliced);
        Configuration plain = step(c);
        CHECK(sliced.gamma == plain.gamma);
        CHECK(sliced.phase == 0);
    }
}

TEST_CASE("step is bitwise deterministic") {
    auto kari = KariTileSet::instance();
    BxyResult r = build_bxy(kari, 2, Corner::NE, HilbertVariant::b, 1);
    Configuration c = make_configuration(r.grid, FiniteGroup::cyclic(5));
    for (std::size_t i = 0; i < c.gamma.size(); ++i)
        c.gamma[i] = static_cast<std::uint32_t>(bounded(counter_rng(43, 0, i), 5));
    Configuration a = step(c);
    Configuration b = step(c);
    CHECK(a.gamma == b.gamma);
    CHECK(a.grid.cells() == b.grid.cells());
}
