// Acceptance suite: end-to-end checks of every headline property, one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "hca/automaton.hpp"
#include "hca/bxy.hpp"
#include "hca/entropy.hpp"
#include "hca/freegroup.hpp"
#include "hca/hilbert.hpp"
#include "hca/kari.hpp"
#include "hca/pathops.hpp"
#include "hca/rng.hpp"
#include "hca/substitution.hpp"

#include "chain_tileset.hpp"

using namespace hca;

namespace {

int g_failures = 0;
const double kLog2 = std::log(2.0);

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report(int criterion, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] %2d. %-28s %s\n", pass ? "PASS" : "FAIL", criterion, name.c_str(),
                detail.c_str());
    if (!pass) ++g_failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// 1. Space-filling bijectivity for n <= 6, all variants, under 1 s.
void criterion_hilbert() {
    Timer timer;
    bool ok = true;
    for (HilbertVariant v : all_variants) {
        for (int n = 1; n <= 6; ++n) {
            auto p = hilbert_path(v, n);
            const int side = 1 << n;
            if (p.size() != static_cast<std::size_t>(side) * side) ok = false;
            std::vector<char> seen(p.size(), 0);
            for (std::size_t i = 0; i < p.size(); ++i) {
                const Cell& c = p[i];
                if (c.x < 0 || c.x >= side || c.y < 0 || c.y >= side) {
                    ok = false;
                    break;
                }
                std::size_t idx = static_cast<std::size_t>(c.y) * side + c.x;
                if (seen[idx]) ok = false;
                seen[idx] = 1;
                if (i > 0 && !dir_between(p[i - 1], p[i])) ok = false;
            }
        }
    }
    double dt = timer.seconds();
    report(1, "hilbert space filling", ok && dt < 1.0,
           "4 variants x levels 1-6, " + fmt(dt) + " s");
}

// 2. 12-tile alphabet from path grouping; unique derivation with zero
// ambiguity over every 4x4 block of rho^m(s), m <= 4, at all offsets.
void criterion_substitution() {
    std::set<std::string> derived;
    for (HilbertVariant v : all_variants)
        for (int level = 2; level <= 6; ++level)
            for (const SubstTile& t : group_path(hilbert_path(v, level)).tiles)
                if (t.entry != Side::none && t.exit != Side::none)
                    derived.insert(std::string(to_string(t.variant)) + to_string(t.entry) +
                                   to_string(t.exit));
    bool ok = derived.size() == 12 && subst_alphabet().size() == 12;

    long checked = 0, ambiguous = 0, failed = 0;
    for (const SubstTile& s : subst_alphabet()) {
        for (int m = 2; m <= 4; ++m) {
            SubstGrid big = expand(s, m);
            for (int oy = 0; oy + 4 <= big.height; ++oy)
                for (int ox = 0; ox + 4 <= big.width; ++ox) {
                    SubstGrid sub(4, 4);
                    for (int y = 0; y < 4; ++y)
                        for (int x = 0; x < 4; ++x) sub.at(x, y) = big.at(ox + x, oy + y);
                    DeriveResult r = derive(sub);
                    ++checked;
                    if (r.status == DeriveResult::Status::not_unique) ++ambiguous;
                    if (r.status != DeriveResult::Status::ok ||
                        r.shift != Cell{(2 - ox % 2) % 2, (2 - oy % 2) % 2})
                        ++failed;
                }
        }
    }
    ok = ok && ambiguous == 0 && failed == 0;
    report(2, "substitution alphabet", ok,
           "12 tiles; " + std::to_string(checked) + " blocks, " + std::to_string(ambiguous) +
               " ambiguous, " + std::to_string(failed) + " failed");
}

// 3. Square-filling segments in every long-enough sub-path of the level-4
// paths, for n in {1, 2}, exhaustively, under 10 s.
void criterion_lemma5() {
    Timer timer;
    long counterexamples = 0, windows = 0;
    for (HilbertVariant v : all_variants) {
        auto p = hilbert_path(v, 4);
        const std::size_t N = p.size();
        for (int n : {1, 2}) {
            const std::size_t seg = std::size_t{1} << (2 * n);
            // fill_start[i]: cells p_i .. p_{i+seg-1} fill a 2^n square.
            std::vector<char> fill_start(N, 0);
            const int side = 1 << n;
            for (std::size_t i = 0; i + seg <= N; ++i) {
                int minx = p[i].x, maxx = p[i].x, miny = p[i].y, maxy = p[i].y;
                for (std::size_t k = 1; k < seg; ++k) {
                    minx = std::min(minx, p[i + k].x);
                    maxx = std::max(maxx, p[i + k].x);
                    miny = std::min(miny, p[i + k].y);
                    maxy = std::max(maxy, p[i + k].y);
                }
                if (maxx - minx + 1 != side || maxy - miny + 1 != side) continue;
                std::set<std::pair<int, int>> cells;
                for (std::size_t k = 0; k < seg; ++k) cells.insert({p[i + k].x, p[i + k].y});
                if (cells.size() == seg) fill_start[i] = 1;
            }
            // next_fill[s]: first fill start at or after s.
            std::vector<std::size_t> next_fill(N + 1, N);
            for (std::size_t i = N; i-- > 0;)
                next_fill[i] = fill_start[i] ? i : next_fill[i + 1];
            // Every sub-path of length >= 2*seg starting at s must contain a
            // filling segment, i.e. one must start within [s, s + seg].
            for (std::size_t s = 0; s + 2 * seg <= N; ++s) {
                ++windows;
                if (next_fill[s] > s + seg) ++counterexamples;
            }
        }
    }
    double dt = timer.seconds();
    report(3, "square-path lemma", counterexamples == 0 && dt < 10.0,
           std::to_string(windows) + " sub-path starts, " +
               std::to_string(counterexamples) + " counterexamples, " + fmt(dt) + " s");
}

// 4. Hierarchical blocks: interior validity 100% and the designated path
// visits exactly 4^n blank crosses, for n <= 4 and all parameters.
void criterion_bxy() {
    auto tiles = KariTileSet::instance();
    long invalid = 0, bad_paths = 0, cases = 0;
    for (int n = 0; n <= 4; ++n) {
        for (Corner o : all_corners) {
            for (HilbertVariant v : all_variants) {
                ++cases;
                BxyResult plain = build_bxy(tiles, n, o, v);
                for (int y = 1; y < plain.grid.height() - 1; ++y)
                    for (int x = 1; x < plain.grid.width() - 1; ++x)
                        if (!plain.grid.valid_at({x, y})) ++invalid;

                BxyResult margined = build_bxy(tiles, n, o, v, 1);
                PathTrace t = trace_path(margined.grid, margined.entry);
                std::size_t blanks = 0;
                for (Cell c : t.cells)
                    if (tiles->tile(margined.grid.at(c)).basic == KariBasic::blank_cross)
                        ++blanks;
                if (blanks != (std::size_t{1} << (2 * n))) ++bad_paths;
                if (t.cells.size() != 2 * blanks - 1) ++bad_paths;
            }
        }
    }
    report(4, "hierarchical block validity", invalid == 0 && bad_paths == 0,
           std::to_string(cases) + " builds, " + std::to_string(invalid) +
               " invalid interior cells, " + std::to_string(bad_paths) + " bad paths");
}

// 5. Exact word counts on straight paths: 2^n words and slope log 2 within
// 1e-12; the 2-cell disjoint window doubles the slope.
void criterion_entropy_rate() {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    Grid grid(simple_tileset(2), 14, 1);
    std::vector<Cell> window{{0, 0}};
    bool counts_ok = true;
    std::vector<int> horizons;
    std::vector<double> logs;
    for (int n = 1; n <= 12; ++n) {
        WordSet w = count_words_exact(grid, z2, window, n);
        if (w.distinct() != (std::size_t{1} << n)) counts_ok = false;
        horizons.push_back(n);
        logs.push_back(std::log(static_cast<double>(w.distinct())));
    }
    double slope1 = entropy_rate(horizons, logs).slope;

    Grid two(simple_tileset(2), 10, 2);
    std::vector<Cell> window2{{0, 0}, {0, 1}};
    std::vector<int> h2;
    std::vector<double> l2;
    bool product_ok = true;
    for (int n = 1; n <= 8; ++n) {
        WordSet w = count_words_exact(two, z2, window2, n);
        if (w.distinct() != (std::size_t{1} << (2 * n))) product_ok = false;
        h2.push_back(n);
        l2.push_back(std::log(static_cast<double>(w.distinct())));
    }
    double slope2 = entropy_rate(h2, l2).slope;

    bool ok = counts_ok && product_ok && std::abs(slope1 - kLog2) < 1e-12 &&
              std::abs(slope2 - 2 * kLog2) < 1e-12;
    report(5, "straight-path entropy rate", ok,
           "slope " + fmt(slope1) + " vs log2, twin slope " + fmt(slope2) + " vs 2log2");
}

// 6. Sliced automaton: slope (1/m) log 2 within 5% for m in {2, 3, 4}.
void criterion_slicing() {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    Grid grid(simple_tileset(2), 10, 1);
    std::vector<Cell> window{{0, 0}};
    bool ok = true;
    std::string detail;
    for (std::uint32_t m : {2u, 3u, 4u}) {
        std::vector<int> horizons;
        std::vector<double> logs;
        for (int j = 1; j <= 6; ++j) {
            int h = static_cast<int>(m) * j;
            WordSet w = count_words_exact(grid, z2, window, h, double(1 << 24), m, 0);
            horizons.push_back(h);
            logs.push_back(std::log(static_cast<double>(w.distinct())));
        }
        double slope = entropy_rate(horizons, logs).slope;
        double want = kLog2 / m;
        if (std::abs(slope - want) > 0.05 * want) ok = false;
        detail += "m=" + std::to_string(m) + ": " + fmt(slope) + " ";
    }
    report(6, "sliced entropy scaling", ok, detail + "(targets log2/m)");
}

// 7. Observed periods divide 2^k on chains of maximal path length k <= 8.
void criterion_periodicity() {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    bool ok = true;
    std::string periods;
    for (int k = 1; k <= 8; ++k) {
        Grid g = chain_grid(k);
        std::uint64_t bound = 1u << k;
        // Every window: all singleton cells plus the whole chain.
        std::uint64_t whole_period = 0;
        for (int x = 0; x <= k; ++x) {
            std::vector<Cell> window{{x, 0}};
            PeriodicityResult r = periodicity_check(g, z2, window, bound);
            if (!r.found || bound % r.period != 0) ok = false;
        }
        std::vector<Cell> all;
        for (int x = 0; x <= k; ++x) all.push_back({x, 0});
        PeriodicityResult r = periodicity_check(g, z2, all, bound);
        if (!r.found || bound % r.period != 0) ok = false;
        whole_period = r.found ? r.period : 0;
        periods += std::to_string(whole_period) + " ";
    }
    report(7, "2^k periodicity", ok, "chain periods: " + periods);
}

// 8. Constructive preimage sound on 1000 random (target, window) trials.
void criterion_surjectivity() {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    auto kari = KariTileSet::instance();
    long failures = 0, trials = 0;

    auto check_trial = [&](const Grid& grid, std::uint64_t seed, int trial) {
        Configuration target = make_configuration(grid, z2);
        for (std::size_t i = 0; i < target.gamma.size(); ++i)
            target.gamma[i] = static_cast<std::uint32_t>(
                bounded(counter_rng(seed, static_cast<std::uint64_t>(trial), i), 2));
        int w = 1 + static_cast<int>(bounded(counter_rng(seed + 1, trial, 0), 3));
        int h = 1 + static_cast<int>(bounded(counter_rng(seed + 1, trial, 1), 3));
        int x0 = static_cast<int>(
            bounded(counter_rng(seed + 1, trial, 2),
                    static_cast<std::uint64_t>(grid.width() - w + 1)));
        int y0 = static_cast<int>(
            bounded(counter_rng(seed + 1, trial, 3),
                    static_cast<std::uint64_t>(grid.height() - h + 1)));
        std::vector<Cell> window;
        for (int dy = 0; dy < h; ++dy)
            for (int dx = 0; dx < w; ++dx) window.push_back({x0 + dx, y0 + dy});
        Configuration x = preimage(target, window);
        Configuration sx = step(x);
        ++trials;
        for (Cell c : window)
            if (sx.gamma[grid.index(c)] != target.gamma[grid.index(c)]) {
                ++failures;
                break;
            }
    };

    for (int trial = 0; trial < 400; ++trial) {
        Grid g(simple_tileset(2), 8, 8);
        for (std::size_t i = 0; i < g.cell_count(); ++i)
            g.cells()[i] = static_cast<std::uint32_t>(bounded(counter_rng(100, trial, i), 2));
        check_trial(g, 200, trial);
    }
    for (int trial = 0; trial < 300; ++trial) {
        Grid g(kari, 8, 8);
        for (std::size_t i = 0; i < g.cell_count(); ++i)
            g.cells()[i] = static_cast<std::uint32_t>(
                bounded(counter_rng(300, trial, i), kari->tile_count()));
        check_trial(g, 400, trial);
    }
    BxyResult structured = build_bxy(kari, 3, Corner::NE, HilbertVariant::a, 1);
    for (int trial = 0; trial < 300; ++trial) check_trial(structured.grid, 500, trial);

    report(8, "constructive preimage", failures == 0 && trials == 1000,
           std::to_string(trials) + " trials, " + std::to_string(failures) + " mismatches");
}

// 9. Free-group majority automaton: exact probabilities and tree preimages.
void criterion_freegroup() {
    using namespace hca::freegroup;
    auto a_cells = event_cells_A();
    auto m_cells = event_cells_MinvA();
    Rational pa = exact_event_probability(a_cells, pred_A);
    Rational pm = exact_event_probability(m_cells, pred_MinvA_strict);
    Rational pm_major = exact_event_probability(m_cells, pred_MinvA_majority);
    bool ok = pa == Rational{1, 2} && pm == Rational{1, 8};

    long mismatches = 0;
    for (int radius = 0; radius <= 3; ++radius) {
        auto window = ball(radius);
        for (int trial = 0; trial < 25; ++trial) {
            auto target = BallPattern::zeros(radius);
            for (std::size_t i = 0; i < target.values.size(); ++i)
                target.values[i] = static_cast<std::uint8_t>(
                    bounded(counter_rng(600, static_cast<std::uint64_t>(radius * 100 + trial), i),
                            2));
            BallPattern back = majority_step(preimage_on_tree(target, window));
            for (const auto& w : window)
                if (back.get(w) != target.get(w)) ++mismatches;
        }
    }
    ok = ok && mismatches == 0;
    report(9, "free-group majority CA", ok,
           "P(A)=" + pa.str() + ", P(M^-1 A)=" + pm.str() + " (majority reading " +
               pm_major.str() + "), preimage mismatches " + std::to_string(mismatches));
}

// 10. Measure-entropy contrast under the uniform product measure.
void criterion_measure_entropy() {
    Timer timer;
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    MeasureEntropyParams p;
    p.horizon = 8;
    p.samples = 100000;
    p.seed = 1;
    EntropyEstimate simple = measure_entropy_estimate(simple_tileset(2), z2, p);
    EntropyEstimate kari = measure_entropy_estimate(KariTileSet::instance(), z2, p);
    double dt = timer.seconds();
    bool ok = simple.slope >= 0.9 * kLog2 && simple.slope <= 1.05 * kLog2 &&
              kari.slope < 0.1 * kLog2 && dt < 300.0;
    report(10, "measure entropy contrast", ok,
           "free flow " + fmt(simple.slope) + ", constrained " + fmt(kari.slope) + ", " +
               fmt(dt) + " s");
}

// 11. Survival decay of valid paths in random fields.
void criterion_survival() {
    std::vector<int> windows{16, 32, 64};
    std::vector<int> thresholds{1, 2, 4, 8, 16, 32};
    auto rows = valid_path_survival(KariTileSet::instance(), windows, thresholds, 10000, 1);
    bool monotone = true, decay = true;
    std::string detail;
    for (int w : windows) {
        double p8 = 0, p32 = 0, prev = 2.0;
        for (const auto& r : rows) {
            if (r.window != w) continue;
            if (r.probability > prev + 1e-12) monotone = false;
            prev = r.probability;
            if (r.threshold == 8) p8 = r.probability;
            if (r.threshold == 32) p32 = r.probability;
        }
        if (p32 > p8 / 4.0) decay = false;
        detail += "w" + std::to_string(w) + ": P(8)=" + fmt(p8) + " P(32)=" + fmt(p32) + " ";
    }
    report(11, "valid-path survival decay", monotone && decay, detail);
    std::printf("      survival table (window, threshold, probability):\n");
    for (const auto& r : rows)
        std::printf("        %2d %2d %.6f (%llu/%llu)\n", r.window, r.threshold, r.probability,
                    static_cast<unsigned long long>(r.hits),
                    static_cast<unsigned long long>(r.samples));
}

// 12. Reported constants.
void criterion_constants() {
    BoundConstants c = report_constants();
    bool ok = c.epsilon == "1/64" && c.epsilon_value == 1.0 / 64.0 && c.M == 64 && c.refined == 4;
    report(12, "reported constants", ok,
           "epsilon=" + c.epsilon + " M=" + std::to_string(c.M) +
               " refined=" + std::to_string(c.refined));
}

}  // namespace

int main() {
    Timer total;
    criterion_hilbert();
    criterion_substitution();
    criterion_lemma5();
    criterion_bxy();
    criterion_entropy_rate();
    criterion_slicing();
    criterion_periodicity();
    criterion_surjectivity();
    criterion_freegroup();
    criterion_measure_entropy();
    criterion_survival();
    criterion_constants();
    std::printf("%d/12 criteria passed in %.1f s\n", 12 - g_failures, total.seconds());
    return g_failures == 0 ? 0 : 1;
}
