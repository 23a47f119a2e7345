#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hca/automaton.hpp"
#include "hca/grid.hpp"
#include "hca/group.hpp"

namespace hca {

// Thrown when an enumeration would exceed its configured budget; the message
// carries the budget that would be required.
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& what, double required)
        : std::runtime_error(what), required_budget(required) {}
    double required_budget;
};

struct WordSet {
    std::vector<Cell> window;
    int horizon = 0;
    bool sampled = false;
    std::uint64_t sample_count = 0;  // sampled mode only
    std::uint64_t seed = 0;
    std::vector<Cell> dependency;
    std::unordered_map<std::string, std::uint64_t> counts;  // word key -> multiplicity
    std::size_t distinct() const { return counts.size(); }
};

// Exact |W(F, n, T)| for the fixed tile part: enumerates every gamma
// assignment on the dependency set (identity elsewhere) and collects the
// distinct space-time words. Throws BudgetError if |G|^|D| exceeds `budget`.
WordSet count_words_exact(const Grid& grid, const FiniteGroup& group,
                          std::span<const Cell> window, int horizon,
                          double budget = double(1 << 24), std::uint32_t slice_m = 1,
                          std::uint32_t phase = 0);

// Monte Carlo lower bound: `samples` uniform gamma assignments on the
// dependency set, deterministic in `seed`.
WordSet count_words_sampled(const Grid& grid, const FiniteGroup& group,
                            std::span<const Cell> window, int horizon, std::uint64_t samples,
                            std::uint64_t seed, std::uint32_t slice_m = 1,
                            std::uint32_t phase = 0);

struct EntropyEstimate {
    std::vector<int> horizons;
    std::vector<double> values;  // log-counts or plug-in entropies (nats)
    double slope = 0.0;          // least-squares slope of value vs horizon
    double last_diff = 0.0;      // value[n] - value[n-1]
    double hn_over_n = 0.0;      // value.back() / horizons.back()
    std::string note;
};

// Least-squares fit over at least three horizon/value pairs.
EntropyEstimate entropy_rate(std::span<const int> horizons, std::span<const double> values);

struct PeriodicityResult {
    bool found = false;
    std::uint64_t period = 0;
    std::uint64_t bound = 0;
    std::vector<Cell> closure;  // cells whose states were enumerated
};

// Smallest p <= bound with T^p the identity on `window`, verified over every
// initial state on the forward closure of the window. Refuses grids with
// escaping path components and closures with more than 2^20 states.
PeriodicityResult periodicity_check(const Grid& grid, const FiniteGroup& group,
                                    std::span<const Cell> window, std::uint64_t bound);

struct MeasureEntropyParams {
    int horizon = 8;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 1;
    int window_w = 1;  // window block tracked at the center of the sample grid
    int window_h = 1;
};

// Plug-in entropy of space-time words of a central window under the uniform
// product measure on (tile, gamma) states, per horizon 1..n. The headline
// estimate is the fitted slope; Hn/n is also reported.
EntropyEstimate measure_entropy_estimate(const std::shared_ptr<const DirectedTileSet>& tiles,
                                         const FiniteGroup& group,
                                         const MeasureEntropyParams& params);

struct SurvivalRow {
    int window = 0;
    int threshold = 0;
    std::uint64_t hits = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    double probability = 0.0;
};

// Empirical probability that a uniform random tile configuration contains a
// valid path of at least `threshold` cells starting in the central quarter.
std::vector<SurvivalRow> valid_path_survival(const std::shared_ptr<const DirectedTileSet>& tiles,
                                             std::span<const int> window_sizes,
                                             std::span<const int> thresholds,
                                             std::uint64_t samples, std::uint64_t seed);

struct BoundConstants {
    std::string epsilon = "1/64";  // filled-fraction constant of the square-path lemma
    double epsilon_value = 1.0 / 64.0;
    int M = 64;       // ceil(1/epsilon): bound on disjoint forward-infinite valid paths
    int refined = 4;  // sharpened bound from the detailed tile examination
};

BoundConstants report_constants();

}  // namespace hca
