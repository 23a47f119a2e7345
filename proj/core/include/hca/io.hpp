#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <string>

#include "hca/automaton.hpp"
#include "hca/entropy.hpp"
#include "hca/freegroup.hpp"
#include "hca/grid.hpp"
#include "hca/kari.hpp"
#include "hca/substitution.hpp"

namespace hca {
namespace io {

// Malformed or schema-violating input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::shared_ptr<const DirectedTileSet> make_tileset(const std::string& name);

// Grid JSON: {"tileset", "topology", "width", "height", "cells"} with cells
// row-major and north at decreasing row index; optional "origin": [x, y].
std::string grid_to_json(const Grid& grid);
Grid grid_from_json(const std::string& text);

// Configuration JSON: the grid fields plus "group", "gamma", "phase", "m".
std::string configuration_to_json(const Configuration& config);
Configuration configuration_from_json(const std::string& text);

std::string path_to_json(std::span<const Cell> cells);
std::string path_to_csv(std::span<const Cell> cells);  // columns: step,x,y (1-based)

std::string subst_grid_to_json(const SubstGrid& grid);
SubstGrid subst_grid_from_json(const std::string& text);

std::string wordset_to_json(const WordSet& words, std::size_t listing_cap = 4096);
std::string wordset_to_csv(const WordSet& words);

std::string estimate_to_json(const EntropyEstimate& est);
std::string estimate_to_csv(const EntropyEstimate& est);

std::string survival_to_json(std::span<const SurvivalRow> rows);
std::string survival_to_csv(std::span<const SurvivalRow> rows);

std::string ball_pattern_to_json(const freegroup::BallPattern& p);
freegroup::BallPattern ball_pattern_from_json(const std::string& text);

std::string kari_catalog_to_json(const KariTileSet& tiles, bool summary_only);

std::string constants_to_json(const BoundConstants& c);

}  // namespace io
}  // namespace hca
