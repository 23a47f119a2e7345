#include "hca/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace hca {
namespace io {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON");
    return j;
}

template <typename T>
T require(const json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ParseError(std::string("bad field '") + key + "'");
    }
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json grid_to_json_obj(const Grid& grid) {
    json j;
    j["tileset"] = grid.tileset().name();
    j["topology"] = grid.topology() == Topology::window ? "window" : "torus";
    j["width"] = grid.width();
    j["height"] = grid.height();
    if (grid.origin() != Cell{0, 0}) j["origin"] = {grid.origin().x, grid.origin().y};
    std::vector<std::uint32_t> cells;
    cells.reserve(grid.cell_count());
    for (int r = 0; r < grid.height(); ++r)
        for (int x = 0; x < grid.width(); ++x)
            cells.push_back(grid.at(x, grid.height() - 1 - r));
    j["cells"] = std::move(cells);
    return j;
}

Grid grid_from_json_obj(const json& j) {
    auto tiles = make_tileset(require<std::string>(j, "tileset"));
    std::string topo = require<std::string>(j, "topology");
    if (topo != "window" && topo != "torus") throw ParseError("bad topology");
    int w = require<int>(j, "width");
    int h = require<int>(j, "height");
    if (w < 1 || h < 1) throw ParseError("bad grid dimensions");
    auto cells = require<std::vector<std::uint64_t>>(j, "cells");
    if (cells.size() != static_cast<std::size_t>(w) * h)
        throw ParseError("cells length does not match width*height");
    Grid grid(tiles, w, h, topo == "window" ? Topology::window : Topology::torus);
    for (int r = 0; r < h; ++r)
        for (int x = 0; x < w; ++x) {
            std::uint64_t id = cells[static_cast<std::size_t>(r) * w + x];
            if (id >= tiles->tile_count()) throw ParseError("tile id out of range");
            grid.set({x, h - 1 - r}, static_cast<std::uint32_t>(id));
        }
    if (j.contains("origin")) {
        auto o = require<std::vector<int>>(j, "origin");
        if (o.size() != 2) throw ParseError("bad origin");
        grid.set_origin({o[0], o[1]});
    }
    return grid;
}

}  // namespace

std::string grid_to_json(const Grid& grid) { return grid_to_json_obj(grid).dump(2) + "\n"; }

Grid grid_from_json(const std::string& text) { return grid_from_json_obj(parse(text)); }

std::string configuration_to_json(const Configuration& config) {
    json j = grid_to_json_obj(config.grid);
    j["group"] = config.group.name();
    j["phase"] = config.phase;
    j["m"] = config.slice_m;
    std::vector<std::uint32_t> gamma;
    gamma.reserve(config.gamma.size());
    const Grid& g = config.grid;
    for (int r = 0; r < g.height(); ++r)
        for (int x = 0; x < g.width(); ++x)
            gamma.push_back(config.gamma[g.index({x, g.height() - 1 - r})]);
    j["gamma"] = std::move(gamma);
    return j.dump(2) + "\n";
}

Configuration configuration_from_json(const std::string& text) {
    json j = parse(text);
    Grid grid = grid_from_json_obj(j);
    FiniteGroup group;
    try {
        group = FiniteGroup::parse(require<std::string>(j, "group"));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    std::uint32_t m = j.contains("m") ? require<std::uint32_t>(j, "m") : 1;
    if (m < 1) throw ParseError("bad slicing modulus");
    Configuration config = make_configuration(std::move(grid), std::move(group), m);
    config.phase = j.contains("phase") ? require<std::uint32_t>(j, "phase") : 0;
    if (config.phase >= m) throw ParseError("phase must be below m");
    auto gamma = require<std::vector<std::uint64_t>>(j, "gamma");
    if (gamma.size() != config.grid.cell_count())
        throw ParseError("gamma length does not match cells");
    const Grid& g = config.grid;
    for (int r = 0; r < g.height(); ++r)
        for (int x = 0; x < g.width(); ++x) {
            std::uint64_t v = gamma[static_cast<std::size_t>(r) * g.width() + x];
            if (v >= config.group.order()) throw ParseError("gamma value out of range");
            config.gamma[g.index({x, g.height() - 1 - r})] = static_cast<std::uint32_t>(v);
        }
    return config;
}

std::string path_to_json(std::span<const Cell> cells) {
    json j = json::array();
    for (const Cell& c : cells) j.push_back({c.x, c.y});
    return j.dump() + "\n";
}

std::string path_to_csv(std::span<const Cell> cells) {
    std::string out = "step,x,y\n";
    for (std::size_t i = 0; i < cells.size(); ++i)
        out += std::to_string(i + 1) + "," + std::to_string(cells[i].x) + "," +
               std::to_string(cells[i].y) + "\n";
    return out;
}

std::string subst_grid_to_json(const SubstGrid& grid) {
    json j;
    j["tileset"] = "hilbert_subst";
    j["width"] = grid.width;
    j["height"] = grid.height;
    std::vector<int> cells;
    cells.reserve(grid.cells.size());
    for (int r = 0; r < grid.height; ++r)
        for (int x = 0; x < grid.width; ++x) {
            auto id = subst_tile_id(grid.at(x, grid.height - 1 - r));
            cells.push_back(id ? *id : -1);
        }
    j["cells"] = std::move(cells);
    return j.dump(2) + "\n";
}

SubstGrid subst_grid_from_json(const std::string& text) {
    json j = parse(text);
    if (require<std::string>(j, "tileset") != "hilbert_subst")
        throw ParseError("expected tileset 'hilbert_subst'");
    int w = require<int>(j, "width");
    int h = require<int>(j, "height");
    if (w < 1 || h < 1) throw ParseError("bad grid dimensions");
    auto cells = require<std::vector<int>>(j, "cells");
    if (cells.size() != static_cast<std::size_t>(w) * h)
        throw ParseError("cells length does not match width*height");
    SubstGrid grid(w, h);
    auto alphabet = subst_alphabet();
    for (int r = 0; r < h; ++r)
        for (int x = 0; x < w; ++x) {
            int id = cells[static_cast<std::size_t>(r) * w + x];
            if (id < 0 || id >= static_cast<int>(alphabet.size()))
                throw ParseError("substitution tile id out of range");
            grid.at(x, h - 1 - r) = alphabet[static_cast<std::size_t>(id)];
        }
    return grid;
}

namespace {

json word_counts_json(const WordSet& words, std::size_t cap) {
    std::vector<std::pair<std::string, std::uint64_t>> sorted(words.counts.begin(),
                                                              words.counts.end());
    std::sort(sorted.begin(), sorted.end());
    json arr = json::array();
    if (sorted.size() > cap) return arr;
    const std::size_t ncells = words.window.size();
    for (const auto& [key, count] : sorted) {
        json gamma_steps = json::array();
        std::size_t vals = key.size() / 2;
        json row = json::array();
        for (std::size_t i = 0; i < vals; ++i) {
            std::uint32_t v = static_cast<std::uint8_t>(key[2 * i]) |
                              (static_cast<std::uint32_t>(static_cast<std::uint8_t>(key[2 * i + 1]))
                               << 8);
            row.push_back(v);
            if (row.size() == ncells) {
                gamma_steps.push_back(row);
                row = json::array();
            }
        }
        arr.push_back(json{{"gamma", gamma_steps}, {"count", count}});
    }
    return arr;
}

}  // namespace

std::string wordset_to_json(const WordSet& words, std::size_t listing_cap) {
    json j;
    json window = json::array();
    for (const Cell& c : words.window) window.push_back({c.x, c.y});
    j["window"] = window;
    j["horizon"] = words.horizon;
    j["mode"] = words.sampled ? "sampled" : "exact";
    if (words.sampled) {
        j["samples"] = words.sample_count;
        j["seed"] = words.seed;
    }
    json dep = json::array();
    for (const Cell& c : words.dependency) dep.push_back({c.x, c.y});
    j["dependency"] = dep;
    j["distinct"] = words.distinct();
    std::uint64_t total = 0;
    for (const auto& [k, c] : words.counts) total += c;
    j["total"] = total;
    j["log_distinct"] = fmt_double(std::log(static_cast<double>(words.distinct())));
    json listing = word_counts_json(words, listing_cap);
    if (!listing.empty() || words.distinct() <= listing_cap)
        j["words"] = listing;
    else
        j["words_omitted"] = "distinct count exceeds listing cap";
    return j.dump(2) + "\n";
}

std::string wordset_to_csv(const WordSet& words) {
    std::string out;
    out += "# mode=" + std::string(words.sampled ? "sampled" : "exact");
    if (words.sampled)
        out += " samples=" + std::to_string(words.sample_count) +
               " seed=" + std::to_string(words.seed);
    out += "\nhorizon,distinct\n";
    out += std::to_string(words.horizon) + "," + std::to_string(words.distinct()) + "\n";
    return out;
}

std::string estimate_to_json(const EntropyEstimate& est) {
    json j;
    j["horizons"] = est.horizons;
    json vals = json::array();
    for (double v : est.values) vals.push_back(v);
    j["values"] = vals;
    j["slope"] = est.slope;
    j["last_diff"] = est.last_diff;
    j["hn_over_n"] = est.hn_over_n;
    if (!est.note.empty()) j["note"] = est.note;
    return j.dump(2) + "\n";
}

std::string estimate_to_csv(const EntropyEstimate& est) {
    std::string out = "horizon,value\n";
    for (std::size_t i = 0; i < est.horizons.size(); ++i)
        out += std::to_string(est.horizons[i]) + "," + fmt_double(est.values[i]) + "\n";
    out += "# slope=" + fmt_double(est.slope) + " last_diff=" + fmt_double(est.last_diff) +
           " hn_over_n=" + fmt_double(est.hn_over_n) + "\n";
    return out;
}

std::string survival_to_json(std::span<const SurvivalRow> rows) {
    json arr = json::array();
    for (const auto& r : rows)
        arr.push_back(json{{"window", r.window},
                           {"threshold", r.threshold},
                           {"hits", r.hits},
                           {"samples", r.samples},
                           {"seed", r.seed},
                           {"probability", r.probability}});
    return arr.dump(2) + "\n";
}

std::string survival_to_csv(std::span<const SurvivalRow> rows) {
    std::string out = "window,threshold,probability,hits,samples,seed\n";
    for (const auto& r : rows)
        out += std::to_string(r.window) + "," + std::to_string(r.threshold) + "," +
               fmt_double(r.probability) + "," + std::to_string(r.hits) + "," +
               std::to_string(r.samples) + "," + std::to_string(r.seed) + "\n";
    return out;
}

std::string ball_pattern_to_json(const freegroup::BallPattern& p) {
    json values = json::object();
    auto words = freegroup::ball(p.radius);
    for (std::size_t i = 0; i < words.size(); ++i)
        values[words[i]] = static_cast<int>(p.values[i]);
    json j;
    j["radius"] = p.radius;
    j["values"] = values;
    return j.dump(2) + "\n";
}

freegroup::BallPattern ball_pattern_from_json(const std::string& text) {
    json j = parse(text);
    int radius = require<int>(j, "radius");
    if (radius < 0 || radius > 10) throw ParseError("radius out of range");
    auto p = freegroup::BallPattern::zeros(radius);
    if (!j.contains("values") || !j.at("values").is_object())
        throw ParseError("missing values object");
    for (const auto& [word, v] : j.at("values").items()) {
        if (!v.is_number_integer() || (v.get<int>() != 0 && v.get<int>() != 1))
            throw ParseError("pattern values must be 0 or 1");
        try {
            p.set(word, static_cast<std::uint8_t>(v.get<int>()));
        } catch (const std::exception&) {
            throw ParseError("word '" + word + "' outside ball of radius " +
                             std::to_string(radius));
        }
    }
    return p;
}

std::string kari_catalog_to_json(const KariTileSet& tiles, bool summary_only) {
    json j;
    j["tileset"] = tiles.name();
    j["tile_count"] = tiles.tile_count();
    json counts;
    for (KariBasic b : {KariBasic::blank_cross, KariBasic::bold_cross, KariBasic::blank_arm,
                        KariBasic::bold_arm, KariBasic::mixed_arm})
        counts[to_string(b)] = tiles.count_of(b);
    j["counts"] = counts;
    if (!summary_only) {
        json arr = json::array();
        for (std::uint32_t id = 0; id < tiles.tile_count(); ++id) {
            const KariTile& t = tiles.tile(id);
            json e;
            e["id"] = id;
            e["basic"] = to_string(t.basic);
            e["direction"] = to_string(t.direction);
            e["h_parity"] = t.h_parity;
            e["v_parity"] = t.v_parity;
            if (t.is_cross()) {
                e["orientation"] = to_string(t.orientation());
                e["hilbert"] = to_string(t.hilbert);
                e["corner_parity"] = {t.corner_bit(Corner::NW), t.corner_bit(Corner::NE),
                                      t.corner_bit(Corner::SW), t.corner_bit(Corner::SE)};
            } else {
                e["arm_direction"] = to_string(t.facing);
                e["principal_orientation"] = to_string(t.principal_orientation());
                e["principal_hilbert"] = to_string(t.hilbert);
                e["side_orientations"] = {to_string(t.stub_orientation(0)),
                                          to_string(t.stub_orientation(1))};
                e["side_hilberts"] = {to_string(t.stub_hilbert[0]), to_string(t.stub_hilbert[1])};
                e["corner_parity"] = {t.corner_bit(Corner::NW), t.corner_bit(Corner::NE),
                                      t.corner_bit(Corner::SW), t.corner_bit(Corner::SE)};
            }
            arr.push_back(std::move(e));
        }
        j["tiles"] = std::move(arr);
    }
    return j.dump(2) + "\n";
}

std::string constants_to_json(const BoundConstants& c) {
    json j;
    j["epsilon"] = c.epsilon;
    j["epsilon_value"] = c.epsilon_value;
    j["M"] = c.M;
    j["refined"] = c.refined;
    return j.dump(2) + "\n";
}

}  // namespace io
}  // namespace hca
