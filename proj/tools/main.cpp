// Command-line front end: every library operation behind a stable subcommand
// with machine-readable JSON/CSV output. Randomized commands require an
// explicit seed and embed their full command line for reproducibility.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hca/automaton.hpp"
#include "hca/bxy.hpp"
#include "hca/entropy.hpp"
#include "hca/freegroup.hpp"
#include "hca/hilbert.hpp"
#include "hca/io.hpp"
#include "hca/kari.hpp"
#include "hca/pathops.hpp"
#include "hca/substitution.hpp"

namespace {

using nlohmann::json;

std::vector<std::string> g_argv;

std::string command_comment() {
    std::string out = "# command:";
    for (const auto& a : g_argv) out += " " + a;
    out += "\n";
    return out;
}

// Adds {"command": [...]} to a JSON object payload.
std::string with_provenance(const std::string& payload) {
    json j = json::parse(payload);
    if (j.is_object()) j["command"] = g_argv;
    return j.dump(2) + "\n";
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    f << content;
}

std::string slurp(const std::string& in_path) {
    if (in_path.empty() || in_path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(in_path, std::ios::binary);
    if (!f) throw hca::io::ParseError("cannot open input file '" + in_path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

hca::HilbertVariant parse_variant(const std::string& s) {
    auto v = hca::variant_from_string(s);
    if (!v) throw std::invalid_argument("variant must be one of a, b, c, d");
    return *v;
}

hca::Corner parse_corner(const std::string& s) {
    auto c = hca::corner_from_string(s);
    if (!c) throw std::invalid_argument("orientation must be one of NE, NW, SE, SW");
    return *c;
}

hca::Side parse_side(const std::string& s) {
    auto d = hca::dir_from_string(s);
    if (!d) throw std::invalid_argument("side must be one of N, S, E, W");
    return hca::side_of(*d);
}

hca::Rule6Variant parse_rule6(const std::string& s) {
    if (s == "a") return hca::Rule6Variant::as_printed;
    if (s == "b") return hca::Rule6Variant::corrected_e;
    throw std::invalid_argument("rule6-variant must be 'a' (as printed) or 'b' (corrected)");
}

hca::Cell parse_cell(const std::string& s) {
    int x, y;
    char comma;
    std::istringstream ss(s);
    if (!(ss >> x >> comma >> y) || comma != ',')
        throw std::invalid_argument("expected cell as 'x,y'");
    return {x, y};
}

// Window specification: "x,y" (one cell), "x,y,WxH" (anchored box) or
// "WxH" (box anchored at the origin).
std::vector<hca::Cell> parse_window(const std::string& s) {
    int x0 = 0, y0 = 0, w = 1, h = 1;
    if (s.find(',') == std::string::npos) {
        char xsep;
        std::istringstream ss(s);
        if (!(ss >> w >> xsep >> h) || xsep != 'x' || w < 1 || h < 1)
            throw std::invalid_argument("expected window as 'x,y', 'x,y,WxH' or 'WxH'");
    } else {
        char c1, c2;
        std::istringstream ss(s);
        if (!(ss >> x0 >> c1 >> y0) || c1 != ',')
            throw std::invalid_argument("expected window as 'x,y', 'x,y,WxH' or 'WxH'");
        if (ss >> c2) {
            if (c2 != ',') throw std::invalid_argument("expected window as 'x,y,WxH'");
            char xsep;
            if (!(ss >> w >> xsep >> h) || xsep != 'x' || w < 1 || h < 1)
                throw std::invalid_argument("expected window as 'x,y,WxH'");
        }
    }
    std::vector<hca::Cell> cells;
    for (int dy = 0; dy < h; ++dy)
        for (int dx = 0; dx < w; ++dx) cells.push_back({x0 + dx, y0 + dy});
    return cells;
}

// Optional topology override for commands that read a grid.
hca::Grid load_grid(const std::string& input, const std::string& topology) {
    hca::Grid g = hca::io::grid_from_json(slurp(input));
    if (!topology.empty()) {
        if (topology != "window" && topology != "torus")
            throw std::invalid_argument("topology must be 'window' or 'torus'");
        hca::Grid overridden(g.tileset_ptr(), g.width(), g.height(),
                             topology == "window" ? hca::Topology::window
                                                  : hca::Topology::torus);
        overridden.set_origin(g.origin());
        overridden.cells() = g.cells();
        g = overridden;
    }
    return g;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::istringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    if (out.empty()) throw std::invalid_argument("expected a comma-separated integer list");
    return out;
}

json cells_json(std::span<const hca::Cell> cells) {
    json arr = json::array();
    for (const auto& c : cells) arr.push_back({c.x, c.y});
    return arr;
}

}  // namespace

int run(CLI::App& app, int argc, char** argv) {
    using namespace hca;

    // Shared option storage.
    struct {
        std::string variant = "a", entry, exit, orientation = "NE", label = "a";
        std::string input, output, format = "csv", tileset = "kari", group = "Z2";
        std::string rule6 = "b", window = "0,0", start = "0,0", topology;
        std::string windows = "16,32,64", thresholds = "1,2,4,8,16,32";
        int level = 1, n = 1, horizon = 4, margin = 0, steps = 1;
        std::uint64_t samples = 0, seed = 0, bound = 256;
        double budget = double(1 << 24);
        std::uint32_t slice_m = 1, phase = 0;
        bool summary = false;
        std::string path_output;
    } opt;

    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--output", opt.output, "Output file (default stdout)");
    };

    // --- hilbert ---
    auto* hilbert = app.add_subcommand("hilbert", "Plane-filling paths and their substitution system");
    hilbert->require_subcommand(1);

    auto* hpath = hilbert->add_subcommand("path", "Generate a plane-filling path");
    hpath->add_option("--variant", opt.variant, "Path variant a|b|c|d")->required();
    hpath->add_option("--level", opt.level, "Recursion level (>= 1)")->required();
    hpath->add_option("--format", opt.format, "csv|json");
    add_output(hpath);
    hpath->callback([&] {
        auto path = hilbert_path(parse_variant(opt.variant), opt.level);
        // Streamed: level-12 paths have 16M cells.
        std::ofstream file;
        std::ostream* os = &std::cout;
        if (!opt.output.empty() && opt.output != "-") {
            file.open(opt.output, std::ios::binary);
            if (!file) throw std::invalid_argument("cannot open output file '" + opt.output + "'");
            os = &file;
        }
        if (opt.format == "json") {
            *os << "[";
            for (std::size_t i = 0; i < path.size(); ++i) {
                if (i) *os << ",";
                *os << "[" << path[i].x << "," << path[i].y << "]";
            }
            *os << "]\n";
        } else {
            *os << command_comment() << "step,x,y\n";
            for (std::size_t i = 0; i < path.size(); ++i)
                *os << (i + 1) << "," << path[i].x << "," << path[i].y << "\n";
        }
    });

    auto* hsub = hilbert->add_subcommand("substitute", "Expand one substitution tile");
    hsub->add_option("--variant", opt.variant)->required();
    hsub->add_option("--entry", opt.entry, "Entry side N|S|E|W")->required();
    hsub->add_option("--exit", opt.exit, "Exit side N|S|E|W")->required();
    add_output(hsub);
    hsub->callback([&] {
        SubstTile t{parse_variant(opt.variant), parse_side(opt.entry), parse_side(opt.exit)};
        SubstGrid g(2, 2);
        SubstBlock b = substitute(t);
        for (int y = 0; y < 2; ++y)
            for (int x = 0; x < 2; ++x) g.at(x, y) = b.at(x, y);
        emit(opt.output, with_provenance(io::subst_grid_to_json(g)));
    });

    auto* hder = hilbert->add_subcommand("derive", "Invert one substitution level");
    hder->add_option("--input", opt.input, "Substitution grid JSON")->required();
    add_output(hder);
    hder->callback([&] {
        SubstGrid g = io::subst_grid_from_json(slurp(opt.input));
        DeriveResult r = derive(g);
        json j;
        switch (r.status) {
            case DeriveResult::Status::ok: j["status"] = "ok"; break;
            case DeriveResult::Status::not_admissible: j["status"] = "not admissible"; break;
            default: j["status"] = "derivation not unique"; break;
        }
        if (r.status == DeriveResult::Status::ok) {
            j["shift"] = {r.shift.x, r.shift.y};
            j["preimage"] = json::parse(io::subst_grid_to_json(r.preimage));
        }
        j["command"] = g_argv;
        emit(opt.output, j.dump(2) + "\n");
    });

    auto* hlem = hilbert->add_subcommand("lemma5", "Search a path for a square-filling segment");
    hlem->add_option("--variant", opt.variant)->required();
    hlem->add_option("--level", opt.level)->required();
    hlem->add_option("--n", opt.n, "Square size exponent")->required();
    add_output(hlem);
    hlem->callback([&] {
        auto path = hilbert_path(parse_variant(opt.variant), opt.level);
        auto r = find_square_fill(path, opt.n);
        json j;
        j["found"] = r.has_value();
        if (r) {
            j["i"] = r->first;
            j["j"] = r->second;
        }
        j["command"] = g_argv;
        emit(opt.output, j.dump(2) + "\n");
    });

    // --- tiles ---
    auto* tiles = app.add_subcommand("tiles", "Directed tile sets and configurations");
    tiles->require_subcommand(1);

    auto* tenum = tiles->add_subcommand("enumerate", "Export the tile catalog");
    tenum->add_option("--tileset", opt.tileset, "kari|simple1|simple2");
    tenum->add_option("--rule6-variant", opt.rule6, "a (as printed) | b (corrected)");
    tenum->add_flag("--summary", opt.summary, "Counts only");
    add_output(tenum);
    tenum->callback([&] {
        if (opt.tileset == "kari") {
            auto ts = KariTileSet::instance(parse_rule6(opt.rule6));
            emit(opt.output, with_provenance(io::kari_catalog_to_json(*ts, opt.summary)));
            return;
        }
        auto ts = io::make_tileset(opt.tileset);
        json j;
        j["tileset"] = ts->name();
        j["tile_count"] = ts->tile_count();
        json dirs = json::array();
        for (std::uint32_t i = 0; i < ts->tile_count(); ++i)
            dirs.push_back(to_string(ts->direction(i)));
        j["directions"] = dirs;
        j["command"] = g_argv;
        emit(opt.output, j.dump(2) + "\n");
    });

    auto* tval = tiles->add_subcommand("validate", "Per-cell validity of a grid");
    tval->add_option("--input", opt.input)->required();
    tval->add_option("--topology", opt.topology, "Override topology: window|torus");
    add_output(tval);
    tval->callback([&] {
        Grid g = load_grid(opt.input, opt.topology);
        json rows = json::array();
        std::size_t valid = 0;
        for (int r = 0; r < g.height(); ++r) {
            json row = json::array();
            for (int x = 0; x < g.width(); ++x) {
                bool v = g.valid_at({x, g.height() - 1 - r});
                row.push_back(v ? 1 : 0);
                if (v) ++valid;
            }
            rows.push_back(row);
        }
        json j;
        j["valid"] = rows;
        j["valid_count"] = valid;
        j["cell_count"] = g.cell_count();
        j["command"] = g_argv;
        emit(opt.output, j.dump(2) + "\n");
    });

    auto* tbxy = tiles->add_subcommand("bxy", "Build a hierarchical block configuration");
    tbxy->add_option("--level", opt.level)->required();
    tbxy->add_option("--orientation", opt.orientation, "NE|NW|SE|SW");
    tbxy->add_option("--label", opt.label, "Central Hilbert label a|b|c|d");
    tbxy->add_option("--margin", opt.margin, "Context margin around the block");
    tbxy->add_option("--rule6-variant", opt.rule6);
    tbxy->add_option("--path-output", opt.path_output, "Also write the designated path CSV here");
    add_output(tbxy);
    tbxy->callback([&] {
        auto ts = KariTileSet::instance(parse_rule6(opt.rule6));
        BxyResult r = build_bxy(ts, opt.level, parse_corner(opt.orientation),
                                parse_variant(opt.label), opt.margin);
        emit(opt.output, with_provenance(io::grid_to_json(r.grid)));
        if (!opt.path_output.empty())
            emit(opt.path_output, command_comment() + io::path_to_csv(r.blank_path));
    });

    auto* ttrace = tiles->add_subcommand("trace", "Trace a forward path through valid cells");
    ttrace->add_option("--input", opt.input)->required();
    ttrace->add_option("--start", opt.start, "Start cell 'x,y'")->required();
    ttrace->add_option("--max-length", opt.bound, "Length bound");
    ttrace->add_option("--topology", opt.topology, "Override topology: window|torus");
    add_output(ttrace);
    ttrace->callback([&] {
        Grid g = load_grid(opt.input, opt.topology);
        Cell start = parse_cell(opt.start);
        if (!g.in_bounds(start)) throw std::invalid_argument("start cell outside grid");
        PathTrace t = trace_path(g, start, opt.bound);
        json j;
        j["cells"] = cells_json(t.cells);
        j["termination"] = to_string(t.termination);
        j["length"] = t.cells.size();
        j["command"] = g_argv;
        emit(opt.output, j.dump(2) + "\n");
    });

    auto* tcomp = tiles->add_subcommand("components", "Path components of a grid");
    tcomp->add_option("--input", opt.input)->required();
    tcomp->add_option("--topology", opt.topology, "Override topology: window|torus");
    add_output(tcomp);
    tcomp->callback([&] {
        Grid g = load_grid(opt.input, opt.topology);
        PathComponents pc = path_components(g);
        json comps = json::array();
        for (const auto& c : pc.components)
            comps.push_back(json{{"size", c.cells.size()},
                                 {"classification", c.escapes_window ? "escapes_window" : "finite"}});
        json j;
        j["components"] = comps;
        j["component_count"] = pc.components.size();
        j["escaping_count"] = pc.escaping_count;
        j["command"] = g_argv;
        emit(opt.output, j.dump(2) + "\n");
    });

    // --- ca ---
    auto* ca = app.add_subcommand("ca", "The path-accumulation automaton");
    ca->require_subcommand(1);

    auto* castep = ca->add_subcommand("step", "Apply the automaton");
    castep->add_option("--input", opt.input)->required();
    castep->add_option("--steps", opt.steps, "Number of applications");
    castep->add_flag("--stream", opt.summary,
                     "Emit one configuration per line (JSON lines), including the input");
    add_output(castep);
    castep->callback([&] {
        Configuration c = io::configuration_from_json(slurp(opt.input));
        if (opt.summary) {
            std::string lines = json::parse(io::configuration_to_json(c)).dump() + "\n";
            for (int i = 0; i < opt.steps; ++i) {
                c = c.slice_m > 1 ? step_sliced(c) : step(c);
                lines += json::parse(io::configuration_to_json(c)).dump() + "\n";
            }
            emit(opt.output, lines);
            return;
        }
        for (int i = 0; i < opt.steps; ++i) c = c.slice_m > 1 ? step_sliced(c) : step(c);
        emit(opt.output, with_provenance(io::configuration_to_json(c)));
    });

    auto* capre = ca->add_subcommand("preimage", "Constructive preimage on a window");
    capre->add_option("--input", opt.input)->required();
    capre->add_option("--window", opt.window, "'x,y' or 'x,y,WxH'")->required();
    add_output(capre);
    capre->callback([&] {
        Configuration c = io::configuration_from_json(slurp(opt.input));
        auto window = parse_window(opt.window);
        Configuration x = preimage(c, window);
        emit(opt.output, with_provenance(io::configuration_to_json(x)));
    });

    auto* caword = ca->add_subcommand("word", "Space-time word of a window");
    caword->add_option("--input", opt.input)->required();
    caword->add_option("--window", opt.window)->required();
    caword->add_option("--horizon", opt.horizon)->required();
    add_output(caword);
    caword->callback([&] {
        Configuration c = io::configuration_from_json(slurp(opt.input));
        auto window = parse_window(opt.window);
        SpaceTimeWord w = trajectory_word(c, window, opt.horizon);
        json steps = json::array();
        for (int t = 0; t < w.horizon; ++t) {
            json row = json::array();
            for (std::size_t i = 0; i < w.window.size(); ++i)
                row.push_back(w.gamma_steps[static_cast<std::size_t>(t) * w.window.size() + i]);
            steps.push_back(row);
        }
        json j;
        j["window"] = cells_json(w.window);
        j["horizon"] = w.horizon;
        j["tiles"] = w.tiles;
        j["gamma_steps"] = steps;
        j["command"] = g_argv;
        emit(opt.output, j.dump(2) + "\n");
    });

    // --- entropy ---
    auto* entropy = app.add_subcommand("entropy", "Word counting and entropy experiments");
    entropy->require_subcommand(1);

    auto* eexact = entropy->add_subcommand("exact", "Exact word count over a window");
    eexact->add_option("--input", opt.input, "Grid JSON")->required();
    eexact->add_option("--group", opt.group);
    eexact->add_option("--window", opt.window)->required();
    eexact->add_option("--horizon", opt.horizon)->required();
    eexact->add_option("--budget", opt.budget, "Assignment budget");
    eexact->add_option("--m", opt.slice_m, "Slicing modulus");
    eexact->add_option("--phase", opt.phase, "Initial phase");
    add_output(eexact);
    eexact->callback([&] {
        Grid g = io::grid_from_json(slurp(opt.input));
        auto group = FiniteGroup::parse(opt.group);
        auto window = parse_window(opt.window);
        WordSet w = count_words_exact(g, group, window, opt.horizon, opt.budget, opt.slice_m,
                                      opt.phase);
        emit(opt.output, with_provenance(io::wordset_to_json(w)));
    });

    auto* esamp = entropy->add_subcommand("sampled", "Sampled word count (lower bound)");
    esamp->add_option("--input", opt.input)->required();
    esamp->add_option("--group", opt.group);
    esamp->add_option("--window", opt.window)->required();
    esamp->add_option("--horizon", opt.horizon)->required();
    esamp->add_option("--samples", opt.samples)->required();
    esamp->add_option("--seed", opt.seed)->required();
    esamp->add_option("--m", opt.slice_m);
    esamp->add_option("--phase", opt.phase);
    add_output(esamp);
    esamp->callback([&] {
        Grid g = io::grid_from_json(slurp(opt.input));
        auto group = FiniteGroup::parse(opt.group);
        auto window = parse_window(opt.window);
        WordSet w = count_words_sampled(g, group, window, opt.horizon, opt.samples, opt.seed,
                                        opt.slice_m, opt.phase);
        emit(opt.output, with_provenance(io::wordset_to_json(w)));
    });

    auto* erate = entropy->add_subcommand("rate", "Fit an entropy rate to horizon/value pairs");
    erate->add_option("--input", opt.input, "CSV with columns horizon,value")->required();
    add_output(erate);
    erate->callback([&] {
        std::istringstream in(slurp(opt.input));
        std::string line;
        std::vector<int> horizons;
        std::vector<double> values;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#' || line.rfind("horizon", 0) == 0) continue;
            auto comma = line.find(',');
            if (comma == std::string::npos) throw io::ParseError("rate: bad CSV line: " + line);
            horizons.push_back(std::stoi(line.substr(0, comma)));
            values.push_back(std::stod(line.substr(comma + 1)));
        }
        EntropyEstimate est = entropy_rate(horizons, values);
        emit(opt.output, with_provenance(io::estimate_to_json(est)));
    });

    auto* eper = entropy->add_subcommand("periodicity", "Observed period on a window");
    eper->add_option("--input", opt.input)->required();
    eper->add_option("--group", opt.group);
    eper->add_option("--window", opt.window)->required();
    eper->add_option("--bound", opt.bound, "Period bound");
    add_output(eper);
    eper->callback([&] {
        Grid g = io::grid_from_json(slurp(opt.input));
        auto group = FiniteGroup::parse(opt.group);
        auto window = parse_window(opt.window);
        PeriodicityResult r = periodicity_check(g, group, window, opt.bound);
        json j;
        j["found"] = r.found;
        if (r.found)
            j["period"] = r.period;
        else
            j["status"] = "exceeds bound";
        j["bound"] = r.bound;
        j["closure"] = cells_json(r.closure);
        j["command"] = g_argv;
        emit(opt.output, j.dump(2) + "\n");
    });

    auto* emeas = entropy->add_subcommand("measure", "Plug-in measure-entropy estimate");
    emeas->add_option("--tileset", opt.tileset);
    emeas->add_option("--group", opt.group);
    emeas->add_option("--horizon", opt.horizon);
    emeas->add_option("--window", opt.window, "Tracked central window as WxH (default 1x1)");
    emeas->add_option("--samples", opt.samples)->required();
    emeas->add_option("--seed", opt.seed)->required();
    add_output(emeas);
    emeas->callback([&] {
        auto ts = io::make_tileset(opt.tileset);
        auto group = FiniteGroup::parse(opt.group);
        MeasureEntropyParams p;
        p.horizon = opt.horizon;
        p.samples = opt.samples;
        p.seed = opt.seed;
        if (emeas->count("--window")) {
            auto cells = parse_window(opt.window);
            int maxx = 0, maxy = 0;
            for (const auto& c : cells) {
                maxx = std::max(maxx, c.x);
                maxy = std::max(maxy, c.y);
            }
            p.window_w = maxx + 1;
            p.window_h = maxy + 1;
        }
        EntropyEstimate est = measure_entropy_estimate(ts, group, p);
        emit(opt.output, with_provenance(io::estimate_to_json(est)));
    });

    auto* esurv = entropy->add_subcommand("survival", "Valid-path survival probabilities");
    esurv->add_option("--tileset", opt.tileset);
    esurv->add_option("--windows", opt.windows, "Comma-separated window sides");
    esurv->add_option("--thresholds", opt.thresholds, "Comma-separated path lengths");
    esurv->add_option("--samples", opt.samples)->required();
    esurv->add_option("--seed", opt.seed)->required();
    esurv->add_option("--format", opt.format, "csv|json");
    add_output(esurv);
    esurv->callback([&] {
        auto ts = io::make_tileset(opt.tileset);
        auto rows = valid_path_survival(ts, parse_int_list(opt.windows),
                                        parse_int_list(opt.thresholds), opt.samples, opt.seed);
        if (opt.format == "json")
            emit(opt.output, io::survival_to_json(rows));
        else
            emit(opt.output, command_comment() + io::survival_to_csv(rows));
    });

    auto* econst = entropy->add_subcommand("constants", "Reported bound constants");
    add_output(econst);
    econst->callback([&] {
        emit(opt.output, with_provenance(io::constants_to_json(report_constants())));
    });

    // --- freegroup ---
    auto* fg = app.add_subcommand("freegroup", "Majority automaton on the rank-2 free group");
    fg->require_subcommand(1);

    auto* fprob = fg->add_subcommand("prob", "Exact event probabilities");
    add_output(fprob);
    fprob->callback([&] {
        using namespace hca::freegroup;
        auto a_cells = event_cells_A();
        auto m_cells = event_cells_MinvA();
        json j;
        j["A"] = exact_event_probability(a_cells, pred_A).str();
        j["MinvA"] = exact_event_probability(m_cells, pred_MinvA_strict).str();
        j["MinvA_majority"] = exact_event_probability(m_cells, pred_MinvA_majority).str();
        j["cells_A"] = a_cells;
        j["cells_MinvA"] = m_cells;
        j["command"] = g_argv;
        emit(opt.output, j.dump(2) + "\n");
    });

    auto* fpre = fg->add_subcommand("preimage", "Tree preimage of a ball pattern");
    fpre->add_option("--input", opt.input, "Ball pattern JSON")->required();
    fpre->add_option("--words", opt.window, "Comma-separated constrained words (default: whole ball)");
    add_output(fpre);
    fpre->callback([&] {
        using namespace hca::freegroup;
        BallPattern target = io::ball_pattern_from_json(slurp(opt.input));
        std::vector<std::string> window;
        if (fpre->count("--words")) {
            std::istringstream ss(opt.window);
            std::string item;
            while (std::getline(ss, item, ',')) window.push_back(item == "1" ? "" : item);
        } else {
            window = ball(target.radius);
        }
        BallPattern x = preimage_on_tree(target, window);
        emit(opt.output, with_provenance(io::ball_pattern_to_json(x)));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // malformed command line
    }
    return 0;
}

int main(int argc, char** argv) {
    for (int i = 0; i < argc; ++i) g_argv.push_back(argv[i]);
    CLI::App app{
        "Directed-tile cellular automata: plane-filling paths, Kari tiles, and entropy "
        "experiments"};
    app.set_version_flag("--version", "hilbertca 0.1.0");
    app.require_subcommand(1);
    try {
        return run(app, argc, argv);
    } catch (const hca::io::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const hca::BudgetError& e) {
        std::cerr << "budget refusal: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
