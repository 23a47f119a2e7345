#include "hca/pathops.hpp"

#include <numeric>
#include <unordered_set>

namespace hca {

const char* to_string(Termination t) {
    switch (t) {
        case Termination::left_window: return "left_window";
        case Termination::hit_invalid: return "hit_invalid";
        case Termination::cycle_detected: return "cycle_detected";
        default: return "max_length";
    }
}

PathTrace trace_path(const Grid& grid, Cell start, std::size_t max_length) {
    PathTrace out;
    std::unordered_set<std::size_t> visited;
    Cell cur = start;
    while (true) {
        if (!grid.in_bounds(cur)) {
            out.termination = Termination::left_window;
            return out;
        }
        if (!grid.valid_at(cur)) {
            out.termination = Termination::hit_invalid;
            return out;
        }
        if (!visited.insert(grid.index(cur)).second) {
            out.termination = Termination::cycle_detected;
            return out;
        }
        out.cells.push_back(cur);
        if (out.cells.size() >= max_length) {
            out.termination = Termination::max_length;
            return out;
        }
        Cell next = step(cur, grid.tileset().direction(grid.at(cur)));
        auto resolved = grid.resolve(next);
        if (!resolved) {
            out.termination = Termination::left_window;
            return out;
        }
        cur = *resolved;
    }
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

PathComponents path_components(const Grid& grid) {
    const std::size_t n = grid.cell_count();
    UnionFind uf(n);
    std::vector<char> escapes(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        Cell c = grid.cell_of(i);
        if (!grid.valid_at(c)) continue;
        Cell next = step(c, grid.tileset().direction(grid.at(c)));
        auto resolved = grid.resolve(next);
        if (!resolved) {
            escapes[i] = 1;  // edge leaves the window
            continue;
        }
        uf.unite(static_cast<int>(i), static_cast<int>(grid.index(*resolved)));
    }

    PathComponents out;
    out.component_of.assign(n, -1);
    std::vector<int> root_to_comp(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        int root = uf.find(static_cast<int>(i));
        if (root_to_comp[static_cast<std::size_t>(root)] < 0) {
            root_to_comp[static_cast<std::size_t>(root)] =
                static_cast<int>(out.components.size());
            out.components.emplace_back();
        }
        int comp = root_to_comp[static_cast<std::size_t>(root)];
        out.component_of[i] = comp;
        out.components[static_cast<std::size_t>(comp)].cells.push_back(grid.cell_of(i));
        if (escapes[i]) out.components[static_cast<std::size_t>(comp)].escapes_window = true;
    }
    for (const auto& comp : out.components)
        if (comp.escapes_window) ++out.escaping_count;
    return out;
}

}  // namespace hca
