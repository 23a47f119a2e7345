#include "hca/group.hpp"

#include <stdexcept>

namespace hca {

FiniteGroup FiniteGroup::cyclic(std::uint32_t m) {
    if (m == 0 || m > 4096) throw std::invalid_argument("cyclic: order must be in [1, 4096]");
    FiniteGroup g;
    g.order_ = m;
    g.table_.resize(static_cast<std::size_t>(m) * m);
    g.inv_.resize(m);
    for (std::uint32_t a = 0; a < m; ++a) {
        g.inv_[a] = (m - a) % m;
        for (std::uint32_t b = 0; b < m; ++b)
            g.table_[static_cast<std::size_t>(a) * m + b] = (a + b) % m;
    }
    g.name_ = m == 2 ? "Z2" : "Zm:" + std::to_string(m);
    return g;
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
    const std::uint64_t n = static_cast<std::uint64_t>(a.order_) * b.order_;
    if (n > 4096) throw std::invalid_argument("product: order must be <= 4096");
    FiniteGroup g;
    g.order_ = static_cast<std::uint32_t>(n);
    g.table_.resize(static_cast<std::size_t>(n) * n);
    g.inv_.resize(n);
    auto pack = [&](std::uint32_t xa, std::uint32_t xb) { return xa * b.order_ + xb; };
    for (std::uint32_t xa = 0; xa < a.order_; ++xa) {
        for (std::uint32_t xb = 0; xb < b.order_; ++xb) {
            std::uint32_t x = pack(xa, xb);
            g.inv_[x] = pack(a.inverse(xa), b.inverse(xb));
            for (std::uint32_t ya = 0; ya < a.order_; ++ya)
                for (std::uint32_t yb = 0; yb < b.order_; ++yb)
                    g.table_[static_cast<std::size_t>(x) * n + pack(ya, yb)] =
                        pack(a.op(xa, ya), b.op(xb, yb));
        }
    }
    g.name_ = "product:[" + a.name_ + "," + b.name_ + "]";
    return g;
}

FiniteGroup FiniteGroup::from_table(std::uint32_t order, std::vector<std::uint32_t> table,
                                    std::string name) {
    if (order == 0 || order > 4096) throw std::invalid_argument("from_table: bad order");
    if (table.size() != static_cast<std::size_t>(order) * order)
        throw std::invalid_argument("from_table: table size must be order^2");
    for (std::uint32_t v : table)
        if (v >= order) throw std::invalid_argument("from_table: entry out of range");
    FiniteGroup g;
    g.order_ = order;
    g.table_ = std::move(table);
    g.inv_.assign(order, 0);
    for (std::uint32_t a = 0; a < order; ++a) {
        bool found = false;
        for (std::uint32_t b = 0; b < order; ++b)
            if (g.op(a, b) == 0 && g.op(b, a) == 0) {
                g.inv_[a] = b;
                found = true;
                break;
            }
        if (!found) throw std::invalid_argument("from_table: missing inverse");
    }
    g.name_ = std::move(name);
    if (!g.check_axioms()) throw std::invalid_argument("from_table: axioms violated");
    return g;
}

namespace {

FiniteGroup parse_at(const std::string& s, std::size_t& pos);

std::vector<FiniteGroup> parse_list(const std::string& s, std::size_t& pos) {
    if (pos >= s.size() || s[pos] != '[') throw std::invalid_argument("group: expected '['");
    ++pos;
    std::vector<FiniteGroup> parts;
    while (true) {
        parts.push_back(parse_at(s, pos));
        if (pos < s.size() && s[pos] == ',') {
            ++pos;
            continue;
        }
        break;
    }
    if (pos >= s.size() || s[pos] != ']') throw std::invalid_argument("group: expected ']'");
    ++pos;
    return parts;
}

FiniteGroup parse_at(const std::string& s, std::size_t& pos) {
    if (s.compare(pos, 2, "Z2") == 0 && (pos + 2 == s.size() || s[pos + 2] == ',' || s[pos + 2] == ']')) {
        pos += 2;
        return FiniteGroup::cyclic(2);
    }
    if (s.compare(pos, 3, "Zm:") == 0) {
        pos += 3;
        std::size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (pos == start) throw std::invalid_argument("group: missing order after Zm:");
        return FiniteGroup::cyclic(static_cast<std::uint32_t>(std::stoul(s.substr(start, pos - start))));
    }
    if (s.compare(pos, 8, "product:") == 0) {
        pos += 8;
        auto parts = parse_list(s, pos);
        if (parts.empty()) throw std::invalid_argument("group: empty product");
        FiniteGroup g = parts.front();
        for (std::size_t i = 1; i < parts.size(); ++i) g = FiniteGroup::product(g, parts[i]);
        return g;
    }
    throw std::invalid_argument("group: cannot parse '" + s.substr(pos) + "'");
}

}  // namespace

FiniteGroup FiniteGroup::parse(const std::string& name) {
    std::size_t pos = 0;
    FiniteGroup g = parse_at(name, pos);
    if (pos != name.size()) throw std::invalid_argument("group: trailing input in '" + name + "'");
    return g;
}

bool FiniteGroup::is_abelian() const {
    for (std::uint32_t a = 0; a < order_; ++a)
        for (std::uint32_t b = a + 1; b < order_; ++b)
            if (op(a, b) != op(b, a)) return false;
    return true;
}

bool FiniteGroup::check_axioms() const {
    for (std::uint32_t a = 0; a < order_; ++a) {
        if (op(0, a) != a || op(a, 0) != a) return false;
        if (op(a, inverse(a)) != 0 || op(inverse(a), a) != 0) return false;
    }
    for (std::uint32_t a = 0; a < order_; ++a)
        for (std::uint32_t b = 0; b < order_; ++b)
            for (std::uint32_t c = 0; c < order_; ++c)
                if (op(op(a, b), c) != op(a, op(b, c))) return false;
    return true;
}

}  // namespace hca
