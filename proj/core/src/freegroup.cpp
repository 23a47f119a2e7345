#include "hca/freegroup.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace hca {
namespace freegroup {

namespace {

constexpr std::array<char, 4> kLetters{'a', 'b', 'A', 'B'};

char inverse_letter(char c) {
    switch (c) {
        case 'a': return 'A';
        case 'A': return 'a';
        case 'b': return 'B';
        default: return 'b';
    }
}

int letter_rank(char c) {
    switch (c) {
        case 'a': return 0;
        case 'b': return 1;
        case 'A': return 2;
        default: return 3;
    }
}

bool word_less(const std::string& u, const std::string& v) {
    if (u.size() != v.size()) return u.size() < v.size();
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != v[i]) return letter_rank(u[i]) < letter_rank(v[i]);
    return false;
}

void check_letters(std::string_view w) {
    for (char c : w)
        if (c != 'a' && c != 'b' && c != 'A' && c != 'B')
            throw std::invalid_argument("free group word: bad letter");
}

}  // namespace

bool is_reduced(std::string_view w) {
    check_letters(w);
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i + 1] == inverse_letter(w[i])) return false;
    return true;
}

std::string reduce(std::string_view w) {
    check_letters(w);
    std::string out;
    for (char c : w) {
        if (!out.empty() && out.back() == inverse_letter(c))
            out.pop_back();
        else
            out.push_back(c);
    }
    return out;
}

std::string word_mul(std::string_view u, std::string_view v) {
    std::string w(u);
    w.append(v);
    return reduce(w);
}

std::string word_inv(std::string_view w) {
    check_letters(w);
    std::string out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse_letter(*it));
    return out;
}

std::vector<std::string> ball(int radius) {
    if (radius < 0 || radius > 10) throw std::invalid_argument("ball: radius out of range");
    std::vector<std::string> words{""};
    std::vector<std::string> shell{""};
    for (int r = 1; r <= radius; ++r) {
        std::vector<std::string> next;
        for (const std::string& w : shell)
            for (char c : kLetters) {
                if (!w.empty() && c == inverse_letter(w.back())) continue;
                next.push_back(w + c);
            }
        std::sort(next.begin(), next.end(), word_less);
        words.insert(words.end(), next.begin(), next.end());
        shell = std::move(next);
    }
    return words;
}

namespace {

const std::unordered_map<std::string, std::size_t>& ball_index(int radius) {
    static std::array<std::unordered_map<std::string, std::size_t>, 11> cache;
    auto& m = cache[static_cast<std::size_t>(radius)];
    if (m.empty()) {
        auto words = ball(radius);
        for (std::size_t i = 0; i < words.size(); ++i) m.emplace(words[i], i);
    }
    return m;
}

}  // namespace

BallPattern BallPattern::zeros(int radius) {
    BallPattern p;
    p.radius = radius;
    p.values.assign(ball(radius).size(), 0);
    return p;
}

std::uint8_t BallPattern::get(std::string_view word) const {
    const auto& idx = ball_index(radius);
    auto it = idx.find(std::string(word));
    if (it == idx.end()) throw std::out_of_range("BallPattern::get: word outside ball");
    return values[it->second];
}

void BallPattern::set(std::string_view word, std::uint8_t v) {
    const auto& idx = ball_index(radius);
    auto it = idx.find(std::string(word));
    if (it == idx.end()) throw std::out_of_range("BallPattern::set: word outside ball");
    values[it->second] = v;
}

BallPattern majority_step(const BallPattern& x) {
    if (x.radius < 1) throw std::invalid_argument("majority_step: radius must be >= 1");
    BallPattern out = BallPattern::zeros(x.radius - 1);
    for (const std::string& w : ball(x.radius - 1)) {
        int sum = x.get(word_mul(w, "a")) + x.get(word_mul(w, "b")) + x.get(word_mul(w, "A"));
        out.set(w, sum >= 2 ? 1 : 0);
    }
    return out;
}

std::string Rational::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational exact_event_probability(std::span<const std::string> cells,
                                 const std::function<bool(std::span<const std::uint8_t>)>& pred) {
    if (cells.size() > 25)
        throw std::invalid_argument("exact_event_probability: more than 25 cells");
    const std::uint64_t total = std::uint64_t{1} << cells.size();
    std::vector<std::uint8_t> vals(cells.size(), 0);
    std::uint64_t hits = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            vals[i] = static_cast<std::uint8_t>((code >> i) & 1);
        if (pred(vals)) ++hits;
    }
    std::uint64_t g = std::gcd(hits == 0 ? total : hits, total);
    return Rational{hits / g, total / g};
}

BallPattern preimage_on_tree(const BallPattern& target, std::span<const std::string> window) {
    BallPattern out = BallPattern::zeros(target.radius + 1);
    for (const std::string& w : window) {
        std::uint8_t v = target.get(w);  // throws if outside the target ball
        for (const char* gen : {"a", "b", "A"}) {
            std::string voter = word_mul(w, gen);
            if (voter.size() == w.size() + 1) out.set(voter, v);
        }
    }
    return out;
}

std::vector<std::string> event_cells_A() { return {"a", "A"}; }

std::vector<std::string> event_cells_MinvA() { return {"", "aa", "ab", "AA", "Ab"}; }

bool pred_A(std::span<const std::uint8_t> v) { return v[0] != v[1]; }

bool pred_MinvA_majority(std::span<const std::uint8_t> v) {
    // Cells in event_cells_MinvA() order: x_1, x_{a^2}, x_{ab}, x_{a^-2}, x_{a^-1 b}.
    auto maj = [](int a, int b, int c) { return a + b + c >= 2 ? 1 : 0; };
    int at_inv_a = maj(v[0], v[4], v[3]);  // (Mx)_{a^-1} = maj(x_1, x_{a^-1 b}, x_{a^-2})
    int at_a = maj(v[1], v[2], v[0]);      // (Mx)_a = maj(x_{a^2}, x_{ab}, x_1)
    return at_inv_a != at_a;
}

bool pred_MinvA_strict(std::span<const std::uint8_t> v) {
    if (v[3] != v[4] || v[1] != v[2]) return false;  // both flanks constant
    return (v[3] != v[0]) != (v[1] != v[0]);         // exactly one flank flips
}

}  // namespace freegroup
}  // namespace hca
