#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace hca {
namespace freegroup {

// Elements of the free group on two generators as freely reduced words over
// the letters a, b, A (= a^-1), B (= b^-1); "" is the identity.

bool is_reduced(std::string_view w);
std::string reduce(std::string_view w);
std::string word_mul(std::string_view u, std::string_view v);
std::string word_inv(std::string_view w);

// All reduced words of length <= radius, ordered by length then by the
// letter order a < b < A < B. Sizes: 1, 5, 17, 53, ...
std::vector<std::string> ball(int radius);

// {0,1}-pattern on a ball; values are aligned with the ball() order.
struct BallPattern {
    int radius = 0;
    std::vector<std::uint8_t> values;

    static BallPattern zeros(int radius);
    std::uint8_t get(std::string_view word) const;
    void set(std::string_view word, std::uint8_t v);
    std::size_t size() const { return values.size(); }
};

// One application of the majority-vote automaton: (Mx)_w is the majority of
// x at wa, wb, wa^-1. The output ball shrinks by one radius.
BallPattern majority_step(const BallPattern& x);

struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;
    std::string str() const;
    friend bool operator==(const Rational&, const Rational&) = default;
};

// Exact probability of a predicate over the named cells under the uniform
// product measure, by enumerating all 2^|cells| assignments. Assignment
// values are passed to the predicate in the order of `cells`. Cell budget 25.
Rational exact_event_probability(std::span<const std::string> cells,
                                 const std::function<bool(std::span<const std::uint8_t>)>& pred);

// Preimage on the Cayley tree: every constrained word copies its target value
// to its outward voters (the voters of strictly greater length), of which
// each word has at least two, so the majority at every constrained word is
// met; all other cells are 0.
BallPattern preimage_on_tree(const BallPattern& target, std::span<const std::string> window);

// The measured events of the majority automaton.
std::vector<std::string> event_cells_A();       // {a, A}
std::vector<std::string> event_cells_MinvA();   // {1, a^-2, a^-1 b, a^2, ab}
bool pred_A(std::span<const std::uint8_t> v);
// Literal preimage of A under the majority rule (value 3/8).
bool pred_MinvA_majority(std::span<const std::uint8_t> v);
// Strict reading: both flanking pairs internally constant and exactly one of
// them disagreeing with the center (value 1/8).
bool pred_MinvA_strict(std::span<const std::uint8_t> v);

}  // namespace freegroup
}  // namespace hca
