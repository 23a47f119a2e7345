#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hca {

// Finite group given by its operation table. Element 0 is the identity and
// the operation is written additively throughout.
class FiniteGroup {
public:
    FiniteGroup() = default;

    static FiniteGroup cyclic(std::uint32_t m);
    static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);
    // Builds a group from an explicit operation table (row-major, element 0
    // the identity). Non-abelian tables are admitted; the axioms are checked.
    static FiniteGroup from_table(std::uint32_t order, std::vector<std::uint32_t> table,
                                  std::string name = "table");
    // Parses "Z2", "Zm:<m>" or "product:[<g>,<g>,...]". Throws on bad input.
    static FiniteGroup parse(const std::string& name);

    std::uint32_t order() const { return order_; }
    std::uint32_t op(std::uint32_t a, std::uint32_t b) const {
        return table_[static_cast<std::size_t>(a) * order_ + b];
    }
    std::uint32_t inverse(std::uint32_t a) const { return inv_[a]; }
    std::uint32_t identity() const { return 0; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return op(a, inverse(b)); }

    bool is_abelian() const;
    // Exhaustive associativity/identity/inverse verification.
    bool check_axioms() const;

    const std::string& name() const { return name_; }

private:
    std::uint32_t order_ = 1;
    std::vector<std::uint32_t> table_{0};
    std::vector<std::uint32_t> inv_{0};
    std::string name_ = "Zm:1";
};

}  // namespace hca
