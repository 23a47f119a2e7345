#include "doctest.h"

#include <stdexcept>

#include "hca/group.hpp"

using namespace hca;

TEST_CASE("cyclic groups satisfy the group axioms") {
    for (std::uint32_t m : {1u, 2u, 3u, 5u, 8u}) {
        FiniteGroup g = FiniteGroup::cyclic(m);
        CHECK(g.order() == m);
        CHECK(g.check_axioms());
        CHECK(g.is_abelian());
    }
}

TEST_CASE("products compose orders and stay lawful") {
    FiniteGroup g = FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3));
    CHECK(g.order() == 6);
    CHECK(g.check_axioms());
    CHECK(g.is_abelian());
    CHECK(g.name() == "product:[Z2,Zm:3]");
}

TEST_CASE("group names round-trip through the parser") {
    for (const char* name : {"Z2", "Zm:5", "product:[Z2,Zm:3]", "product:[Zm:4,product:[Z2,Z2]]"}) {
        FiniteGroup g = FiniteGroup::parse(name);
        CHECK(g.check_axioms());
    }
    CHECK(FiniteGroup::parse("Z2").order() == 2);
    CHECK(FiniteGroup::parse("Zm:7").order() == 7);
    CHECK(FiniteGroup::parse("product:[Z2,Zm:3]").order() == 6);
    CHECK_THROWS_AS(FiniteGroup::parse("Z3"), std::invalid_argument);
    CHECK_THROWS_AS(FiniteGroup::parse("Zm:"), std::invalid_argument);
    CHECK_THROWS_AS(FiniteGroup::parse("product:[]"), std::invalid_argument);
}

TEST_CASE("subtraction inverts the operation") {
    FiniteGroup g = FiniteGroup::cyclic(5);
    for (std::uint32_t a = 0; a < 5; ++a)
        for (std::uint32_t b = 0; b < 5; ++b) CHECK(g.op(g.sub(a, b), b) == a);
}

TEST_CASE("explicit tables admit non-abelian groups") {
    // S3 as permutations of {0,1,2}; element 0 is the identity.
    const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                             {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    std::vector<std::uint32_t> table(36);
    for (std::uint32_t a = 0; a < 6; ++a)
        for (std::uint32_t b = 0; b < 6; ++b) {
            int composed[3];
            for (int i = 0; i < 3; ++i) composed[i] = perms[a][perms[b][i]];
            for (std::uint32_t c = 0; c < 6; ++c) {
                if (composed[0] == perms[c][0] && composed[1] == perms[c][1] &&
                    composed[2] == perms[c][2])
                    table[a * 6 + b] = c;
            }
        }
    FiniteGroup s3 = FiniteGroup::from_table(6, table, "S3");
    CHECK(s3.check_axioms());
    CHECK_FALSE(s3.is_abelian());
    std::vector<std::uint32_t> bad(36, 0);
    CHECK_THROWS_AS(FiniteGroup::from_table(6, bad), std::invalid_argument);
}
