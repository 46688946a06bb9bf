#include <stdexcept>

#include "doctest.h"
#include "dw/groups.hpp"

using namespace dw;

TEST_CASE("s3 multiplication and names") {
    Group S = make_s3();
    CHECK(S.n == 6);
    CHECK(!S.abelian());
    int r = S.parse_element("r"), t = S.parse_element("t");
    CHECK(S.element_name(S(r, r)) == "r2");
    CHECK(S(t, t) == 0);
    CHECK(S(S(t, r), t) == S.inv[r]);  // t r t = r^-1
    for (int g : {3, 4, 5}) CHECK(S.inv[g] == g);
    CHECK(S.parse_element("tr2") == 5);
}

TEST_CASE("products are lexicographic") {
    Group G = make_product({make_cyclic(2), make_cyclic(3)});
    CHECK(G.n == 6);
    CHECK(G.index_of({1, 2}) == 5);
    CHECK(G.element_name(5) == "(1,2)");
    CHECK(G.parse_element("(1,2)") == 5);
    CHECK_THROWS_AS(G.parse_element("(3,0)"), std::invalid_argument);
}

TEST_CASE("subgroups, cosets and double cosets of S3") {
    Group S = make_s3();
    CHECK(subgroups(S).size() == 6);
    Subset Ht = closure(S, {3});
    CHECK(is_subgroup(S, Ht));
    Cosets C = left_cosets(S, Ht);
    CHECK(C.count() == 3);
    CHECK(C.rep[0] == 0);
    CHECK(double_cosets(S, Ht).size() == 2);
    CHECK(k_x(S, Ht, 1).size() == 1);
    Subset Hr = closure(S, {1});
    CHECK(k_x(S, Hr, 3) == Hr);
    CHECK(conjugacy_classes(S).size() == 3);
    CHECK(centralizer(S, 1) == Hr);
}

TEST_CASE("G-sets are actions with orbit-stabilizer") {
    Group S = make_s3();
    Cosets C = left_cosets(S, closure(S, {3}));
    for (GSet X : {conjugation_gset(S), coset_gset(S, C), pair_coset_gset(S, C)}) {
        CHECK(is_action(S, X));
        for (auto& o : orbits(S, X)) CHECK(o.size() * stabilizer(S, X, o[0]).size() == 6u);
    }
}
