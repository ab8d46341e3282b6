#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jacklaurent/parse.hpp"
#include "jacklaurent/spectrum.hpp"

using namespace jl;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
Bipartition BP(std::vector<int> l, std::vector<int> m) { return {P(std::move(l)), P(std::move(m))}; }
PolyKP poly(const char* s) { return parse_ratkp(s).num(); }
}

TEST_CASE("contents") {
    CHECK(content_poly({2, 3}, PolyKP()) == poly("2+k"));
    CHECK(content_poly({1, 1}, mu_shift()) == poly("1+k-k*p0"));
    CHECK(content_poly({1, 1}, PolyKP()) == PolyKP());
}

TEST_CASE("CMS eigenvalues b_r") {
    for (const auto& l : partitions_inside(2, 2))
        for (const auto& m : partitions_inside(2, 2))
            CHECK(b_r({l, m}, 1) == PolyKP(l.box_count() - m.box_count()));
    CHECK(b_r(BP({2}, {1}), 2) == poly("2+k-k*p0"));
    for (int r = 1; r <= 5; ++r) CHECK(b_r(BP({}, {}), r) == PolyKP());
}

TEST_CASE("oracle equivalence") {
    SpecialPoint p11(1, 1);
    CHECK(is_E_equivalent_oracle(BP({}, {}), BP({1}, {1}), p11));
    CHECK(is_E_equivalent_oracle(BP({2, 1}, {1}), BP({2, 1}, {1}), p11));
    CHECK_FALSE(is_E_equivalent_oracle(BP({1}, {}), BP({}, {1}), p11));
    // with the power-sum cross-check enabled
    CHECK(is_E_equivalent_oracle(BP({}, {}), BP({1}, {1}), p11, 9));
}

TEST_CASE("geometric equivalence") {
    CHECK(is_E_equivalent_geometric(BP({1}, {1}), BP({}, {}), SpecialPoint(1, 1)));
    CHECK(is_E_equivalent_geometric(BP({1}, {1}), BP({2}, {1, 1}), SpecialPoint(2, 2)));
    CHECK(is_E_equivalent_geometric(BP({3, 1}, {2}), BP({3, 1}, {2}), SpecialPoint(2, 2)));
}

TEST_CASE("R equivalence") {
    CHECK(is_R_equivalent(BP({1}, {}), BP({}, {1})));
    CHECK(is_R_equivalent(BP({2}, {1}), BP({1}, {2})));
    CHECK_FALSE(is_R_equivalent(BP({2}, {}), BP({1, 1}, {})));
}

TEST_CASE("class resolution") {
    SpecialPoint p11(1, 1);
    EquivClass e1 = equivalence_class(BP({1}, {1}), p11);
    CHECK(e1.r() == 1);
    CHECK(e1.members == std::vector<Bipartition>{BP({}, {}), BP({1}, {1})});
    CHECK(e1.alpha_min == BP({}, {}));
    CHECK(e1.alpha_max == BP({1}, {1}));

    SpecialPoint p22(2, 2);
    EquivClass e2 = equivalence_class(BP({1}, {1}), p22);
    CHECK(e2.r() == 2);
    CHECK(e2.alpha_min == BP({1}, {1}));
    CHECK(e2.alpha_max == BP({2, 1}, {2, 1}));
    std::vector<Bipartition> want{BP({1}, {1}), BP({1, 1}, {2}), BP({2}, {1, 1}), BP({2, 1}, {2, 1})};
    CHECK(e2.members == want);
    // oracle cross-check of every member pair
    for (const auto& a : e2.members)
        for (const auto& b : e2.members) CHECK(is_E_equivalent_oracle(a, b, p22));

    EquivClass e3 = equivalence_class(BP({2, 1}, {1}), p22);
    CHECK(e3.r() == 0);
    CHECK(e3.size() == 1);
}

TEST_CASE("pole order prediction") {
    CHECK(pole_order_prediction(BP({1}, {1}), SpecialPoint(1, 1)) == 1);
    CHECK(pole_order_prediction(BP({}, {}), SpecialPoint(2, 2)) == 0);
    CHECK(pole_order_prediction(BP({2, 1}, {2, 1}), SpecialPoint(2, 2)) == 2);
    // forced component with an outside part: the class is a singleton
    CHECK(pole_order_prediction(BP({2}, {1}), SpecialPoint(1, 1)) == 0);
}

TEST_CASE("general bipartitions carry the outside part") {
    SpecialPoint p11(1, 1);
    EquivClass e = equivalence_class(BP({1, 1}, {1}), p11);
    CHECK(e.size() == 1);  // the inner toggle cannot be lifted
    CHECK(e.members[0] == BP({1, 1}, {1}));

    EquivClass f = equivalence_class(BP({3, 1}, {2}), SpecialPoint(2, 2));
    for (const auto& mbr : f.members) {
        CHECK(box_diff(mbr.lambda.boxes(), Rectangle(2, 2).boxes()) == f.outside.first);
        CHECK(box_diff(mbr.mu.boxes(), Rectangle(2, 2).boxes()) == f.outside.second);
    }
}

TEST_CASE("class members satisfy eigenvalue equality at the point") {
    SpecialPoint pt(2, 2);
    EquivClass e = equivalence_class(BP({1}, {1}), pt);
    for (const auto& a : e.members) {
        for (const auto& b : e.members) {
            for (int r = 1; r <= 2 * 2 * 2 + 1; ++r) {
                PolyKP diff = b_r(a, r) - b_r(b, r);
                if (!diff.is_zero()) CHECK(valuation(RatKP(diff), pt) >= 1);
            }
        }
    }
}

TEST_CASE("exhaustive oracle vs geometric on 2x2") {
    SpecialPoint pt(2, 2);
    std::vector<Bipartition> all;
    for (const auto& l : partitions_inside(2, 2))
        for (const auto& m : partitions_inside(2, 2)) all.push_back({l, m});
    for (const auto& a : all) {
        for (const auto& b : all) {
            CHECK(is_E_equivalent_oracle(a, b, pt) == is_E_equivalent_geometric(a, b, pt));
            CHECK(is_E_equivalent_oracle(a, b, std::nullopt) == (a == b));
        }
    }
}
