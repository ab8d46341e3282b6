#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jacklaurent/parse.hpp"
#include "jacklaurent/regbasis.hpp"

using namespace jl;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
Bipartition BP(std::vector<int> l, std::vector<int> m) { return {P(std::move(l)), P(std::move(m))}; }
}

TEST_CASE("singleton class gives the identity") {
    SpecialPoint pt(2, 2);
    EquivClass E = equivalence_class(BP({2, 1}, {1}), pt);
    TransitionBuilder b(pt);
    TransitionMatrix A = b.transition_matrix(E);
    CHECK(A.a == MatKP::identity(1));
    CHECK(inverse_transition(A) == MatKP::identity(1));
}

TEST_CASE("the 1x1 class transition matrix") {
    SpecialPoint pt(1, 1);
    EquivClass E = equivalence_class(BP({1}, {1}), pt);
    TransitionBuilder b(pt);

    Column unit = b.q_column(E.alpha_min);
    CHECK(unit.size() == 1);
    CHECK(unit.at(E.alpha_min).is_one());

    TransitionMatrix A = b.transition_matrix(E);
    REQUIRE(A.a.rows() == 2);
    CHECK(A.a.at(0, 0).is_one());
    CHECK(A.a.at(1, 1).is_one());
    CHECK(A.a.at(1, 0).is_zero());
    RatKP a = A.a.at(0, 1);
    CHECK(to_string(a) == "(-1*p0)/(k*p0 - k - 1)");
    CHECK(a == parse_ratkp("p0/(1+k-k*p0)"));
    CHECK(valuation(a, pt) == -1);

    MatKP ainv = inverse_transition(A);
    CHECK(ainv.at(0, 1) == -a);
    CHECK(A.a * ainv == MatKP::identity(2));

    PoleReport rep = verify_pole_orders(A);
    CHECK(rep.all_pass);
    CHECK(p_pole_order(ainv, A, 0) == 0);
    CHECK(p_pole_order(ainv, A, 1) == 1);
}

TEST_CASE("the r=2 class at 2x2") {
    SpecialPoint pt(2, 2);
    EquivClass E = equivalence_class(BP({1}, {1}), pt);
    REQUIRE(E.size() == 4);
    TransitionBuilder b(pt);
    TransitionMatrix A = b.transition_matrix(E);
    MatKP ainv = inverse_transition(A);
    CHECK(A.a * ainv == MatKP::identity(4));

    int top = E.index_of(BP({2, 1}, {2, 1}));
    int bottom = E.index_of(BP({1}, {1}));
    REQUIRE(top == 3);
    REQUIRE(bottom == 0);
    CHECK(valuation(A.a.at(bottom, top), pt) == -2);
    CHECK(verify_pole_orders(A).all_pass);
    for (int j = 0; j < 4; ++j)
        CHECK(p_pole_order(ainv, A, j) == pole_order_prediction(E.members[j], pt));
    // inverse supported on beta ⊆ alpha only
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!ainv.at(i, j).is_zero())
                CHECK((E.member_masks[i] & ~E.member_masks[j]) == 0);
}

TEST_CASE("memoized columns are stable and box choice is diagnosed") {
    SpecialPoint pt(2, 2);
    EquivClass E = equivalence_class(BP({1}, {1}), pt);
    TransitionBuilder b(pt);
    Column c1 = b.q_column(BP({2, 1}, {2, 1}));
    Column c2 = b.q_column(BP({2, 1}, {2, 1}));
    CHECK(c1 == c2);
    bool stable = b.box_choice_invariant(E);
    (void)stable;  // not asserted: the identity is not claimed, only diagnosed
}

TEST_CASE("outside parts ride through the recursion") {
    SpecialPoint pt(2, 2);
    // lambda has an extra box beyond column m: row 1 of lambda must stay full
    Bipartition gamma = BP({3, 1}, {2});
    EquivClass E = equivalence_class(gamma, pt);
    TransitionBuilder b(pt);
    TransitionMatrix A = b.transition_matrix(E);
    MatKP ainv = inverse_transition(A);
    CHECK(A.a * ainv == MatKP::identity(E.size()));
    CHECK(verify_pole_orders(A).all_pass);
    for (int j = 0; j < E.size(); ++j)
        CHECK(p_pole_order(ainv, A, j) == pole_order_prediction(E.members[j], pt));
}

TEST_CASE("probe context produces the k-specialized matrix") {
    SpecialPoint pt(1, 1);
    EquivClass E = equivalence_class(BP({1}, {1}), pt);
    EvalContext probe{BigRat(10007, 3)};
    TransitionBuilder exact(pt), probed(pt, probe);
    TransitionMatrix A = exact.transition_matrix(E);
    TransitionMatrix B = probed.transition_matrix(E);
    CHECK(B.a.at(0, 1) == substitute_k(A.a.at(0, 1), BigRat(10007, 3)));
}
