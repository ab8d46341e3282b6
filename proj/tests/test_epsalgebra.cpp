#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jacklaurent/epsalgebra.hpp"
#include "jacklaurent/parse.hpp"

using namespace jl;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
Bipartition BP(std::vector<int> l, std::vector<int> m) { return {P(std::move(l)), P(std::move(m))}; }

struct ClassKit {
    EquivClass E;
    TransitionMatrix A;
    MatKP ainv;
    std::vector<MatKP> eps_tilde;
    std::vector<MatK> eps;
};

ClassKit make_kit(const Bipartition& alpha, const SpecialPoint& pt) {
    TransitionBuilder b(pt);
    EquivClass E = equivalence_class(alpha, pt);
    TransitionMatrix A = b.transition_matrix(E);
    MatKP ainv = inverse_transition(A);
    std::vector<MatKP> et;
    std::vector<MatK> e;
    for (int t = 0; t < E.r(); ++t) {
        et.push_back(epsilon_tilde(A, ainv, t));
        e.push_back(epsilon_matrix(et.back(), pt));
    }
    return {std::move(E), std::move(A), std::move(ainv), std::move(et), std::move(e)};
}

}  // namespace

TEST_CASE("g_s values") {
    CHECK(g_s(BoxSet{{1, 1}}, 1) == UniPoly(BigRat(1)));
    CHECK(g_s(BoxSet{{1, 2}}, 2) == UniPoly(BigRat(1)));
    CHECK(g_s(BoxSet{{2, 1}}, 2) == UniPoly::x());
    CHECK(g_s(BoxSet{{1, 1}, {1, 2}}, 2) == UniPoly(BigRat(1)));
    CHECK(g_s(BoxSet{{1, 1}, {1, 2}, {2, 1}}, 1) == UniPoly(BigRat(3)));
}

TEST_CASE("g_tilde values and the h-limit law") {
    Rectangle r22(2, 2);
    for (const BoxSet& nu : {BoxSet{{1, 2}}, BoxSet{{2, 1}}, BoxSet{{1, 1}, {1, 2}}})
        CHECK(g_tilde_s(nu, 1, r22) == PolyKP());

    SpecialPoint p11(1, 1);
    CHECK(g_tilde_s(BoxSet{{1, 1}}, 2, Rectangle(1, 1)) == p11.h());

    for (auto [n, m] : {std::pair{1, 1}, {2, 2}, {3, 2}}) {
        SpecialPoint pt(n, m);
        Rectangle rect(n, m);
        std::vector<BoxSet> nus = {BoxSet{{1, 1}}, BoxSet{{n, m}}, BoxSet{{1, 1}, {1, 2}}};
        for (const auto& nu : nus) {
            bool inside = true;
            for (const Box& b : nu) inside = inside && rect.contains(b);
            if (!inside) continue;
            for (int s = 2; s <= 5; ++s) {
                RatKP ratio = RatKP(g_tilde_s(nu, s, rect)) / RatKP(pt.h());
                RatK lim = eval_p0(ratio, pt.p0_star());
                RatK want = RatK(g_s(nu, s - 1)) * RatK(BigRat(s - 1));
                CHECK(lim == want);
            }
        }
    }
}

TEST_CASE("vandermonde determinant") {
    CHECK(vandermonde_delta({BoxSet{{1, 1}}}) == UniPoly(BigRat(1)));
    UniPoly km1(std::vector<BigRat>{BigRat(-1), BigRat(1)});
    CHECK(vandermonde_delta({BoxSet{{1, 2}}, BoxSet{{2, 1}}}) == km1);
    CHECK_THROWS_AS(vandermonde_delta({BoxSet{{1, 2}}, BoxSet{{1, 2}}}), CheckError);
}

TEST_CASE("epsilon on the 1x1 class") {
    SpecialPoint pt(1, 1);
    ClassKit kit = make_kit(BP({1}, {1}), pt);
    REQUIRE(kit.E.r() == 1);
    const MatKP& et = kit.eps_tilde[0];
    CHECK(et.at(0, 1) == -kit.A.a.at(0, 1));
    CHECK(et.at(0, 0).is_zero());
    CHECK(et.at(1, 1).is_zero());
    CHECK(et.at(1, 0).is_zero());
    CHECK(valuation(et.at(0, 1), pt) == -1);
    CHECK((et * et).is_zero());

    const MatK& e = kit.eps[0];
    // lim h * (-p0/h) = -p0 evaluated at p0* = 1 + 1/k, i.e. -(k+1)/k
    RatK expect(-UniPoly(std::vector<BigRat>{BigRat(1), BigRat(1)}), UniPoly::x());
    CHECK(e.at(0, 1) == expect);
    CHECK((e * e).is_zero());

    SystemReport sys = verify_system(kit.A, kit.ainv, kit.eps_tilde, kit.eps);
    CHECK(sys.bs_identity);
    CHECK(sys.b_matrix_regular);
    CHECK(sys.limit_system);

    EpsilonAlgebra alg = verify_dual_numbers(kit.E, kit.eps);
    CHECK(alg.relations.squares_zero);
    CHECK(alg.relations.products_independent);
    CHECK(alg.relations.witness_found);
    CHECK(alg.witness_index == 1);  // the top member is the cyclic vector
}

TEST_CASE("singleton class is the scalar algebra") {
    SpecialPoint pt(2, 2);
    ClassKit kit = make_kit(BP({2, 1}, {1}), pt);
    CHECK(kit.E.r() == 0);
    EpsilonAlgebra alg = verify_dual_numbers(kit.E, kit.eps);
    CHECK(alg.relations.witness_found);
    CHECK(alg.subset_products.size() == 1);
}

TEST_CASE("the r=2 class at 2x2 is the regular representation of A_2") {
    SpecialPoint pt(2, 2);
    ClassKit kit = make_kit(BP({1}, {1}), pt);
    REQUIRE(kit.E.r() == 2);

    for (int t = 0; t < 2; ++t) {
        CHECK((kit.eps_tilde[t] * kit.eps_tilde[t]).is_zero());
        CHECK((kit.eps[t] * kit.eps[t]).is_zero());
        // strictly upper with the component support
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (!kit.eps[t].at(i, j).is_zero()) {
                    unsigned diff = kit.E.member_masks[j] & ~kit.E.member_masks[i];
                    CHECK((kit.E.member_masks[i] & ~kit.E.member_masks[j]) == 0);
                    CHECK((diff >> t & 1) == 1);
                }
    }
    CHECK((kit.eps[0] * kit.eps[1] - kit.eps[1] * kit.eps[0]).is_zero());

    SystemReport sys = verify_system(kit.A, kit.ainv, kit.eps_tilde, kit.eps);
    CHECK(sys.bs_identity);
    CHECK(sys.b_matrix_regular);
    CHECK(sys.limit_system);

    EpsilonAlgebra alg = verify_dual_numbers(kit.E, kit.eps);
    CHECK(alg.relations.squares_zero);
    CHECK(alg.relations.commute);
    CHECK(alg.relations.products_independent);
    CHECK(alg.relations.witness_found);
    CHECK(alg.subset_products.size() == 4);
}
