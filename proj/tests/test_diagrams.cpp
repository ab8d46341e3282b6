#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jacklaurent/diagrams.hpp"
#include "jacklaurent/spectrum.hpp"

using namespace jl;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
}

TEST_CASE("conjugate") {
    CHECK(P({3, 1}).conjugate() == P({2, 1, 1}));
    CHECK(P({}).conjugate() == P({}));
    CHECK(P({2, 2}).conjugate() == P({2, 2}));
    for (const auto& p : partitions_inside(3, 4)) CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("theta") {
    CHECK(theta(Box{1, 1}, Rectangle(1, 1)) == Box{1, 1});
    CHECK(theta(Box{1, 2}, Rectangle(2, 2)) == Box{2, 1});
    CHECK(theta(Box{2, 3}, Rectangle(3, 4)) == Box{2, 2});
    CHECK_THROWS_AS(theta(Box{3, 1}, Rectangle(2, 2)), Error);
    Rectangle r(3, 4);
    for (const Box& b : r.boxes()) CHECK(theta(theta(b, r), r) == b);
}

TEST_CASE("omega") {
    CHECK(omega({P({1}), P({1})}, Rectangle(1, 1)) == Bipartition{P({1}), P({})});
    CHECK(omega({P({}), P({})}, Rectangle(2, 2)) == Bipartition{P({}), P({2, 2})});
    CHECK(omega({P({2}), P({2, 2})}, Rectangle(2, 2)) == Bipartition{P({2}), P({})});
    CHECK_THROWS_AS(omega({P({3}), P({})}, Rectangle(2, 2)), Error);
    // total involution on P_{n,m}
    Rectangle rect(3, 3);
    for (const auto& l : partitions_inside(3, 3)) {
        for (const auto& m : partitions_inside(3, 3)) {
            Bipartition a{l, m};
            CHECK(omega(omega(a, rect), rect) == a);
        }
    }
}

TEST_CASE("set operations") {
    CHECK(box_diff(P({2, 1}).boxes(), P({1}).boxes()) == BoxSet{{1, 2}, {2, 1}});
    CHECK_FALSE(is_young({{1, 1}, {2, 2}}));
    CHECK(subset_of({P({2}), P({1})}, {P({2, 1}), P({1, 1})}));
    CHECK_FALSE(subset_of({P({3}), P({})}, {P({2, 1}), P({1, 1})}));
    // union/intersection of partition box sets stay partitions
    for (const auto& a : partitions_inside(2, 3)) {
        for (const auto& b : partitions_inside(3, 2)) {
            CHECK(is_young(box_union(a.boxes(), b.boxes())));
            CHECK(is_young(box_intersect(a.boxes(), b.boxes())));
        }
    }
}

TEST_CASE("addable and removable boxes") {
    CHECK(P({2, 2}).removable_boxes() == std::vector<Box>{{2, 2}});
    CHECK(P({}).addable_boxes() == std::vector<Box>{{1, 1}});
    CHECK(P({3, 1}).removable_boxes() == std::vector<Box>{{1, 3}, {2, 1}});
    CHECK(P({3, 1}).addable_boxes() == std::vector<Box>{{1, 4}, {2, 2}, {3, 1}});
    CHECK(P({2}).with_box({1, 3}) == P({3}));
    CHECK_THROWS_AS(P({2}).with_box({2, 2}), Error);
    CHECK(P({2, 1}).without_box({2, 1}) == P({2}));
    CHECK_THROWS_AS(P({2, 1}).without_box({1, 1}), Error);
}

TEST_CASE("connected components") {
    auto comps = connected_components({{1, 2}, {2, 1}});
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == BoxSet{{1, 2}});  // NE first
    CHECK(comps[1] == BoxSet{{2, 1}});
    CHECK(connected_components({}).empty());
    CHECK(connected_components({{1, 1}, {1, 2}, {2, 1}}).size() == 1);
    // a partition of the input
    BoxSet s{{1, 3}, {2, 2}, {3, 1}, {3, 2}, {1, 4}};
    BoxSet all;
    std::size_t total = 0;
    for (const auto& c : connected_components(s)) {
        total += c.size();
        all = box_union(all, c);
    }
    CHECK(all == s);
    CHECK(total == s.size());
}

TEST_CASE("ascii rendering") {
    std::string one = render_ascii({P({1}), P({1})}, Rectangle(1, 1));
    CHECK(one.find('#') != std::string::npos);
    std::string empty = render_ascii({P({}), P({})}, Rectangle(2, 2));
    CHECK(empty.find('#') == std::string::npos);
    CHECK(empty.find('L') == std::string::npos);
    std::string two = render_ascii({P({2, 1}), P({2, 1})}, Rectangle(2, 2));
    // theta(mu) = {(1,2),(2,1),(2,2)}; intersection = {(1,2),(2,1)}: two shaded cells
    CHECK(std::count(two.begin(), two.end(), '#') == 2);
    CHECK(two.find("nu_2") != std::string::npos);
}
