#include <catch2/catch_amalgamated.hpp>

#include "nilq/quiver.hpp"

using namespace nilq;

namespace {

Quiver jordan() { return Quiver({"1"}, {{"a", "1", "1"}}); }
Quiver a2() { return Quiver({"x", "y"}, {{"a", "x", "y"}}); }
Quiver kronecker() { return Quiver({"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}}); }

}  // namespace

TEST_CASE("quiver construction validates input") {
    REQUIRE_THROWS(Quiver({"x", "x"}, {}));
    REQUIRE_THROWS(Quiver({"x"}, {{"a", "x", "z"}}));
    REQUIRE_THROWS(Quiver({"x"}, {{"a", "x", "x"}, {"a", "x", "x"}}));
}

TEST_CASE("paths_up_to_length") {
    // A_2, L=1: e_x, e_y, a
    REQUIRE(paths_up_to_length(a2(), 1).size() == 3);
    // Jordan, L=2: e, a, a^2
    REQUIRE(paths_up_to_length(jordan(), 2).size() == 3);
    // Kronecker, L=1: two trivial + two arrows
    REQUIRE(paths_up_to_length(kronecker(), 1).size() == 4);
}

TEST_CASE("staircase shape") {
    // |Q_0| s vertices, |Q_0|(s-1) vertical and |Q_1|(s-1) diagonal arrows
    for (int s : {1, 2, 3, 4}) {
        auto sq = staircase(kronecker(), s);
        REQUIRE(sq.quiver.vertex_count() == 2 * static_cast<std::size_t>(s));
        std::size_t verticals = 0, diagonals = 0;
        for (const auto& info : sq.arrow_info)
            (info.kind == StaircaseQuiver::ArrowKind::Vertical ? verticals : diagonals)++;
        REQUIRE(verticals == 2 * static_cast<std::size_t>(s - 1));
        REQUIRE(diagonals == 2 * static_cast<std::size_t>(s - 1));
    }
    // s=1: no arrows at all
    REQUIRE(staircase(a2(), 1).quiver.arrow_count() == 0);
    // A_2, s=2: 4 vertices, 2 vertical + 1 diagonal
    auto sq = staircase(a2(), 2);
    REQUIRE(sq.quiver.vertex_count() == 4);
    REQUIRE(sq.quiver.arrow_count() == 3);
    // Jordan staircase is the doubled A_s quiver
    auto dj = staircase(jordan(), 3);
    REQUIRE(dj.quiver.vertex_count() == 3);
    REQUIRE(dj.quiver.arrow_count() == 4);  // b_1, b_2, a_2, a_3
}

TEST_CASE("separation quiver") {
    // one loop becomes a single crossing arrow (type A_2)
    auto sep = separation_quiver(jordan());
    REQUIRE(sep.vertex_count() == 2);
    REQUIRE(sep.arrow_count() == 1);
    auto t = is_dynkin(sep);
    REQUIRE(t.has_value());
    REQUIRE(t->size() == 1);
    REQUIRE((*t)[0] == DynkinType{'A', 2});

    // no arrows: isolated vertices, twice as many
    Quiver bare({"1", "2"}, {});
    REQUIRE(separation_quiver(bare).vertex_count() == 4);

    // separation quivers have no length-2 paths
    auto paths = paths_up_to_length(separation_quiver(kronecker()), 2);
    for (const auto& p : paths) REQUIRE(p.length() < 2);
}

TEST_CASE("the example quiver separates to E_6") {
    // arrows 1 <-> 2, loop at 2, 2 -> 3, loop at 3
    Quiver q({"1", "2", "3"}, {{"a", "1", "2"},
                               {"b", "2", "1"},
                               {"c", "2", "2"},
                               {"d", "2", "3"},
                               {"e", "3", "3"}});
    auto sep = separation_quiver(q);
    auto t = is_dynkin(sep);
    REQUIRE(t.has_value());
    REQUIRE(t->size() == 1);
    REQUIRE((*t)[0] == DynkinType{'E', 6});
}

TEST_CASE("dynkin recognition rejects non-trees and classifies ADE") {
    REQUIRE(!is_dynkin(kronecker()).has_value());  // multiple edge
    REQUIRE(!is_dynkin(jordan()).has_value());     // loop
    auto ta = is_dynkin(a2());
    REQUIRE(ta.has_value());
    REQUIRE((*ta)[0] == DynkinType{'A', 2});
    // D_4: three arrows into a center
    Quiver d4({"1", "2", "3", "c"}, {{"a", "1", "c"}, {"b", "2", "c"}, {"d", "3", "c"}});
    auto td = is_dynkin(d4);
    REQUIRE(td.has_value());
    REQUIRE((*td)[0] == DynkinType{'D', 4});
    // E_7: legs 1,2,3
    Quiver e7({"1", "2", "3", "4", "5", "6", "c"},
              {{"a", "1", "c"},
               {"b", "2", "3"},
               {"b2", "3", "c"},
               {"d", "4", "5"},
               {"d2", "5", "6"},
               {"d3", "6", "c"}});
    auto te = is_dynkin(e7);
    REQUIRE(te.has_value());
    REQUIRE((*te)[0] == DynkinType{'E', 7});
    // A_3 cycle is not Dynkin
    Quiver cyc({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "1"}});
    REQUIRE(!is_dynkin(cyc).has_value());
    // two components classify separately
    Quiver two({"1", "2", "3"}, {{"a", "1", "2"}});
    auto tt = is_dynkin(two);
    REQUIRE(tt.has_value());
    REQUIRE(tt->size() == 2);
}

TEST_CASE("unions of oriented cycles") {
    REQUIRE(is_union_of_oriented_cycles(jordan()));
    REQUIRE(!is_union_of_oriented_cycles(a2()));
    Quiver cycles({"1", "2", "3", "4", "5"},
                  {{"a", "1", "2"},
                   {"b", "2", "1"},
                   {"c", "3", "4"},
                   {"d", "4", "5"},
                   {"e", "5", "3"}});
    REQUIRE(is_union_of_oriented_cycles(cycles));
    REQUIRE(!is_union_of_oriented_cycles(kronecker()));
}

TEST_CASE("dimension formulas of the flagged setting") {
    // s=1: everything degenerates
    DimFiltration d1{{{3, 2}}};
    REQUIRE(dim_repdd(kronecker(), d1) == 0);
    REQUIRE(dim_rf(kronecker(), d1) == 0);
    REQUIRE(euler_form_one(kronecker(), d1) == 13);

    // Kronecker, dd = ((0,1),(1,1))
    DimFiltration dk{{{0, 1}, {1, 1}}};
    REQUIRE(dim_repdd(kronecker(), dk) == 2);
    REQUIRE(dim_rf(kronecker(), dk) == 2);
    REQUIRE(euler_form_one(kronecker(), dk) == 0);

    // Jordan, dd = ((1),(2))
    DimFiltration dj{{{1}, {2}}};
    REQUIRE(dim_repdd(jordan(), dj) == 1);
    REQUIRE(dim_rf(jordan(), dj) == 2);
    REQUIRE(euler_form_one(jordan(), dj) == 2);
}

TEST_CASE("filtration helpers") {
    DimFiltration good{{{0, 1}, {1, 1}}};
    REQUIRE(good.is_monotone());
    DimFiltration bad{{{2, 0}, {1, 1}}};
    REQUIRE(!bad.is_monotone());
    REQUIRE(good.pointwise_leq(DimFiltration{{{1, 1}, {1, 1}}}));

    auto sq = staircase(kronecker(), 2);
    auto flat = sq.flatten(good);
    REQUIRE(flat == DimVector{0, 1, 1, 1});
    REQUIRE(sq.unflatten(flat) == good);
}
