#include <doctest.h>

#include "tanglebounds/diagram.hpp"
#include "tanglebounds/family.hpp"
#include "tanglebounds/twist.hpp"

using namespace tb;

namespace {
LinkDiagram left_trefoil() { return parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"); }
LinkDiagram fig8() { return numerator_closure(gen_twist_tangle({2, 2})); }
}  // namespace

TEST_CASE("face census") {
    FaceCensus u = faces(parse_pd("L0(1)"));
    CHECK(u.faces.empty());
    CHECK(u.loop_faces == 2);
    CHECK(u.pieces == 1);

    FaceCensus t = faces(left_trefoil());
    CHECK(t.faces.size() == 5);  // V - E + F = 3 - 6 + 5... plus outer: 3-6+5=2
    CHECK(t.pieces == 1);

    FaceCensus f = faces(fig8());
    CHECK(f.faces.size() == 6);

    int bigons = 0;
    for (const Face& face : t.faces) bigons += face.is_bigon() ? 1 : 0;
    CHECK(bigons == 3);
}

TEST_CASE("planarity validation") {
    CHECK_NOTHROW(check_planarity(left_trefoil()));
    CHECK_NOTHROW(check_planarity(fig8()));
    CHECK_NOTHROW(check_planarity(parse_pd("X(1,3,2,4) X(3,1,4,2)")));
    CHECK_NOTHROW(check_tangle_planarity(gen_twist_tangle({2, 2})));
    CHECK_NOTHROW(check_tangle_planarity(wheel_tangle()));

    // swapping two labels breaks the rotation system; parsing validates it
    CHECK_THROWS_AS(parse_pd("X(1,4,2,5) X(3,6,1,4) X(5,2,6,3)"),
                    std::invalid_argument);
}

TEST_CASE("reduced detection") {
    CHECK(is_reduced(left_trefoil()));
    CHECK(is_reduced(fig8()));
    CHECK_FALSE(is_reduced(parse_pd("X(1,1,2,2)")));
    CHECK_FALSE(is_reduced(denominator_closure(gen_twist_tangle({3}))));
}

TEST_CASE("twist regions") {
    LinkDiagram lt = left_trefoil();
    std::vector<TwistRegion> r = twist_regions(lt);
    REQUIRE(r.size() == 1);
    CHECK(r[0].crossings.size() == 3);
    CHECK(twist_number(lt) == 1);

    CHECK(twist_number(fig8()) == 2);
    CHECK(twist_number(parse_pd("X(1,3,2,4) X(3,1,4,2)")) == 1);
    CHECK(twist_number(trefoil_connect_sum(2, true)) == 2);
    CHECK(twist_number(gen_braid_torus(2, 5)) == 1);
}

TEST_CASE("twist regions of conway sums add per summand") {
    LinkDiagram s = conway_sum({gen_twist_tangle({2, 2}), gen_twist_tangle({2, 2})});
    CHECK(twist_number(s) == 4);
    LinkDiagram s3 = conway_sum({gen_twist_tangle({1, 2}), gen_twist_tangle({1, 2}),
                                 gen_twist_tangle({1, 2})});
    CHECK(twist_number(s3) == 6);
}

TEST_CASE("tangle twist number ignores closure seams") {
    CHECK(tangle_twist_number(gen_twist_tangle({2, 2})) == 2);
    CHECK(tangle_twist_number(gen_twist_tangle({3})) == 1);
    CHECK(tangle_twist_number(gen_twist_tangle({2, 2, 2})) == 3);
    CHECK(tangle_twist_number(wheel_tangle()) == 5);

    // the closures of the wheel lose the corner regions
    CHECK(twist_number(numerator_closure(wheel_tangle())) == 3);
    CHECK(twist_number(denominator_closure(wheel_tangle())) == 3);
}

TEST_CASE("twist regions avoiding seam arcs") {
    Closure c = numerator_closure_seamed(gen_twist_tangle({3}));
    std::vector<TwistRegion> avoided = twist_regions_avoiding(c.diagram, c.seam_arcs);
    CHECK(avoided.size() == 1);
}
