#include <doctest.h>

#include "tanglebounds/diagram.hpp"
#include "tanglebounds/family.hpp"
#include "tanglebounds/twist.hpp"

using namespace tb;

namespace {
LinkDiagram left_trefoil() { return parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"); }
LinkDiagram hopf() { return parse_pd("X(1,3,2,4) X(3,1,4,2)"); }
}  // namespace

TEST_CASE("components and connectivity") {
    CHECK(count_components(left_trefoil()) == 1);
    CHECK(count_components(hopf()) == 2);
    CHECK(count_components(parse_pd("L0(2)")) == 2);
    CHECK(is_connected(left_trefoil()));
    CHECK_FALSE(is_connected(parse_pd("L0(2)")));
    CHECK_FALSE(is_connected(parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3) L0(1)")));
}

TEST_CASE("alternating detection") {
    CHECK(is_alternating(left_trefoil()));
    CHECK(is_alternating(hopf()));
    // flip one crossing of the trefoil: same shadow, not alternating
    LinkDiagram flipped = left_trefoil();
    auto& a = flipped.crossings[0].arcs;
    a = {a[1], a[2], a[3], a[0]};
    CHECK_FALSE(is_alternating(flipped));
    CHECK(is_alternating(gen_twist_tangle({2, 2})));
}

TEST_CASE("writhe and signs") {
    LinkDiagram lt = left_trefoil();
    CHECK(writhe(lt) == -3);
    CHECK(writhe(mirror(lt)) == 3);
    CHECK(writhe(numerator_closure(gen_twist_tangle({2, 2}))) == 0);

    Orientation o = orient(lt);
    int total = 0;
    for (int i = 0; i < 3; ++i) total += crossing_sign(lt, o, i);
    CHECK(total == -3);
}

TEST_CASE("mirror is an involution") {
    // X(a,b,c,d) and X(c,d,a,b) name the same crossing; normalize before
    // comparing
    auto normalized = [](LinkDiagram d) {
        for (Crossing& c : d.crossings) {
            std::array<int, 4> r = {c.arcs[2], c.arcs[3], c.arcs[0], c.arcs[1]};
            if (r < c.arcs) c.arcs = r;
        }
        return d;
    };
    for (const LinkDiagram& d : {left_trefoil(), hopf()}) {
        CHECK(normalized(mirror(mirror(d))) == normalized(d));
        CHECK(writhe(mirror(d)) == -writhe(d));
    }
}

TEST_CASE("tangle closures") {
    TangleDiagram t3 = gen_twist_tangle({3});
    LinkDiagram n = numerator_closure(t3);
    CHECK(n.crossings.size() == 3);
    CHECK(count_components(n) == 1);
    CHECK(is_alternating(n));
    CHECK(is_reduced(n));

    // denominator closure of a single twist block unwinds to a kinked unknot
    LinkDiagram d = denominator_closure(t3);
    CHECK(count_components(d) == 1);
    CHECK_FALSE(is_reduced(d));

    Closure seamed = numerator_closure_seamed(t3);
    CHECK(seamed.diagram == n);
    CHECK(seamed.seam_arcs.size() == 2);
}

TEST_CASE("conway sum tags summands") {
    LinkDiagram s = conway_sum({gen_twist_tangle({2, 2}), gen_twist_tangle({2, 2})});
    CHECK(s.crossings.size() == 8);
    CHECK_NOTHROW(validate(s));
    CHECK(is_connected(s));
    CHECK_NOTHROW(check_planarity(s));
    int seen1 = 0, seen2 = 0;
    for (const Crossing& c : s.crossings) {
        if (c.tangle_id == 1) ++seen1;
        if (c.tangle_id == 2) ++seen2;
    }
    CHECK(seen1 == 4);
    CHECK(seen2 == 4);
}

TEST_CASE("connected sum") {
    LinkDiagram lt = left_trefoil();
    LinkDiagram g = connected_sum(lt, 1, lt, 1);
    CHECK(g.crossings.size() == 6);
    CHECK(count_components(g) == 1);
    CHECK_NOTHROW(validate(g));
    CHECK_NOTHROW(check_planarity(g));
}

TEST_CASE("relabeling") {
    LinkDiagram lt = left_trefoil();
    CHECK(max_arc_id(lt) == 6);
    LinkDiagram shifted = relabeled(lt, 10);
    CHECK(max_arc_id(shifted) == 16);
    CHECK(shifted.crossings[0].arcs[0] == 11);
    CHECK_NOTHROW(validate(shifted));
}

TEST_CASE("blackboard 2-cable") {
    LinkDiagram lt = left_trefoil();
    Cable2 c = cable2_blackboard(lt);
    CHECK(c.diagram.crossings.size() == 12);
    CHECK(count_components(c.diagram) == 2);
    CHECK_NOTHROW(validate(c.diagram));
    CHECK_NOTHROW(check_planarity(c.diagram));
    CHECK(c.lanes.size() == 6);
    CHECK(writhe(c.diagram) == 4 * writhe(lt));
}

TEST_CASE("negative double of the zero-crossing unknot is the bare clasp") {
    LinkDiagram w = whitehead_double_negative(parse_pd("L0(1)"), 1);
    CHECK(w == parse_pd("X(1,4,3,1) X(4,2,2,3)"));
    CHECK(writhe(w) == -2);
    CHECK(count_components(w) == 1);
}

TEST_CASE("negative double of the trefoil") {
    LinkDiagram lt = left_trefoil();
    LinkDiagram w = whitehead_double_negative(lt, 1);
    CHECK(w.crossings.size() == 14);
    CHECK(count_components(w) == 1);
    CHECK_NOTHROW(validate(w));
    CHECK_NOTHROW(check_planarity(w));
    // the doubled strand runs back antiparallel, so the cable blocks cancel
    // and only the clasp contributes
    CHECK(writhe(w) == -2);
}
