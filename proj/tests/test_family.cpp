#include <doctest.h>

#include <set>

#include "tanglebounds/diagram.hpp"
#include "tanglebounds/family.hpp"
#include "tanglebounds/fixtures.hpp"
#include "tanglebounds/jones.hpp"
#include "tanglebounds/state_graph.hpp"
#include "tanglebounds/twist.hpp"

using namespace tb;

TEST_CASE("twist tangle construction") {
    TangleDiagram t3 = gen_twist_tangle({3});
    CHECK(serialize_tangle(t3) ==
          "T{nw=1,ne=2,se=4,sw=3}[X(1,3,6,5) X(5,6,8,7) X(7,8,4,2)]");
    CHECK_NOTHROW(validate(t3));
    CHECK_NOTHROW(check_tangle_planarity(t3));

    TangleDiagram t22 = gen_twist_tangle({2, 2});
    CHECK(serialize_tangle(t22) ==
          "T{nw=1,ne=7,se=8,sw=3}[X(1,3,6,5) X(5,6,4,2) X(2,9,10,7) X(9,4,8,10)]");
    CHECK(is_alternating(t22));

    CHECK_THROWS_AS(gen_twist_tangle({}), std::invalid_argument);
    CHECK_THROWS_AS(gen_twist_tangle({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(gen_twist_tangle({2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(gen_twist_tangle({2, -2}), std::invalid_argument);
}

TEST_CASE("twist tangle closures") {
    // single block closes to the (2,n) picture
    LaurentPoly tre = jones_polynomial(numerator_closure(gen_twist_tangle({3})));
    CHECK((tre == torus_jones(2, 3) || tre == torus_jones(2, 3).inverted()));

    LaurentPoly t12 = jones_polynomial(numerator_closure(gen_twist_tangle({1, 2})));
    CHECK((t12 == torus_jones(2, 3) || t12 == torus_jones(2, 3).inverted()));

    // [2,2] closes to the figure eight
    LaurentPoly f8 = jones_polynomial(numerator_closure(gen_twist_tangle({2, 2})));
    LaurentPoly expect = LaurentPoly::monomial(1, -8) - LaurentPoly::monomial(1, -4) +
                         LaurentPoly::one() - LaurentPoly::monomial(1, 4) +
                         LaurentPoly::monomial(1, 8);
    CHECK(f8 == expect);

    // mirrored input gives the mirrored tangle
    TangleDiagram tm = gen_twist_tangle({-2, -2});
    TangleDiagram t22m = mirror(gen_twist_tangle({2, 2}));
    CHECK(tm.inner == t22m.inner);
    CHECK(tm.boundary == t22m.boundary);
    CHECK(jones_polynomial(numerator_closure(tm)) == expect);
}

TEST_CASE("strong alternation") {
    CHECK(strongly_alternating(wheel_tangle()));
    CHECK(strongly_alternating(mirror(wheel_tangle())));

    // one or two ladder blocks leave a corner pair on the first crossing, so
    // one closure is always kinked; from three blocks on, both closures are
    // reduced (as long as the last block has length at least two)
    CHECK_FALSE(strongly_alternating(gen_twist_tangle({3})));
    CHECK_FALSE(strongly_alternating(gen_twist_tangle({2, 2})));
    CHECK_FALSE(strongly_alternating(gen_twist_tangle({3, 3})));
    CHECK(strongly_alternating(gen_twist_tangle({2, 2, 2})));
    CHECK(strongly_alternating(gen_twist_tangle({1, 2, 2})));
    CHECK(strongly_alternating(gen_twist_tangle({3, 2, 2})));
    CHECK(strongly_alternating(gen_twist_tangle({2, 2, 2, 2})));
    CHECK_FALSE(strongly_alternating(gen_twist_tangle({2, 2, 1})));
}

TEST_CASE("wheel tangle") {
    TangleDiagram w = wheel_tangle();
    CHECK(w.inner.crossings.size() == 5);
    CHECK_NOTHROW(validate(w));
    CHECK_NOTHROW(check_tangle_planarity(w));
    CHECK(is_alternating(w));
    CHECK(tangle_twist_number(w) == 5);
    for (const LinkDiagram& c :
         {numerator_closure(w), denominator_closure(w)}) {
        CHECK(is_reduced(c));
        CHECK(is_alternating(c));
        CHECK(twist_number(c) == 3);
    }
}

TEST_CASE("torus braid closures") {
    LinkDiagram t23 = gen_braid_torus(2, 3);
    CHECK(t23.crossings.size() == 3);
    CHECK(count_components(t23) == 1);
    LaurentPoly v = jones_polynomial(t23);
    CHECK((v == torus_jones(2, 3) || v == torus_jones(2, 3).inverted()));

    LinkDiagram t22 = gen_braid_torus(2, 2);
    CHECK(count_components(t22) == 2);

    LinkDiagram t34 = gen_braid_torus(3, 4);
    CHECK(t34.crossings.size() == 8);
    CHECK(count_components(t34) == 1);

    CHECK_THROWS_AS(gen_braid_torus(2, 27), cap_exceeded);
    CHECK_THROWS_AS(gen_braid_torus(1, 3), std::invalid_argument);
}

TEST_CASE("trefoil generators") {
    CHECK(writhe(trefoil(true)) == 3);
    CHECK(writhe(trefoil(false)) == -3);
    CHECK(jones_polynomial(trefoil(false)) ==
          jones_polynomial(trefoil(true)).inverted());
    CHECK(trefoil_connect_sum(1, true) == trefoil(true));
    LinkDiagram g = trefoil_connect_sum(3, true);
    CHECK(g.crossings.size() == 9);
    CHECK(count_components(g) == 1);
    CHECK(jones_polynomial(g) == pow(jones_polynomial(trefoil(true)), 3));
}

TEST_CASE("doubled connect sums") {
    LinkDiagram w1 = gen_whitehead_trefoils(1);
    CHECK(w1.crossings.size() == 14);
    CHECK(count_components(w1) == 1);
    CHECK_NOTHROW(validate(w1));
    CHECK(is_adequate(w1, Resolution::B));
    CHECK_FALSE(is_alternating(w1));

    ReducedStateGraph g = reduce(state_graph(w1, Resolution::B));
    CHECK(g.e_prime() == 8);   // 5m + 3
    CHECK(g.v_prime() == 7);   // 4m + 3
    CHECK(first_betti(g) == 2);

    LinkDiagram w2 = gen_whitehead_trefoils(2);
    CHECK(w2.crossings.size() == 26);
    ReducedStateGraph g2 = reduce(state_graph(w2, Resolution::B));
    CHECK(g2.e_prime() == 13);
    CHECK(g2.v_prime() == 11);
    CHECK(first_betti(g2) == 3);
}

TEST_CASE("doubled family sweep") {
    std::vector<WhiteheadRecord> rows = family_whitehead(3, 16);
    REQUIRE(rows.size() == 3);
    for (const WhiteheadRecord& r : rows) {
        CHECK(r.crossings == 12 * r.m + 2);
        CHECK(r.e_prime == 5 * r.m + 3);
        CHECK(r.v_prime == 4 * r.m + 3);
        CHECK(r.betti == r.e_prime - r.v_prime + 1);
        CHECK(r.adequate_b);
        CHECK(r.k == 1);
    }
    // only m = 1 fits under a cap of 16 crossings
    CHECK(rows[0].t_l.has_value());
    CHECK_FALSE(rows[1].t_l.has_value());

    // the head coefficient counts the cycles of the reduced graph
    REQUIRE(rows[0].abs_beta.has_value());
    CHECK(*rows[0].abs_beta == rows[0].betti);

    CHECK(family_whitehead(0, 16).empty());
}

TEST_CASE("fixture corpus sanity") {
    std::vector<Fixture> fx = fixture_corpus();
    CHECK(fx.size() >= 25);
    int sums = 0;
    std::set<std::string> names;
    for (const Fixture& f : fx) {
        CHECK(names.insert(f.name).second);  // unique names
        CHECK_NOTHROW(validate(f.d));
        if (f.l >= 2) ++sums;
    }
    CHECK(sums >= 12);

    std::vector<TangleFixture> tf = tangle_corpus();
    CHECK(tf.size() >= 8);
    for (const TangleFixture& t : tf) CHECK_NOTHROW(validate(t.t));
}

TEST_CASE("records from fixtures") {
    for (const Fixture& f : fixture_corpus()) {
        if (f.name != "trefoil-left") continue;
        LinkRecord r = make_record(f);
        CHECK(r.c == 3);
        CHECK(r.k == 1);
        CHECK(r.tw == 1);
        CHECK(r.t_l == 1);
        CHECK(r.flags.alternating);
        CHECK(r.flags.reduced);
        CHECK(r.flags.non_split);
        CHECK(r.known_crosscap == 1);
        return;
    }
    FAIL("trefoil-left fixture missing");
}
