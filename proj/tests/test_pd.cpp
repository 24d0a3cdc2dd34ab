#include <doctest.h>

#include "tanglebounds/pd.hpp"

using namespace tb;

TEST_CASE("pd parse and round trip") {
    LinkDiagram d = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    REQUIRE(d.crossings.size() == 3);
    CHECK(d.free_loops == 0);
    CHECK(d.crossings[0].arcs[0] == 1);
    CHECK(d.crossings[0].arcs[1] == 4);
    CHECK(d.crossings[0].arcs[2] == 2);
    CHECK(d.crossings[0].arcs[3] == 5);
    CHECK_NOTHROW(validate(d));
    CHECK(serialize_pd(d) == "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    CHECK(parse_pd(serialize_pd(d)) == d);

    // whitespace and newlines between tokens are fine
    CHECK(parse_pd("X(1,4,2,5)\n  X(3,6,4,1)\tX(5,2,6,3)") == d);
}

TEST_CASE("pd free loops") {
    LinkDiagram u = parse_pd("L0(1)");
    CHECK(u.crossings.empty());
    CHECK(u.free_loops == 1);
    CHECK_NOTHROW(validate(u));
    CHECK(serialize_pd(u) == "L0(1)");

    LinkDiagram mixed = parse_pd("X(1,3,2,4) X(3,1,4,2) L0(2)");
    CHECK(mixed.crossings.size() == 2);
    CHECK(mixed.free_loops == 2);
    CHECK(parse_pd(serialize_pd(mixed)) == mixed);
}

TEST_CASE("pd parse errors carry offsets") {
    try {
        parse_pd("X(1,4,2,5) Y(3,6,4,1)");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.offset == 11);
    }
    CHECK_THROWS_AS(parse_pd("X(1,4,2"), parse_error);
    CHECK_THROWS_AS(parse_pd("X(1,4,2,5,6)"), parse_error);
    CHECK_THROWS_AS(parse_pd(""), parse_error);
}

TEST_CASE("pd validation rejects bad arc multiplicity") {
    LinkDiagram bad;
    bad.crossings.push_back({{1, 4, 2, 5}, 0});
    bad.crossings.push_back({{3, 6, 4, 1}, 0});
    bad.crossings.push_back({{5, 2, 6, 2}, 0});  // arc 2 three times, 3 once
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    // parse_pd validates on the way in
    CHECK_THROWS_AS(parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,2)"),
                    std::invalid_argument);
}

TEST_CASE("tangle parse and round trip") {
    TangleDiagram t =
        parse_tangle("T{nw=1,ne=2,se=4,sw=3}[X(1,3,6,5) X(5,6,8,7) X(7,8,4,2)]");
    CHECK(t.inner.crossings.size() == 3);
    CHECK(t.corner(Corner::NW) == 1);
    CHECK(t.corner(Corner::NE) == 2);
    CHECK(t.corner(Corner::SE) == 4);
    CHECK(t.corner(Corner::SW) == 3);
    CHECK_NOTHROW(validate(t));
    CHECK(serialize_tangle(t) ==
          "T{nw=1,ne=2,se=4,sw=3}[X(1,3,6,5) X(5,6,8,7) X(7,8,4,2)]");

    // boundary arcs must appear exactly once inside
    CHECK_THROWS_AS(
        validate(parse_tangle("T{nw=1,ne=2,se=4,sw=3}[X(1,1,2,2) L0(0)]")),
        std::invalid_argument);
}

TEST_CASE("corner names") {
    CHECK(std::string(corner_name(Corner::NW)) == "nw");
    CHECK(std::string(corner_name(Corner::SE)) == "se");
}
