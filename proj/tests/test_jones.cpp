#include <doctest.h>

#include "tanglebounds/diagram.hpp"
#include "tanglebounds/family.hpp"
#include "tanglebounds/jones.hpp"

using namespace tb;

namespace {
LaurentPoly t_pow(int quarters) { return LaurentPoly::monomial(1, quarters); }
LinkDiagram left_trefoil() { return parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"); }
LinkDiagram fig8() { return numerator_closure(gen_twist_tangle({2, 2})); }
}  // namespace

TEST_CASE("bracket of trivial diagrams") {
    CHECK(kauffman_bracket(parse_pd("L0(1)")) == LaurentPoly::one());
    // two-component unlink: -A^2 - A^-2
    LaurentPoly two = kauffman_bracket(parse_pd("L0(2)"));
    CHECK(two == LaurentPoly::monomial(-1, -2) + LaurentPoly::monomial(-1, 2));
    CHECK(two.to_string_bracket() == "-1*A^2 + -1*A^-2");
}

TEST_CASE("left trefoil pins the smoothing conventions") {
    LaurentPoly v = jones_polynomial(left_trefoil());
    CHECK(v == t_pow(-4) + t_pow(-12) - t_pow(-16));
    CHECK(v.to_string() == "1*t^-1 + 1*t^-3 + -1*t^-4");
}

TEST_CASE("right trefoil") {
    LaurentPoly v = jones_polynomial(mirror(left_trefoil()));
    CHECK(v == t_pow(4) + t_pow(12) - t_pow(16));
    CHECK(v.to_string() == "-1*t^4 + 1*t^3 + 1*t^1");
    CHECK(v == jones_polynomial(left_trefoil()).inverted());
}

TEST_CASE("figure eight") {
    LaurentPoly v = jones_polynomial(fig8());
    LaurentPoly expect = t_pow(-8) - t_pow(-4) + LaurentPoly::one() - t_pow(4) + t_pow(8);
    CHECK(v == expect);
    CHECK(v == v.inverted());  // amphichiral
}

TEST_CASE("hopf link") {
    LaurentPoly v = jones_polynomial(parse_pd("X(1,3,2,4) X(3,1,4,2)"));
    LaurentPoly pos = -t_pow(2) - t_pow(10);   // -t^(1/2) - t^(5/2)
    CHECK((v == pos || v == pos.inverted()));
    CHECK_FALSE(v.on_integer_grid());
}

TEST_CASE("state sum and skein recursion agree") {
    for (const LinkDiagram& d :
         {left_trefoil(), fig8(), parse_pd("X(1,3,2,4) X(3,1,4,2)"),
          trefoil_connect_sum(2, true),
          conway_sum({gen_twist_tangle({2, 2}), gen_twist_tangle({2, 2})})}) {
        CHECK(kauffman_bracket(d) == bracket_skein(d));
    }
}

TEST_CASE("jones is orientation-stable on knots") {
    LinkDiagram lt = left_trefoil();
    Orientation o = orient(lt);
    CHECK(jones_polynomial(lt, o) == jones_polynomial(lt));
}

TEST_CASE("connected sums multiply") {
    LaurentPoly rt = jones_polynomial(mirror(left_trefoil()));
    LaurentPoly granny = jones_polynomial(trefoil_connect_sum(2, true));
    CHECK(granny == rt * rt);
    CHECK(granny == t_pow(8) + t_pow(16).scaled(2) - t_pow(20).scaled(2) + t_pow(24) -
                        t_pow(28).scaled(2) + t_pow(32));

    // square knot: trefoil # mirror trefoil
    LinkDiagram lt = left_trefoil();
    LaurentPoly square = jones_polynomial(connected_sum(lt, 1, mirror(lt), 1));
    CHECK(square == rt * rt.inverted());
    CHECK(square == -t_pow(12) + t_pow(8) - t_pow(4) + LaurentPoly::one().scaled(3) -
                        t_pow(-4) + t_pow(-8) - t_pow(-12));
}

TEST_CASE("torus closed form") {
    CHECK(torus_jones(2, 3) == torus_jones(3, 2));
    CHECK(torus_jones(2, 3) == t_pow(4) + t_pow(12) - t_pow(16));
    CHECK(torus_jones(2, 5) == t_pow(8) + t_pow(16) - t_pow(20) + t_pow(24) - t_pow(28));
    CHECK(torus_jones(2, 7) == t_pow(12) + t_pow(20) - t_pow(24) + t_pow(28) -
                                   t_pow(32) + t_pow(36) - t_pow(40));
    CHECK_THROWS_AS(torus_jones(2, 4), std::invalid_argument);  // gcd 2
    CHECK_THROWS_AS(torus_jones(1, 5), std::invalid_argument);
}

TEST_CASE("coefficient summary") {
    JonesSummary rt = coefficient_summary(jones_polynomial(mirror(left_trefoil())));
    CHECK(rt.alpha == -1);
    CHECK(rt.beta == 1);
    CHECK(rt.beta_prime == 0);
    CHECK(rt.alpha_prime == 1);
    CHECK(rt.t_l == 1);
    CHECK(rt.span_q == 12);

    JonesSummary lt = coefficient_summary(jones_polynomial(left_trefoil()));
    CHECK(lt.alpha == 1);
    CHECK(lt.beta == 0);
    CHECK(lt.beta_prime == 1);
    CHECK(lt.alpha_prime == -1);
    CHECK(lt.t_l == 1);

    JonesSummary f8 = coefficient_summary(jones_polynomial(fig8()));
    CHECK(f8.alpha == 1);
    CHECK(f8.beta == -1);
    CHECK(f8.beta_prime == -1);
    CHECK(f8.alpha_prime == 1);
    CHECK(f8.t_l == 2);
    CHECK(f8.span_q == 16);
}

TEST_CASE("state sum cap") {
    CHECK_THROWS_AS(kauffman_bracket(fig8(), 3), cap_exceeded);
    try {
        kauffman_bracket(fig8(), 3);
    } catch (const cap_exceeded& e) {
        CHECK(e.crossings == 4);
        CHECK(e.cap == 3);
    }
}
