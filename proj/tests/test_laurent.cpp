#include <doctest.h>

#include "tanglebounds/laurent.hpp"

using tb::LaurentPoly;
using tb::bigint;

namespace {
LaurentPoly t_pow(int quarters) { return LaurentPoly::monomial(1, quarters); }
}  // namespace

TEST_CASE("laurent basics") {
    LaurentPoly z = LaurentPoly::zero();
    CHECK(z.is_zero());
    CHECK(z.to_string() == "0");
    CHECK_THROWS_AS(z.min_exp(), std::logic_error);

    LaurentPoly one = LaurentPoly::one();
    CHECK(one.coeff(0) == 1);
    CHECK(one.min_exp() == 0);
    CHECK(one.max_exp() == 0);
    CHECK(one.to_string() == "1");

    LaurentPoly m = LaurentPoly::monomial(-3, 8);
    CHECK(m.coeff(8) == -3);
    CHECK(m.coeff(4) == 0);
    CHECK(m.to_string() == "-3*t^2");
}

TEST_CASE("laurent arithmetic") {
    LaurentPoly t = t_pow(4);
    LaurentPoly p = (t + LaurentPoly::one()) * (t - LaurentPoly::one());
    CHECK(p == t_pow(8) - LaurentPoly::one());

    CHECK(-p == LaurentPoly::one() - t_pow(8));
    CHECK((p - p).is_zero());

    LaurentPoly q = tb::pow(t + LaurentPoly::one(), 3);
    CHECK(q.coeff(0) == 1);
    CHECK(q.coeff(4) == 3);
    CHECK(q.coeff(8) == 3);
    CHECK(q.coeff(12) == 1);
    CHECK(tb::pow(p, 0) == LaurentPoly::one());

    CHECK(p.shifted(4) == t_pow(12) - t_pow(4));
    CHECK(p.scaled(-2) == t_pow(8).scaled(-2) + LaurentPoly::one().scaled(2));
}

TEST_CASE("laurent inverted and grid") {
    LaurentPoly v = t_pow(-4) + t_pow(-12) - t_pow(-16);
    LaurentPoly w = t_pow(4) + t_pow(12) - t_pow(16);
    CHECK(v.inverted() == w);
    CHECK(w.inverted() == v);
    CHECK(v.on_integer_grid());
    CHECK_FALSE((t_pow(2) + t_pow(10)).on_integer_grid());
}

TEST_CASE("laurent exact division") {
    LaurentPoly num = t_pow(16) - LaurentPoly::one();   // t^4 - 1
    LaurentPoly den = t_pow(8) - LaurentPoly::one();    // t^2 - 1
    CHECK(tb::divide_exact(num, den) == t_pow(8) + LaurentPoly::one());

    // shifted divisor: division handles Laurent (negative) supports
    CHECK(tb::divide_exact(num.shifted(-8), den) ==
          (t_pow(8) + LaurentPoly::one()).shifted(-8));

    CHECK_THROWS(tb::divide_exact(t_pow(4) + LaurentPoly::one(), den));
    CHECK(tb::divide_exact(LaurentPoly::zero(), den).is_zero());
}

TEST_CASE("laurent serialization") {
    // descending powers, explicit signed integer coefficients
    LaurentPoly v = -t_pow(16) + t_pow(12) + t_pow(4);
    CHECK(v.to_string() == "-1*t^4 + 1*t^3 + 1*t^1");

    CHECK((t_pow(2) - t_pow(-1)).to_string() == "1*t^(1/2) + -1*t^(-1/4)");
    CHECK((t_pow(0).scaled(3)).to_string() == "3");

    // bracket variable: A = t^(-1/4), printed in descending powers of A
    LaurentPoly unlink2 = LaurentPoly::monomial(-1, -2) + LaurentPoly::monomial(-1, 2);
    CHECK(unlink2.to_string_bracket() == "-1*A^2 + -1*A^-2");
    CHECK(LaurentPoly::one().to_string_bracket() == "1");
}
