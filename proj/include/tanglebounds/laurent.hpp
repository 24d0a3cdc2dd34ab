#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

namespace tb {

using bigint = boost::multiprecision::cpp_int;

// Integer-coefficient Laurent polynomial with exact arithmetic. Exponents live
// on a quarter-integer grid: the stored key counts quarters of t, so t^k is
// key 4k, t^(1/2) is key 2, and the bracket variable A (A = t^(-1/4)) is
// key -1. No floating point anywhere.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly zero();
    static LaurentPoly one();
    static LaurentPoly monomial(const bigint& coeff, int quarters);

    bool is_zero() const { return c_.empty(); }
    int min_exp() const;  // quarters; throws std::logic_error on the zero poly
    int max_exp() const;
    bigint coeff(int quarters) const;
    const std::map<int, bigint>& terms() const { return c_; }

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
    bool operator!=(const LaurentPoly& o) const { return c_ != o.c_; }

    LaurentPoly shifted(int quarters) const;  // multiply by t^(quarters/4)
    LaurentPoly scaled(const bigint& k) const;
    LaurentPoly inverted() const;  // substitute t -> 1/t
    bool on_integer_grid() const;  // every exponent a whole power of t

    // Canonical text form on the t grid, exponents descending, e.g.
    // "-1*t^4 + 1*t^3 + 1*t^1"; half-integer exponents print as t^(5/2),
    // quarter exponents as t^(3/4); the constant term prints bare.
    std::string to_string() const;
    // Same polynomial written in the bracket variable A = t^(-1/4).
    std::string to_string_bracket() const;

private:
    std::map<int, bigint> c_;  // quarters-of-t -> coefficient; zeros erased
};

LaurentPoly pow(const LaurentPoly& p, unsigned n);

// Exact division: returns q with num == q * den, ascending-order elimination.
// Throws std::logic_error if den is zero or the remainder is nonzero.
LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

}  // namespace tb
