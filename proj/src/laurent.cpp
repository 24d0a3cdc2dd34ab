#include "tanglebounds/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace tb {

LaurentPoly LaurentPoly::zero() { return LaurentPoly{}; }

LaurentPoly LaurentPoly::one() { return monomial(1, 0); }

LaurentPoly LaurentPoly::monomial(const bigint& coeff, int quarters) {
    LaurentPoly p;
    if (coeff != 0) p.c_[quarters] = coeff;
    return p;
}

int LaurentPoly::min_exp() const {
    if (c_.empty()) throw std::logic_error("degree of zero polynomial");
    return c_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (c_.empty()) throw std::logic_error("degree of zero polynomial");
    return c_.rbegin()->first;
}

bigint LaurentPoly::coeff(int quarters) const {
    auto it = c_.find(quarters);
    return it == c_.end() ? bigint(0) : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, v] : o.c_) {
        bigint& slot = c_[e];
        slot += v;
        if (slot == 0) c_.erase(e);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, v] : o.c_) {
        bigint& slot = c_[e];
        slot -= v;
        if (slot == 0) c_.erase(e);
    }
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, v1] : c_)
        for (const auto& [e2, v2] : o.c_) {
            bigint& slot = r.c_[e1 + e2];
            slot += v1 * v2;
            if (slot == 0) r.c_.erase(e1 + e2);
        }
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, v] : r.c_) v = -v;
    return r;
}

LaurentPoly LaurentPoly::shifted(int quarters) const {
    LaurentPoly r;
    for (const auto& [e, v] : c_) r.c_[e + quarters] = v;
    return r;
}

LaurentPoly LaurentPoly::scaled(const bigint& k) const {
    LaurentPoly r;
    if (k == 0) return r;
    for (const auto& [e, v] : c_) r.c_[e] = v * k;
    return r;
}

LaurentPoly LaurentPoly::inverted() const {
    LaurentPoly r;
    for (const auto& [e, v] : c_) r.c_[-e] = v;
    return r;
}

bool LaurentPoly::on_integer_grid() const {
    for (const auto& [e, v] : c_) {
        (void)v;
        if (e % 4 != 0) return false;
    }
    return true;
}

namespace {

void append_exponent(std::ostringstream& out, const char* var, int q) {
    if (q % 4 == 0) {
        out << var << "^" << q / 4;
    } else if (q % 2 == 0) {
        out << var << "^(" << q / 2 << "/2)";
    } else {
        out << var << "^(" << q << "/4)";
    }
}

}  // namespace

std::string LaurentPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        if (!first) out << " + ";
        first = false;
        if (it->first == 0) {
            out << it->second;
        } else {
            out << it->second << "*";
            append_exponent(out, "t", it->first);
        }
    }
    return out.str();
}

std::string LaurentPoly::to_string_bracket() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // A = t^(-1/4): descending powers of A are ascending quarters of t.
    for (auto it = c_.begin(); it != c_.end(); ++it) {
        if (!first) out << " + ";
        first = false;
        int a_exp = -it->first;
        if (a_exp == 0) {
            out << it->second;
        } else {
            out << it->second << "*A^" << a_exp;
        }
    }
    return out.str();
}

LaurentPoly pow(const LaurentPoly& p, unsigned n) {
    LaurentPoly r = LaurentPoly::one();
    LaurentPoly base = p;
    while (n > 0) {
        if (n & 1u) r = r * base;
        n >>= 1u;
        if (n > 0) base = base * base;
    }
    return r;
}

LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::logic_error("division by zero polynomial");
    LaurentPoly rem = num;
    LaurentPoly quot;
    const int den_lo = den.min_exp();
    const bigint den_c = den.coeff(den_lo);
    // Any exact quotient has top exponent num.max - den.max.
    const int quot_top = num.is_zero() ? 0 : num.max_exp() - den.max_exp();
    while (!rem.is_zero()) {
        const int e = rem.min_exp();
        const bigint c = rem.coeff(e);
        if (c % den_c != 0 || e - den_lo > quot_top)
            throw std::logic_error("inexact polynomial division");
        LaurentPoly term = LaurentPoly::monomial(c / den_c, e - den_lo);
        quot += term;
        rem -= term * den;
    }
    return quot;
}

}  // namespace tb
