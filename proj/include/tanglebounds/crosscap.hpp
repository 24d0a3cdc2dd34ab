#pragma once

#include <vector>

#include "tanglebounds/laurent.hpp"

namespace tb {

// Euclidean continued fraction [a0, a1, ..., an] of p/q with all a_i >= 0,
// a_i >= 1 for i >= 1, and the final term > 1 whenever n >= 1 (trailing-1
// folding), so the expansion is the unique normalized one. Requires q >= 1,
// p >= 0, gcd(p, q) = 1.
std::vector<long long> continued_fraction(long long p, long long q);

// Companion sequence: b0 = a0; b_i = a_i unless b_{i-1} = a_{i-1} and the
// partial sum b_0 + ... + b_{i-1} is even, in which case b_i = 0.
std::vector<long long> b_sequence(const std::vector<long long>& a);

// Half-sum N(p,q) = (b0 + b1 + ... + bn) / 2. Throws std::logic_error when
// the sum is odd (the value would not be an integer).
long long half_sum(long long p, long long q);
inline long long N(long long p, long long q) { return half_sum(p, q); }

// Crosscap number of the torus knot T(p,q), p,q >= 2, gcd = 1:
//  - pq even: N evaluated with the even parameter as numerator;
//  - pq odd: with x the solution of xq = -1 mod p, 0 < x < p,
//    N(pq-1, p^2) when x is even, N(pq+1, p^2) when x is odd.
long long crosscap_torus(long long p, long long q);

// One row of the torus sweep family: the (2 + 2qk, q) knots.
struct FamilyARecord {
    int q = 0;
    int k = 0;
    long long p = 0;       // 2 + 2qk
    long long crosscap = 0;
    long long t_l = 0;
    bigint alpha, beta, beta_prime, alpha_prime;
    bool crosscap_matches_k_plus_1 = false;
    bool t_l_at_most_2 = false;
};

std::vector<FamilyARecord> family_part_a(int q, int k_max);

}  // namespace tb
