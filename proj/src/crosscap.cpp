#include "tanglebounds/crosscap.hpp"

#include <numeric>
#include <stdexcept>

#include "tanglebounds/jones.hpp"

namespace tb {

std::vector<long long> continued_fraction(long long p, long long q) {
    if (q < 1) throw std::invalid_argument("continued fraction needs q >= 1");
    if (p < 0) throw std::invalid_argument("continued fraction needs p >= 0");
    if (std::gcd(p, q) != 1)
        throw std::invalid_argument("continued fraction needs gcd(p, q) = 1");
    std::vector<long long> a;
    while (q != 0) {
        a.push_back(p / q);
        long long r = p % q;
        p = q;
        q = r;
    }
    // Normalize a trailing 1 (…, a, 1) -> (…, a+1).
    if (a.size() >= 2 && a.back() == 1) {
        a.pop_back();
        a.back() += 1;
    }
    return a;
}

std::vector<long long> b_sequence(const std::vector<long long>& a) {
    std::vector<long long> b;
    b.reserve(a.size());
    long long partial = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        long long bi;
        if (i == 0) {
            bi = a[0];
        } else if (b[i - 1] == a[i - 1] && partial % 2 == 0) {
            bi = 0;
        } else {
            bi = a[i];
        }
        b.push_back(bi);
        partial += bi;
    }
    return b;
}

long long half_sum(long long p, long long q) {
    std::vector<long long> b = b_sequence(continued_fraction(p, q));
    long long total = 0;
    for (long long x : b) total += x;
    if (total % 2 != 0)
        throw std::logic_error("half-sum is not an integer for " + std::to_string(p) +
                               "/" + std::to_string(q));
    return total / 2;
}

long long crosscap_torus(long long p, long long q) {
    if (p < 2 || q < 2)
        throw std::invalid_argument("torus knot parameters must be >= 2");
    if (std::gcd(p, q) != 1)
        throw std::invalid_argument("torus knot parameters must be coprime");
    if (p % 2 == 0 || q % 2 == 0) {
        // Even case: the half-sum is an integer with the even parameter as
        // numerator (the other order can produce an odd sum).
        long long even = p % 2 == 0 ? p : q;
        long long odd = p % 2 == 0 ? q : p;
        return half_sum(even, odd);
    }
    // Odd case: x q = -1 (mod p), 0 < x < p.
    long long x = -1;
    for (long long cand = 1; cand < p; ++cand) {
        if ((cand * q) % p == p - 1) {
            x = cand;
            break;
        }
    }
    if (x < 0) throw std::logic_error("no inverse: parameters not coprime?");
    if (x % 2 == 0) return half_sum(p * q - 1, p * p);
    return half_sum(p * q + 1, p * p);
}

std::vector<FamilyARecord> family_part_a(int q, int k_max) {
    if (q < 3 || q % 2 == 0)
        throw std::invalid_argument("family sweep needs odd q >= 3");
    if (k_max < 0) throw std::invalid_argument("family sweep needs k_max >= 0");
    std::vector<FamilyARecord> rows;
    for (int k = 1; k <= k_max; ++k) {
        FamilyARecord row;
        row.q = q;
        row.k = k;
        row.p = 2LL + 2LL * q * k;
        row.crosscap = crosscap_torus(row.p, q);
        JonesSummary s = coefficient_summary(torus_jones(static_cast<int>(row.p), q));
        row.t_l = static_cast<long long>(s.t_l);
        row.alpha = s.alpha;
        row.beta = s.beta;
        row.beta_prime = s.beta_prime;
        row.alpha_prime = s.alpha_prime;
        row.crosscap_matches_k_plus_1 = row.crosscap == k + 1;
        row.t_l_at_most_2 = row.t_l <= 2;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace tb
