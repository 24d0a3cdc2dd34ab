#pragma once

#include <stdexcept>

#include "tanglebounds/diagram.hpp"
#include "tanglebounds/laurent.hpp"

namespace tb {

inline constexpr int default_state_sum_cap = 26;

struct cap_exceeded : std::runtime_error {
    int crossings;
    int cap;
    cap_exceeded(int c, int k)
        : std::runtime_error("state sum over " + std::to_string(c) +
                             " crossings exceeds cap " + std::to_string(k)),
          crossings(c),
          cap(k) {}
};

// Kauffman bracket by full state enumeration (2^c states, rollback
// union-find). Result is in the bracket variable A on the quarter grid.
LaurentPoly kauffman_bracket(const LinkDiagram& d, int cap = default_state_sum_cap);

// Independent bracket evaluator: memoized smoothing recursion on serialized
// subdiagrams. Intended as a cross-check at small crossing numbers.
LaurentPoly bracket_skein(const LinkDiagram& d);

// Jones polynomial: (-A)^(-3w) <D> with t = A^(-4), computed relative to the
// given orientation (components individually reversible for links).
LaurentPoly jones_polynomial(const LinkDiagram& d, const Orientation& o,
                             int cap = default_state_sum_cap);
LaurentPoly jones_polynomial(const LinkDiagram& d, int cap = default_state_sum_cap);

// Extreme-coefficient report. Degrees are in quarters of t; positions step by
// whole powers of t (the support of a link polynomial lies in one coset of Z).
// Positions past the far end read as zero.
struct JonesSummary {
    int max_deg_q = 0;
    int min_deg_q = 0;
    bigint alpha;        // coefficient at max degree
    bigint beta;         // one t below max
    bigint beta_prime;   // one t above min
    bigint alpha_prime;  // coefficient at min degree
    bigint t_l;          // |beta| + |beta_prime|
    int span_q = 0;
};

JonesSummary coefficient_summary(const LaurentPoly& v);

// Closed form for torus links T(p,q):
//   V = t^((p-1)(q-1)/2) * (1 - t^(p+1) - t^(q+1) + t^(p+q)) / (1 - t^2),
// evaluated by exact division. Requires p, q >= 2 and gcd(p, q) = 1.
LaurentPoly torus_jones(int p, int q);

}  // namespace tb
