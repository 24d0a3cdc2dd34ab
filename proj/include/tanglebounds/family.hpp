#pragma once

#include <optional>
#include <vector>

#include "tanglebounds/diagram.hpp"

namespace tb {

// Alternating rational "staircase" tangle from a twist vector: starting from
// the crossingless two-strand vertical tangle, odd-position blocks add a
// horizontal ladder of |n| crossings along the bottom, even-position blocks a
// vertical ladder up the right side. Ladders keep the moving corners on the
// two end crossings, so no closure seam doubles back onto one crossing. All
// entries must share one sign (mirror for negative); mixed signs would break
// alternation and are rejected, as is a second block of size one (its single
// crossing would close a seam bigon against the first block).
TangleDiagram gen_twist_tangle(const std::vector<int>& twists);

// Fixed five-twist-region tangle (four corner crossings around a hub with a
// closed rim strand) whose two closures each collapse to three twist regions.
TangleDiagram wheel_tangle();

// Checkable strong-alternation scan: both closures connected, alternating,
// and with loop-free state graphs on both sides. (Primeness of the closures
// is a construction guarantee of the generators, not re-verified here.)
bool strongly_alternating(const TangleDiagram& t);

// Standard-position torus link diagram: closure of (s1 s2 ... s_{p-1})^q on
// p strands, (p-1)q crossings.
LinkDiagram gen_braid_torus(int p, int q);

// Table-convention trefoil (three crossings); right = true mirrors it.
LinkDiagram trefoil(bool right);

// Connected sum of m copies of the same trefoil chirality.
LinkDiagram trefoil_connect_sum(int m, bool right);

// Negative-clasp double of the connect sum of m right trefoils
// (12m + 2 crossings).
LinkDiagram gen_whitehead_trefoils(int m);

struct WhiteheadRecord {
    int m = 0;
    long long crossings = 0;
    long long e_prime = 0;  // reduced all-B graph edges
    long long v_prime = 0;  // reduced all-B graph vertices
    long long betti = 0;    // e' - v' + 1
    bool adequate_a = false;
    bool adequate_b = false;
    long long tw = 0;
    long long k = 0;
    std::optional<long long> t_l;  // filled when small enough to evaluate
    std::optional<long long> abs_beta;        // |beta| from the Jones head
    std::optional<long long> abs_beta_prime;  // |beta'| from the Jones tail
};

// Sweep m = 1..m_max; Jones-side data is computed only when the crossing
// number stays within jones_cap.
std::vector<WhiteheadRecord> family_whitehead(int m_max, int jones_cap);

}  // namespace tb
