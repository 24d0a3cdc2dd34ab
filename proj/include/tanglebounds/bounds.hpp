#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tanglebounds/crosscap.hpp"
#include "tanglebounds/family.hpp"

namespace tb {

// A one- or two-sided integer interval for the crosscap number. Lower ends
// are clamped at zero with the raw value kept for audit.
struct BoundInterval {
    std::string source;
    long long lo = 0;
    std::optional<long long> hi;
    long long raw_lo = 0;
    bool clamped = false;

    bool contains(long long x) const { return x >= lo && (!hi || x <= *hi); }
};

// ceil(a / b) for b > 0, exact in integers.
long long ceil_div(long long a, long long b);

// Alternating-link bounds keyed on the twist number of a prime,
// twist-reduced, alternating diagram (tw >= 2 required):
//   ceil(tw/3) + 2 - k <= C <= tw + 2 - k.
BoundInterval eflee_tw(long long tw, long long k);

// Same shape keyed on T_L, for non-split prime alternating links that are
// not (2,p) torus links: ceil(T_L/3) + 2 - k <= C <= T_L + 2 - k.
BoundInterval eflee_TL(long long t_l, long long k);

// Two-tangle sums: with m the smaller of the two uniform-closure crosscap
// sums, m - 2 <= C <= m + 2.
BoundInterval crossmain(long long m);

// Two-tangle sums keyed on the diagram twist number:
//   ceil(tw/3) - k <= C <= tw + 4 - k.
BoundInterval twistmain(long long tw, long long k);

// Two-tangle sums keyed on T_L: ceil(T_L/6) - k <= C <= 2 T_L + k + 8.
BoundInterval cor_tltwist(long long t_l, long long k);
// Variant under the extra constraint tw(T_i) = tw(K_iN) = tw(K_iD):
//   ceil(T_L/6) + 2 - k <= C <= 2 T_L + k + 8.
BoundInterval cor_tltwist_constrained(long long t_l, long long k);

// Sandwich between T_L and tw for sums of strongly alternating tangles
// (any number of summands): ceil((tw - 2k - 4)/2) <= T_L <= 2 tw.
// The interval constrains T_L, not the crosscap number.
BoundInterval tl_twist_sandwich(long long tw, long long k);

// Upper bound on the external edge loss for a two-tangle sum:
//   l_ext <= tw/2 + k + 4 (kept exact as 2*l_ext <= tw + 2k + 8).
// Returned as the largest integer value allowed for l_ext.
long long lext_cap(long long tw, long long k);
// Natural l-summand generalization: l_ext <= tw/2 + k + 2l.
long long lext_cap_general(long long tw, long long k, long long l);

// l-tangle generalizations. Emits, in order:
//   [0] stated lower bound    ceil(tw/3) + 2 - k   <= C <= tw + l + 2 - k
//   [1] as-proved lower bound ceil((tw-2l)/3) + 2 - k, same upper bound
//   [2] T_L form              ceil((T_L-2l)/6) + 2 - k <= C <= 2 T_L + l + 6 + k
//   [3] constrained T_L lower bound ceil(T_L/6) + 2 - k (upper as [2]);
//       valid only when every summand's closures keep its twist number.
std::vector<BoundInterval> generalized(long long l, long long tw, long long t_l,
                                       long long k);

// Hypothesis flags are fixture metadata fixed by construction, never guessed.
struct LinkRecordFlags {
    bool alternating = false;
    bool reduced = false;
    bool prime = false;
    bool twist_reduced = false;
    bool non_split = false;
    bool strongly_alt_sum = false;        // Conway sum of strongly alternating tangles
    bool summands_twist_reduced = false;  // every summand tangle twist-reduced
    bool not_2p_torus = false;            // not a (2,p) torus link
    bool closure_tw_equal = false;        // tw(T_i) = tw(K_iN) = tw(K_iD) for all i
};

struct LinkRecord {
    std::string name;
    long long k = 1;   // components
    long long c = 0;   // crossings
    long long tw = 0;  // twist number of the diagram
    long long t_l = 0;
    bool adequate_a = false;
    bool adequate_b = false;
    long long l = 0;  // summand count when a Conway sum, else 0
    std::optional<long long> closure_m;      // min uniform-closure crosscap sum
    std::optional<long long> known_crosscap; // exact value when known
    std::optional<long long> crosscap_cap;   // proven upper bound (e.g. genus route)
    LinkRecordFlags flags;
};

struct IntervalReportEntry {
    BoundInterval interval;
    bool hypotheses_met = false;
    bool asserted = false;  // participates in the intersection/witness checks
};

struct ConsistencyReport {
    std::vector<IntervalReportEntry> intervals;
    bool has_asserted = false;
    long long isect_lo = 0;
    std::optional<long long> isect_hi;
    bool consistent = true;        // asserted intervals intersect
    std::optional<long long> witness;
    bool witness_in_all = true;    // witness inside every asserted interval
    bool formula_tier_contains = true;  // unasserted two-sided entries cover
                                        // the asserted intersection / witness
};

ConsistencyReport check_consistency(const LinkRecord& r);

std::string to_json(const LinkRecord& r, const ConsistencyReport& report);

// Result of a family-level independence sweep: one note per clause checked.
struct IndependenceReport {
    bool pass = true;
    std::vector<std::string> notes;
};

// Torus sweep family: T_L stays at most 2 on every row while the crosscap
// number is strictly increasing in k (so unbounded as the sweep extends).
IndependenceReport independence_check_a(const std::vector<FamilyARecord>& rows);

// Whitehead double family: the crosscap number is capped at 3 (genus-one
// doubles, C <= 2g + 1) while the reduced-graph cycle rank is at least m and
// strictly increasing, so the Jones-side lower-bound data is unbounded.
IndependenceReport independence_check_b(const std::vector<WhiteheadRecord>& rows);

}  // namespace tb
