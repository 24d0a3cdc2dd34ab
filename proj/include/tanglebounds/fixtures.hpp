#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tanglebounds/bounds.hpp"
#include "tanglebounds/jones.hpp"
#include "tanglebounds/pd.hpp"

namespace tb {

// One corpus diagram plus construction-time metadata the calculators cannot
// recompute: hypothesis flags and any externally known crosscap data.
struct Fixture {
    std::string name;
    LinkDiagram d;
    int l = 0;  // Conway-sum summand count, 0 when not a labeled sum
    bool prime = false;                   // by construction
    bool twist_reduced = false;           // by construction
    bool strongly_alt_sum = false;        // every summand passed the scan
    bool summands_twist_reduced = false;  // by construction
    bool closure_tw_equal = false;        // tw(T_i) = tw of both closures, all i
    int torus_2p = 0;  // p when the diagram is the standard (2,p) picture
    std::optional<long long> known_crosscap;
    std::optional<long long> closure_m;     // min uniform-closure crosscap sum
    std::optional<long long> crosscap_cap;  // independent upper bound
    std::vector<long long> summand_tw;      // per-summand tangle twist numbers
};

struct TangleFixture {
    std::string name;
    TangleDiagram t;
    bool twist_reduced = false;   // by construction
    bool strongly_alt = false;    // computed at corpus build
};

// The shipped corpus: every diagram stays at or below sixteen crossings.
std::vector<Fixture> fixture_corpus();
std::vector<TangleFixture> tangle_corpus();

// Populate a bound-suite record: components, crossings, twist number, Jones
// data (within cap), adequacy, and the flags the fixture metadata fixes.
LinkRecord make_record(const Fixture& f, int cap = default_state_sum_cap);

}  // namespace tb
