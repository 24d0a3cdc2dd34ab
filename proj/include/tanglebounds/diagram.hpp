#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "tanglebounds/pd.hpp"

namespace tb {

// Strand-following component count (under-strand passes straight through).
int count_components(const LinkDiagram& d);

// True when the diagram is a single connected piece (crossings connected
// through shared arcs; each crossing-free loop is its own piece).
bool is_connected(const LinkDiagram& d);

// True when every arc runs from an under-passage to an over-passage.
bool is_alternating(const LinkDiagram& d);
// Same scan for a tangle; arcs ending on the boundary are exempt.
bool is_alternating(const TangleDiagram& t);

// An orientation assigns each arc the incidence (crossing index, slot) it
// points into. Components are listed as arc sets, named by smallest arc.
struct Orientation {
    std::map<int, std::pair<int, int>> head;
    std::vector<std::vector<int>> components;
};

Orientation orient(const LinkDiagram& d);
// Reverse the components whose smallest arc label is listed in `flipped`.
Orientation orient(const LinkDiagram& d, const std::set<int>& flipped);

int crossing_sign(const LinkDiagram& d, const Orientation& o, int crossing_index);
int writhe(const LinkDiagram& d, const Orientation& o);
int writhe(const LinkDiagram& d);

// Combinatorial mirror: over/under swap at every crossing.
LinkDiagram mirror(const LinkDiagram& d);
TangleDiagram mirror(const TangleDiagram& t);

// Closure of a tangle plus the arcs created by the closure joins (used to
// keep closure arcs out of twist-region counts).
struct Closure {
    LinkDiagram diagram;
    std::vector<int> seam_arcs;
};

Closure numerator_closure_seamed(const TangleDiagram& t);   // join NW-NE, SW-SE
Closure denominator_closure_seamed(const TangleDiagram& t);  // join NW-SW, NE-SE
LinkDiagram numerator_closure(const TangleDiagram& t);
LinkDiagram denominator_closure(const TangleDiagram& t);

// Cyclic left-to-right composition closed into a link: east corners of each
// tangle joined to west corners of the next, wrapping around. Crossings are
// tagged 1..l by summand. Requires at least two tangles.
LinkDiagram conway_sum(const std::vector<TangleDiagram>& tangles);

// Splice d2 into d1 along the named arcs. Arc id 0 selects a crossing-free
// loop of that diagram instead of a labelled arc.
LinkDiagram connected_sum(const LinkDiagram& d1, int a1, const LinkDiagram& d2, int a2);

// Blackboard-framed 2-cable: each crossing becomes a 2x2 block of four
// crossings, each arc splits into two parallel lanes.
struct Cable2 {
    LinkDiagram diagram;
    std::map<int, std::pair<int, int>> lanes;  // original arc -> lane arcs
};
Cable2 cable2_blackboard(const LinkDiagram& d);

// Negative-clasp double with the blackboard framing: 2-cable the knot, cut
// both lanes of `clasp_arc`, and reconnect them through a two-crossing
// negative clasp. Requires a one-component diagram.
LinkDiagram whitehead_double_negative(const LinkDiagram& d, int clasp_arc);

int max_arc_id(const LinkDiagram& d);
LinkDiagram relabeled(const LinkDiagram& d, int offset);

// Identify arc labels pairwise (closure seams, plat caps, braid closures).
// Join classes that never touch a crossing close into free loops.
LinkDiagram identify_arcs(const LinkDiagram& d,
                          const std::vector<std::pair<int, int>>& joins);

}  // namespace tb
