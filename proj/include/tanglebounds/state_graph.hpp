#pragma once

#include <map>
#include <vector>

#include "tanglebounds/pd.hpp"

namespace tb {

enum class Resolution { A, B };

// Uniform smoothing of every crossing: the state circles, each listed as its
// sorted arc labels. Crossing-free loops count as extra circles appended at
// the end (they carry no arcs).
struct KauffmanState {
    Resolution r;
    std::vector<std::vector<int>> circles;
    std::map<int, int> circle_of;  // arc -> index into circles
    int loop_circles = 0;
    int circle_count() const {
        return static_cast<int>(circles.size()) + loop_circles;
    }
};

KauffmanState all_state(const LinkDiagram& d, Resolution r);

// State graph: one vertex per circle, one edge per crossing joining the
// circles its smoothing arcs touch. Loops (both endpoints equal) witness
// inadequacy. Free loops are isolated vertices.
struct StateEdge {
    int u, v;
    int crossing;
    int tangle_id;
};

struct StateGraph {
    Resolution r;
    int vertices = 0;
    std::vector<StateEdge> edges;
};

StateGraph state_graph(const LinkDiagram& d, Resolution r);

// Reduction: collapse parallel edges (same unordered endpoints). Loop edges
// at a vertex collapse to one class as well.
struct ParallelClass {
    int u, v;
    std::vector<int> members;  // indices into the unreduced edge list
};

struct ReducedStateGraph {
    Resolution r;
    int vertices = 0;
    std::vector<ParallelClass> classes;
    std::vector<StateEdge> all_edges;  // the unreduced edges, for member lookup
    int v_prime() const { return vertices; }
    int e_prime() const { return static_cast<int>(classes.size()); }
};

ReducedStateGraph reduce(const StateGraph& g);

bool is_adequate(const LinkDiagram& d, Resolution r);

// First Betti number e' - v' + 1 of a connected reduced graph. Throws
// std::logic_error naming the component count when disconnected.
int first_betti(const ReducedStateGraph& g);

// First Betti number of the reduced all-B graph of a B-adequate connected
// diagram (the graph-side route to the extreme Jones coefficient).
// Throws std::invalid_argument when the diagram is not B-adequate.
int beta_prime_stoimenow(const LinkDiagram& d);

// Edge loss c - e' split by whether a collapsed parallel class sits inside
// one tangle or spans several, summed over both state graphs. Requires every
// crossing to carry a nonzero tangle_id.
struct EdgeLossSplit {
    long long internal = 0;
    long long external = 0;
};

EdgeLossSplit edge_loss_split(const LinkDiagram& d);

}  // namespace tb
