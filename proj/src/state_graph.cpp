#include "tanglebounds/state_graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tb {

namespace {

struct ArcUF {
    std::map<int, int> parent;
    int find(int x) {
        parent.emplace(x, x);
        int root = x;
        while (parent[root] != root) root = parent[root];
        while (parent[x] != root) {
            int nxt = parent[x];
            parent[x] = root;
            x = nxt;
        }
        return root;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent[b] = a;
    }
};

ArcUF circles_of(const LinkDiagram& d, Resolution r) {
    ArcUF uf;
    for (const Crossing& c : d.crossings) {
        if (r == Resolution::A) {
            uf.unite(c.arcs[0], c.arcs[1]);
            uf.unite(c.arcs[2], c.arcs[3]);
        } else {
            uf.unite(c.arcs[0], c.arcs[3]);
            uf.unite(c.arcs[1], c.arcs[2]);
        }
    }
    return uf;
}

}  // namespace

KauffmanState all_state(const LinkDiagram& d, Resolution r) {
    ArcUF uf = circles_of(d, r);
    KauffmanState st;
    st.r = r;
    st.loop_circles = d.free_loops;
    std::map<int, std::vector<int>> groups;
    std::set<int> arcs;
    for (const Crossing& c : d.crossings)
        for (int a : c.arcs) arcs.insert(a);
    for (int a : arcs) groups[uf.find(a)].push_back(a);
    for (auto& [root, members] : groups) {
        (void)root;
        std::sort(members.begin(), members.end());
        for (int a : members) st.circle_of[a] = static_cast<int>(st.circles.size());
        st.circles.push_back(std::move(members));
    }
    return st;
}

StateGraph state_graph(const LinkDiagram& d, Resolution r) {
    KauffmanState st = all_state(d, r);
    StateGraph g;
    g.r = r;
    g.vertices = st.circle_count();
    for (std::size_t ci = 0; ci < d.crossings.size(); ++ci) {
        const Crossing& c = d.crossings[ci];
        // The two smoothing arcs both join the circle through one pair to the
        // circle through the other; one edge per crossing.
        int u, v;
        if (r == Resolution::A) {
            u = st.circle_of.at(c.arcs[0]);  // pair (0,1)
            v = st.circle_of.at(c.arcs[2]);  // pair (2,3)
        } else {
            u = st.circle_of.at(c.arcs[0]);  // pair (0,3)
            v = st.circle_of.at(c.arcs[1]);  // pair (1,2)
        }
        g.edges.push_back({std::min(u, v), std::max(u, v), static_cast<int>(ci),
                           c.tangle_id});
    }
    return g;
}

ReducedStateGraph reduce(const StateGraph& g) {
    ReducedStateGraph r;
    r.r = g.r;
    r.vertices = g.vertices;
    r.all_edges = g.edges;
    std::map<std::pair<int, int>, std::vector<int>> classes;
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        classes[{g.edges[i].u, g.edges[i].v}].push_back(static_cast<int>(i));
    for (auto& [key, members] : classes)
        r.classes.push_back({key.first, key.second, std::move(members)});
    return r;
}

bool is_adequate(const LinkDiagram& d, Resolution r) {
    StateGraph g = state_graph(d, r);
    for (const StateEdge& e : g.edges)
        if (e.u == e.v) return false;
    return true;
}

int first_betti(const ReducedStateGraph& g) {
    // Component count over all vertices (isolated ones included).
    std::vector<int> parent(g.vertices);
    for (int i = 0; i < g.vertices; ++i) parent[i] = i;
    std::vector<int>& p = parent;
    auto find = [&p](int x) {
        while (p[x] != x) {
            p[x] = p[p[x]];
            x = p[x];
        }
        return x;
    };
    for (const ParallelClass& c : g.classes) p[find(c.u)] = find(c.v);
    std::set<int> roots;
    for (int i = 0; i < g.vertices; ++i) roots.insert(find(i));
    if (roots.size() != 1)
        throw std::logic_error("reduced state graph is disconnected (" +
                               std::to_string(roots.size()) + " components)");
    return g.e_prime() - g.v_prime() + 1;
}

int beta_prime_stoimenow(const LinkDiagram& d) {
    if (!is_adequate(d, Resolution::B))
        throw std::invalid_argument("diagram is not B-adequate");
    return first_betti(reduce(state_graph(d, Resolution::B)));
}

EdgeLossSplit edge_loss_split(const LinkDiagram& d) {
    for (const Crossing& c : d.crossings)
        if (c.tangle_id == 0)
            throw std::invalid_argument("edge_loss_split needs every crossing tagged");
    EdgeLossSplit split;
    for (Resolution r : {Resolution::A, Resolution::B}) {
        ReducedStateGraph g = reduce(state_graph(d, r));
        for (const ParallelClass& pc : g.classes) {
            std::map<int, long long> per_tangle;
            for (int e : pc.members) ++per_tangle[g.all_edges[e].tangle_id];
            for (const auto& [tid, n] : per_tangle) {
                (void)tid;
                split.internal += n - 1;
            }
            split.external += static_cast<long long>(per_tangle.size()) - 1;
        }
    }
    return split;
}

}  // namespace tb
