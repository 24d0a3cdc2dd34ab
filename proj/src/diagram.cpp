#include "tanglebounds/diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace tb {

namespace {

using Incidence = std::pair<int, int>;  // (crossing index, slot)

std::map<int, std::vector<Incidence>> incidences(const LinkDiagram& d) {
    std::map<int, std::vector<Incidence>> inc;
    for (std::size_t ci = 0; ci < d.crossings.size(); ++ci)
        for (int s = 0; s < 4; ++s)
            inc[d.crossings[ci].arcs[s]].push_back({static_cast<int>(ci), s});
    return inc;
}

struct ArcUF {
    std::map<int, int> parent;
    int find(int x) {
        auto it = parent.find(x);
        if (it == parent.end()) {
            parent[x] = x;
            return x;
        }
        int root = x;
        while (parent[root] != root) root = parent[root];
        while (parent[x] != root) {
            int nxt = parent[x];
            parent[x] = root;
            x = nxt;
        }
        return root;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);  // keep the smaller label as root
        parent[b] = a;
        return true;
    }
};

}  // namespace

int max_arc_id(const LinkDiagram& d) {
    int m = 0;
    for (const Crossing& c : d.crossings)
        for (int a : c.arcs) m = std::max(m, a);
    return m;
}

LinkDiagram relabeled(const LinkDiagram& d, int offset) {
    LinkDiagram r = d;
    for (Crossing& c : r.crossings)
        for (int& a : c.arcs) a += offset;
    return r;
}

int count_components(const LinkDiagram& d) {
    ArcUF uf;
    std::set<int> arcs;
    for (const Crossing& c : d.crossings) {
        for (int a : c.arcs) arcs.insert(a);
        uf.unite(c.arcs[0], c.arcs[2]);
        uf.unite(c.arcs[1], c.arcs[3]);
    }
    std::set<int> roots;
    for (int a : arcs) roots.insert(uf.find(a));
    return static_cast<int>(roots.size()) + d.free_loops;
}

bool is_connected(const LinkDiagram& d) {
    int pieces = d.free_loops;
    auto inc = incidences(d);
    std::vector<int> piece(d.crossings.size(), -1);
    for (std::size_t i = 0; i < d.crossings.size(); ++i) {
        if (piece[i] != -1) continue;
        std::vector<int> stack{static_cast<int>(i)};
        piece[i] = 1;
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            for (int s = 0; s < 4; ++s)
                for (const auto& [oc, os] : inc.at(d.crossings[c].arcs[s])) {
                    (void)os;
                    if (piece[oc] == -1) {
                        piece[oc] = 1;
                        stack.push_back(oc);
                    }
                }
        }
        ++pieces;
    }
    return pieces <= 1;
}

bool is_alternating(const LinkDiagram& d) {
    // Alternating iff every arc joins an under-passage (even slot) to an
    // over-passage (odd slot).
    auto inc = incidences(d);
    for (const auto& [a, ends] : inc) {
        (void)a;
        if (ends.size() != 2) throw std::invalid_argument("bad arc multiplicity");
        if ((ends[0].second % 2) == (ends[1].second % 2)) return false;
    }
    return true;
}

bool is_alternating(const TangleDiagram& t) {
    auto inc = incidences(t.inner);
    for (const auto& [a, ends] : inc) {
        (void)a;
        if (ends.size() == 1) continue;  // boundary arc
        if (ends.size() != 2) throw std::invalid_argument("bad arc multiplicity");
        if ((ends[0].second % 2) == (ends[1].second % 2)) return false;
    }
    return true;
}

Orientation orient(const LinkDiagram& d) { return orient(d, {}); }

Orientation orient(const LinkDiagram& d, const std::set<int>& flipped) {
    auto inc = incidences(d);
    Orientation o;
    std::set<int> visited;
    for (const auto& [start_arc, ends] : inc) {
        if (visited.count(start_arc)) continue;
        bool flip = flipped.count(start_arc) > 0;
        std::vector<int> comp;
        // Direct the starting arc into its second listed incidence (or the
        // first when this component is flipped), then follow the strand.
        int arc = start_arc;
        Incidence head = flip ? ends[0] : ends[1];
        while (!visited.count(arc)) {
            visited.insert(arc);
            comp.push_back(arc);
            o.head[arc] = head;
            const Crossing& c = d.crossings[head.first];
            int out_slot = (head.second + 2) % 4;
            int next_arc = c.arcs[out_slot];
            const auto& next_ends = inc.at(next_arc);
            Incidence from{head.first, out_slot};
            head = next_ends[0] == from ? next_ends[1] : next_ends[0];
            arc = next_arc;
        }
        std::sort(comp.begin(), comp.end());
        o.components.push_back(std::move(comp));
    }
    std::sort(o.components.begin(), o.components.end());
    return o;
}

int crossing_sign(const LinkDiagram& d, const Orientation& o, int crossing_index) {
    const Crossing& c = d.crossings[crossing_index];
    int under_in = -1, over_in = -1;
    for (int s : {0, 2}) {
        auto it = o.head.find(c.arcs[s]);
        if (it == o.head.end())
            throw std::invalid_argument("orientation missing arc " + std::to_string(c.arcs[s]));
        if (it->second == Incidence{crossing_index, s}) under_in = s;
    }
    for (int s : {1, 3}) {
        auto it = o.head.find(c.arcs[s]);
        if (it == o.head.end())
            throw std::invalid_argument("orientation missing arc " + std::to_string(c.arcs[s]));
        if (it->second == Incidence{crossing_index, s}) over_in = s;
    }
    if (under_in == -1 || over_in == -1)
        throw std::invalid_argument("incoherent orientation at crossing " +
                                    std::to_string(crossing_index));
    return over_in == (under_in + 3) % 4 ? 1 : -1;
}

int writhe(const LinkDiagram& d, const Orientation& o) {
    int w = 0;
    for (std::size_t i = 0; i < d.crossings.size(); ++i)
        w += crossing_sign(d, o, static_cast<int>(i));
    return w;
}

int writhe(const LinkDiagram& d) { return writhe(d, orient(d)); }

LinkDiagram mirror(const LinkDiagram& d) {
    LinkDiagram m = d;
    for (Crossing& c : m.crossings) {
        // Rotate one slot: over and under swap, rotation order kept.
        Crossing r = c;
        for (int s = 0; s < 4; ++s) r.arcs[s] = c.arcs[(s + 1) % 4];
        c = r;
    }
    return m;
}

TangleDiagram mirror(const TangleDiagram& t) {
    TangleDiagram m = t;
    m.inner = mirror(t.inner);
    return m;
}

namespace {

// Apply a set of arc joins to a diagram. Each join identifies two arc labels
// (possibly already identified). Classes of joined arcs that never touch a
// crossing close up into free loops. Returns the roots of the join classes
// that do touch crossings (the seam arcs).
LinkDiagram apply_joins(const LinkDiagram& base,
                        const std::vector<std::pair<int, int>>& joins,
                        std::vector<int>* seams_out) {
    ArcUF uf;
    std::set<int> join_arcs;
    for (const auto& [x, y] : joins) {
        uf.unite(x, y);
        join_arcs.insert(x);
        join_arcs.insert(y);
    }
    std::set<int> crossing_arcs;
    for (const Crossing& c : base.crossings)
        for (int a : c.arcs) crossing_arcs.insert(a);

    LinkDiagram out = base;
    for (Crossing& c : out.crossings)
        for (int& a : c.arcs) a = uf.find(a);

    std::set<int> live_roots, loop_roots;
    for (int a : join_arcs) {
        int r = uf.find(a);
        if (crossing_arcs.count(a)) live_roots.insert(r);
    }
    for (int a : join_arcs) {
        int r = uf.find(a);
        if (!live_roots.count(r)) loop_roots.insert(r);
    }
    out.free_loops += static_cast<int>(loop_roots.size());
    if (seams_out) seams_out->assign(live_roots.begin(), live_roots.end());
    return out;
}

}  // namespace

LinkDiagram identify_arcs(const LinkDiagram& d,
                          const std::vector<std::pair<int, int>>& joins) {
    return apply_joins(d, joins, nullptr);
}

Closure numerator_closure_seamed(const TangleDiagram& t) {
    Closure c;
    c.diagram = apply_joins(t.inner,
                            {{t.corner(Corner::NW), t.corner(Corner::NE)},
                             {t.corner(Corner::SW), t.corner(Corner::SE)}},
                            &c.seam_arcs);
    return c;
}

Closure denominator_closure_seamed(const TangleDiagram& t) {
    Closure c;
    c.diagram = apply_joins(t.inner,
                            {{t.corner(Corner::NW), t.corner(Corner::SW)},
                             {t.corner(Corner::NE), t.corner(Corner::SE)}},
                            &c.seam_arcs);
    return c;
}

LinkDiagram numerator_closure(const TangleDiagram& t) {
    return numerator_closure_seamed(t).diagram;
}

LinkDiagram denominator_closure(const TangleDiagram& t) {
    return denominator_closure_seamed(t).diagram;
}

LinkDiagram conway_sum(const std::vector<TangleDiagram>& tangles) {
    const std::size_t l = tangles.size();
    if (l < 2) throw std::invalid_argument("conway_sum needs at least two tangles");
    LinkDiagram combined;
    std::vector<std::array<int, 4>> corners(l);  // nw, ne, se, sw (relabeled)
    int offset = 0;
    for (std::size_t i = 0; i < l; ++i) {
        LinkDiagram part = relabeled(tangles[i].inner, offset);
        for (Crossing& c : part.crossings) c.tangle_id = static_cast<int>(i) + 1;
        corners[i] = {tangles[i].corner(Corner::NW) + offset,
                      tangles[i].corner(Corner::NE) + offset,
                      tangles[i].corner(Corner::SE) + offset,
                      tangles[i].corner(Corner::SW) + offset};
        offset += std::max(max_arc_id(tangles[i].inner),
                           std::max({tangles[i].corner(Corner::NW),
                                     tangles[i].corner(Corner::NE),
                                     tangles[i].corner(Corner::SE),
                                     tangles[i].corner(Corner::SW)}));
        combined.crossings.insert(combined.crossings.end(), part.crossings.begin(),
                                  part.crossings.end());
        combined.free_loops += part.free_loops;
    }
    std::vector<std::pair<int, int>> joins;
    for (std::size_t i = 0; i < l; ++i) {
        std::size_t j = (i + 1) % l;
        joins.push_back({corners[i][1], corners[j][0]});  // NE -> next NW
        joins.push_back({corners[i][2], corners[j][3]});  // SE -> next SW
    }
    return apply_joins(combined, joins, nullptr);
}

LinkDiagram connected_sum(const LinkDiagram& d1, int a1, const LinkDiagram& d2, int a2) {
    // Arc id 0 = splice at a crossing-free loop.
    if (a1 == 0) {
        if (d1.free_loops < 1)
            throw std::invalid_argument("no free loop to splice in first diagram");
        if (a2 == 0) {
            if (d2.free_loops < 1)
                throw std::invalid_argument("no free loop to splice in second diagram");
            LinkDiagram r = d1;
            LinkDiagram shifted = relabeled(d2, max_arc_id(d1));
            r.crossings.insert(r.crossings.end(), shifted.crossings.begin(),
                               shifted.crossings.end());
            r.free_loops = d1.free_loops + d2.free_loops - 1;
            return r;
        }
        LinkDiagram r = connected_sum(d2, a2, d1, 0);
        return r;
    }
    if (a2 == 0) {
        if (d2.free_loops < 1)
            throw std::invalid_argument("no free loop to splice in second diagram");
        LinkDiagram r = d1;
        LinkDiagram shifted = relabeled(d2, max_arc_id(d1));
        r.crossings.insert(r.crossings.end(), shifted.crossings.begin(),
                           shifted.crossings.end());
        r.free_loops = d1.free_loops + d2.free_loops - 1;
        return r;
    }

    auto inc1 = incidences(d1);
    if (!inc1.count(a1))
        throw std::invalid_argument("arc " + std::to_string(a1) + " not in first diagram");
    auto inc2 = incidences(d2);
    if (!inc2.count(a2))
        throw std::invalid_argument("arc " + std::to_string(a2) + " not in second diagram");

    const int offset = max_arc_id(d1) + 1;  // +1 leaves room for the fresh arc
    LinkDiagram r = d1;
    LinkDiagram shifted = relabeled(d2, offset);
    const int a2s = a2 + offset;
    const int fresh = max_arc_id(shifted) + 1;

    // Cut a1 and a2s and reconnect across the splice: a1 keeps its first end
    // and takes over a2s's first end; the fresh arc joins the second ends.
    const auto ends2 = incidences(shifted).at(a2s);
    const std::size_t base = r.crossings.size();
    r.crossings.insert(r.crossings.end(), shifted.crossings.begin(), shifted.crossings.end());
    r.free_loops += shifted.free_loops;

    auto set_arc = [&](std::size_t crossing, int slot, int value) {
        r.crossings[crossing].arcs[slot] = value;
    };
    const auto ends1 = inc1.at(a1);
    // ends1[1] -> fresh; ends2[0] -> a1; ends2[1] -> fresh.
    set_arc(static_cast<std::size_t>(ends1[1].first), ends1[1].second, fresh);
    set_arc(base + static_cast<std::size_t>(ends2[0].first), ends2[0].second, a1);
    set_arc(base + static_cast<std::size_t>(ends2[1].first), ends2[1].second, fresh);
    return r;
}

Cable2 cable2_blackboard(const LinkDiagram& d) {
    auto inc = incidences(d);
    Cable2 out;
    out.diagram.free_loops = 2 * d.free_loops;

    int next = 1;
    std::map<int, std::pair<int, int>> lanes;  // arc -> (lane_a, lane_b)
    for (const auto& [a, ends] : inc) {
        (void)ends;
        lanes[a] = {next, next + 1};
        next += 2;
    }
    out.lanes = lanes;

    // Lane ends: walking counterclockwise around a crossing's block, the two
    // lane stubs at a corner appear in order (earlier, later). For arc x with
    // sorted ends E1 < E2: lane_a runs later(E1) <-> earlier(E2) and lane_b
    // runs earlier(E1) <-> later(E2), which matches the two sides of the
    // doubled strip having opposite boundary orientations.
    auto lane_at = [&](int crossing, int slot, bool later) {
        int x = d.crossings[crossing].arcs[slot];
        const auto& ends = inc.at(x);
        bool is_first_end = (ends[0] == Incidence{crossing, slot});
        auto [la, lb] = lanes.at(x);
        if (is_first_end) return later ? la : lb;
        return later ? lb : la;
    };

    for (std::size_t ci = 0; ci < d.crossings.size(); ++ci) {
        int c = static_cast<int>(ci);
        int p1 = lane_at(c, 0, false), p2 = lane_at(c, 0, true);
        int q1 = lane_at(c, 1, false), q2 = lane_at(c, 1, true);
        int r1 = lane_at(c, 2, false), r2 = lane_at(c, 2, true);
        int s1 = lane_at(c, 3, false), s2 = lane_at(c, 3, true);
        int w = next++, n = next++, e = next++, sm = next++;
        int tid = d.crossings[ci].tangle_id;
        out.diagram.crossings.push_back({{p1, sm, w, s2}, tid});   // SW block
        out.diagram.crossings.push_back({{p2, q1, e, sm}, tid});   // SE block
        out.diagram.crossings.push_back({{w, n, r2, s1}, tid});    // NW block
        out.diagram.crossings.push_back({{e, q2, r1, n}, tid});    // NE block
    }
    return out;
}

LinkDiagram whitehead_double_negative(const LinkDiagram& d, int clasp_arc) {
    if (count_components(d) != 1)
        throw std::invalid_argument("doubling requires a one-component diagram");
    if (d.crossings.empty()) {
        // Crossing-free unknot: the double is the bare negative clasp.
        LinkDiagram w;
        w.crossings.push_back({{1, 4, 3, 1}, 0});
        w.crossings.push_back({{4, 2, 2, 3}, 0});
        return w;
    }
    auto inc = incidences(d);
    if (!inc.count(clasp_arc))
        throw std::invalid_argument("clasp arc " + std::to_string(clasp_arc) +
                                    " not present");

    Cable2 cabled = cable2_blackboard(d);
    auto [la, lb] = cabled.lanes.at(clasp_arc);
    int next = max_arc_id(cabled.diagram) + 1;
    const int a2 = next++, b2 = next++, m1 = next++, m2 = next++;

    // Cut both lanes between the two blocks of the clasp arc: the stub kept
    // on the first-end side keeps the lane label, the other side is renamed.
    // The second occurrence found in block order is the far side for both
    // lanes (blocks are emitted in original crossing order).
    auto rename_second = [&](int lane, int fresh) {
        int seen = 0;
        for (Crossing& c : cabled.diagram.crossings)
            for (int& a : c.arcs)
                if (a == lane) {
                    ++seen;
                    if (seen == 2) {
                        a = fresh;
                        return;
                    }
                }
        throw std::logic_error("lane occurs fewer than twice");
    };
    rename_second(la, a2);
    rename_second(lb, b2);

    cabled.diagram.crossings.push_back({{la, m2, m1, a2}, 0});
    cabled.diagram.crossings.push_back({{m2, lb, b2, m1}, 0});
    return cabled.diagram;
}

}  // namespace tb
