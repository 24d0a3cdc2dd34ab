#include "tanglebounds/twist.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

#include "tanglebounds/diagram.hpp"

namespace tb {

bool Face::is_bigon() const {
    return steps.size() == 2 && steps[0].crossing != steps[1].crossing &&
           steps[0].arc != steps[1].arc;
}

namespace {

// Incidences of each arc: the (crossing, slot) pairs where it ends.
std::map<int, std::vector<std::pair<int, int>>> incidences(const LinkDiagram& d) {
    std::map<int, std::vector<std::pair<int, int>>> inc;
    for (std::size_t ci = 0; ci < d.crossings.size(); ++ci)
        for (int s = 0; s < 4; ++s)
            inc[d.crossings[ci].arcs[s]].push_back({static_cast<int>(ci), s});
    return inc;
}

}  // namespace

FaceCensus faces(const LinkDiagram& d) {
    auto inc = incidences(d);
    // A directed arc is (crossing, slot) it is heading into; each arc yields
    // two. Identify a directed arc with the incidence index it points at.
    // seen[ci][s] marks the directed arc pointing into (ci, s).
    std::vector<std::array<bool, 4>> seen(d.crossings.size(), {false, false, false, false});
    FaceCensus census;
    for (std::size_t start_c = 0; start_c < d.crossings.size(); ++start_c) {
        for (int start_s = 0; start_s < 4; ++start_s) {
            if (seen[start_c][start_s]) continue;
            Face f;
            int ci = static_cast<int>(start_c);
            int s = start_s;
            while (!seen[ci][s]) {
                seen[ci][s] = true;
                f.steps.push_back({d.crossings[ci].arcs[s], ci, s});
                // Leave along the next arc counterclockwise; it points into
                // its other incidence.
                int out_slot = (s + 1) % 4;
                int out_arc = d.crossings[ci].arcs[out_slot];
                const auto& ends = inc.at(out_arc);
                std::pair<int, int> here{ci, out_slot};
                std::pair<int, int> next = ends[0] == here ? ends[1] : ends[0];
                ci = next.first;
                s = next.second;
            }
            census.faces.push_back(std::move(f));
        }
    }
    census.loop_faces = 2 * d.free_loops;

    // Connected pieces of the crossing graph (arcs as edges) plus loops.
    std::vector<int> piece(d.crossings.size(), -1);
    int pieces = 0;
    for (std::size_t i = 0; i < d.crossings.size(); ++i) {
        if (piece[i] != -1) continue;
        std::vector<int> stack{static_cast<int>(i)};
        piece[i] = pieces;
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            for (int s = 0; s < 4; ++s) {
                for (const auto& [oc, os] : inc.at(d.crossings[c].arcs[s])) {
                    (void)os;
                    if (piece[oc] == -1) {
                        piece[oc] = pieces;
                        stack.push_back(oc);
                    }
                }
            }
        }
        ++pieces;
    }
    census.pieces = pieces + d.free_loops;
    return census;
}

void check_planarity(const LinkDiagram& d) {
    if (d.crossings.empty()) return;  // loops alone are planar
    auto inc = incidences(d);
    for (const auto& [a, ends] : inc) {
        if (ends.size() != 2)
            throw std::invalid_argument("arc " + std::to_string(a) +
                                        " appears " + std::to_string(ends.size()) +
                                        " times (expected 2)");
    }
    FaceCensus census = faces(d);

    // Per connected piece: V - E + F must equal 2 (E = 2V on closed pieces).
    std::vector<int> piece(d.crossings.size(), -1);
    int pieces = 0;
    for (std::size_t i = 0; i < d.crossings.size(); ++i) {
        if (piece[i] != -1) continue;
        std::vector<int> stack{static_cast<int>(i)};
        piece[i] = pieces;
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            for (int s = 0; s < 4; ++s)
                for (const auto& [oc, os] : inc.at(d.crossings[c].arcs[s])) {
                    (void)os;
                    if (piece[oc] == -1) {
                        piece[oc] = pieces;
                        stack.push_back(oc);
                    }
                }
        }
        ++pieces;
    }
    std::vector<int> v(pieces, 0), f(pieces, 0);
    for (std::size_t i = 0; i < d.crossings.size(); ++i) ++v[piece[i]];
    for (const Face& face : census.faces) ++f[piece[face.steps.front().crossing]];
    for (int p = 0; p < pieces; ++p) {
        int euler = v[p] - 2 * v[p] + f[p];
        if (euler != 2)
            throw std::invalid_argument(
                "diagram piece " + std::to_string(p) + " is not planar (V-E+F = " +
                std::to_string(euler) + ")");
    }
}

void check_tangle_planarity(const TangleDiagram& t) {
    // A boxed tangle is planar exactly when both closures are.
    check_planarity(numerator_closure(t));
    check_planarity(denominator_closure(t));
}

bool is_reduced(const LinkDiagram& d) {
    for (const Face& f : faces(d).faces) {
        std::set<int> met;
        for (const FaceStep& st : f.steps)
            if (!met.insert(st.crossing).second) return false;
    }
    return true;
}

namespace {

struct CrossingUF {
    std::vector<int> parent;
    explicit CrossingUF(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<TwistRegion> twist_regions_avoiding(const LinkDiagram& d,
                                                const std::vector<int>& seam_arcs) {
    FaceCensus census = faces(d);
    CrossingUF uf(d.crossings.size());
    // Chaining bigons, deduplicated per crossing pair.
    std::set<std::pair<int, int>> links;
    for (const Face& f : census.faces) {
        if (!f.is_bigon()) continue;
        bool seamed = false;
        for (const FaceStep& st : f.steps)
            for (int seam : seam_arcs)
                if (st.arc == seam) seamed = true;
        if (seamed) continue;
        int a = f.steps[0].crossing, b = f.steps[1].crossing;
        uf.unite(a, b);
        links.insert({std::min(a, b), std::max(a, b)});
    }
    // Group crossings by class.
    std::map<int, std::vector<int>> groups;
    for (std::size_t i = 0; i < d.crossings.size(); ++i)
        groups[uf.find(static_cast<int>(i))].push_back(static_cast<int>(i));

    // Order each group along its bigon chain (path or cycle).
    std::map<int, std::vector<int>> adj;
    for (const auto& [a, b] : links) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<TwistRegion> regions;
    for (auto& [root, members] : groups) {
        (void)root;
        TwistRegion r;
        if (members.size() == 1) {
            r.crossings = members;
        } else {
            int start = -1;
            for (int m : members)
                if (adj[m].size() == 1 && (start == -1 || m < start)) start = m;
            if (start == -1) {  // closed chain: start at the smallest index
                start = *std::min_element(members.begin(), members.end());
            }
            std::set<int> used;
            int cur = start;
            int prev = -1;
            while (cur != -1 && !used.count(cur)) {
                used.insert(cur);
                r.crossings.push_back(cur);
                int nxt = -1;
                std::vector<int> nbrs = adj[cur];
                std::sort(nbrs.begin(), nbrs.end());
                for (int n : nbrs)
                    if (n != prev && !used.count(n)) {
                        nxt = n;
                        break;
                    }
                prev = cur;
                cur = nxt;
            }
        }
        regions.push_back(std::move(r));
    }
    std::sort(regions.begin(), regions.end(),
              [](const TwistRegion& a, const TwistRegion& b) {
                  return *std::min_element(a.crossings.begin(), a.crossings.end()) <
                         *std::min_element(b.crossings.begin(), b.crossings.end());
              });
    return regions;
}

std::vector<TwistRegion> twist_regions(const LinkDiagram& d) {
    return twist_regions_avoiding(d, {});
}

int twist_number(const LinkDiagram& d) {
    return static_cast<int>(twist_regions(d).size());
}

int tangle_twist_number(const TangleDiagram& t) {
    Closure c = numerator_closure_seamed(t);
    return static_cast<int>(twist_regions_avoiding(c.diagram, c.seam_arcs).size());
}

}  // namespace tb
