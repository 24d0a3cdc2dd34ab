#include "tanglebounds/family.hpp"

#include <cstdlib>
#include <stdexcept>

#include "tanglebounds/jones.hpp"
#include "tanglebounds/pd.hpp"
#include "tanglebounds/state_graph.hpp"
#include "tanglebounds/twist.hpp"

namespace tb {

TangleDiagram gen_twist_tangle(const std::vector<int>& twists) {
    if (twists.empty()) throw std::invalid_argument("empty twist vector");
    bool any_neg = false, any_pos = false;
    for (int n : twists) {
        if (n == 0) throw std::invalid_argument("twist entries must be nonzero");
        (n < 0 ? any_neg : any_pos) = true;
    }
    if (any_neg && any_pos)
        throw std::invalid_argument("mixed-sign twist vector is not alternating");
    if (twists.size() >= 2 && std::abs(twists[1]) == 1)
        throw std::invalid_argument("second block of size one merges with the first");

    // Build the all-positive staircase; mirror at the end for negative input.
    TangleDiagram t;
    int nw = 1, sw = 1, ne = 2, se = 2;  // crossingless vertical start
    int next = 3;
    for (std::size_t i = 0; i < twists.size(); ++i) {
        int count = std::abs(twists[i]);
        if (i % 2 == 0) {
            // Bottom ladder: the hanging SW/SE ends weave left to right, the
            // new corners exiting on the first and last rungs.
            int nsw = next++, nse = next++;
            if (count == 1) {
                t.inner.crossings.push_back({{sw, nsw, nse, se}, 0});
            } else {
                int top = next++, bot = next++;
                t.inner.crossings.push_back({{sw, nsw, bot, top}, 0});
                for (int j = 2; j < count; ++j) {
                    int top2 = next++, bot2 = next++;
                    t.inner.crossings.push_back({{top, bot, bot2, top2}, 0});
                    top = top2;
                    bot = bot2;
                }
                t.inner.crossings.push_back({{top, bot, nse, se}, 0});
            }
            sw = nsw;
            se = nse;
        } else {
            // Right-side ladder, top to bottom: NE enters the first rung,
            // SE the last.
            int nne = next++, nse = next++;
            if (count == 1) {
                t.inner.crossings.push_back({{ne, se, nse, nne}, 0});
            } else {
                int lft = next++, rgt = next++;
                t.inner.crossings.push_back({{ne, lft, rgt, nne}, 0});
                for (int j = 2; j < count; ++j) {
                    int lft2 = next++, rgt2 = next++;
                    t.inner.crossings.push_back({{lft, lft2, rgt2, rgt}, 0});
                    lft = lft2;
                    rgt = rgt2;
                }
                t.inner.crossings.push_back({{lft, se, nse, rgt}, 0});
            }
            ne = nne;
            se = nse;
        }
    }
    t.boundary = {{Corner::NW, nw}, {Corner::NE, ne}, {Corner::SE, se}, {Corner::SW, sw}};
    return any_neg ? mirror(t) : t;
}

TangleDiagram wheel_tangle() {
    TangleDiagram t;
    t.inner.crossings = {
        {{1, 8, 9, 5}, 0},   {{5, 10, 6, 2}, 0}, {{10, 9, 12, 11}, 0},
        {{7, 12, 8, 4}, 0},  {{11, 7, 3, 6}, 0},
    };
    t.boundary = {{Corner::NW, 1}, {Corner::NE, 2}, {Corner::SE, 3}, {Corner::SW, 4}};
    return t;
}

bool strongly_alternating(const TangleDiagram& t) {
    for (const LinkDiagram& c : {numerator_closure(t), denominator_closure(t)}) {
        if (!is_connected(c)) return false;
        if (!is_alternating(c)) return false;
        if (!is_adequate(c, Resolution::A) || !is_adequate(c, Resolution::B))
            return false;
    }
    return true;
}

LinkDiagram gen_braid_torus(int p, int q) {
    if (p < 2 || q < 1) throw std::invalid_argument("braid closure needs p >= 2, q >= 1");
    int crossings = (p - 1) * q;
    if (crossings > default_state_sum_cap)
        throw cap_exceeded(crossings, default_state_sum_cap);

    std::vector<int> current(p);
    for (int i = 0; i < p; ++i) current[i] = i + 1;
    int next = p + 1;
    LinkDiagram d;
    for (int rep = 0; rep < q; ++rep) {
        for (int i = 0; i + 1 < p; ++i) {
            // One generator: left strand a, right strand b cross; fresh arcs
            // continue below as c (left) and d (right).
            int a = current[i], b = current[i + 1];
            int c = next++, e = next++;
            d.crossings.push_back({{b, a, c, e}, 0});
            current[i] = c;
            current[i + 1] = e;
        }
    }
    std::vector<std::pair<int, int>> joins;
    for (int i = 0; i < p; ++i) joins.push_back({current[i], i + 1});
    return identify_arcs(d, joins);
}

LinkDiagram trefoil(bool right) {
    LinkDiagram left = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    return right ? mirror(left) : left;
}

LinkDiagram trefoil_connect_sum(int m, bool right) {
    if (m < 1) throw std::invalid_argument("connect sum needs m >= 1");
    LinkDiagram d = trefoil(right);
    for (int i = 1; i < m; ++i) d = connected_sum(d, 1, trefoil(right), 1);
    return d;
}

LinkDiagram gen_whitehead_trefoils(int m) {
    return whitehead_double_negative(trefoil_connect_sum(m, true), 1);
}

std::vector<WhiteheadRecord> family_whitehead(int m_max, int jones_cap) {
    if (m_max < 0) throw std::invalid_argument("family sweep needs m_max >= 0");
    std::vector<WhiteheadRecord> rows;
    for (int m = 1; m <= m_max; ++m) {
        LinkDiagram d = gen_whitehead_trefoils(m);
        WhiteheadRecord row;
        row.m = m;
        row.crossings = static_cast<long long>(d.crossings.size());
        ReducedStateGraph rg = reduce(state_graph(d, Resolution::B));
        row.e_prime = rg.e_prime();
        row.v_prime = rg.v_prime();
        row.betti = first_betti(rg);
        row.adequate_a = is_adequate(d, Resolution::A);
        row.adequate_b = is_adequate(d, Resolution::B);
        row.tw = twist_number(d);
        row.k = count_components(d);
        if (row.crossings <= jones_cap) {
            JonesSummary s = coefficient_summary(jones_polynomial(d, jones_cap));
            row.t_l = static_cast<long long>(s.t_l);
            bigint ab = s.beta < 0 ? -s.beta : s.beta;
            bigint abp = s.beta_prime < 0 ? -s.beta_prime : s.beta_prime;
            row.abs_beta = static_cast<long long>(ab);
            row.abs_beta_prime = static_cast<long long>(abp);
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace tb
