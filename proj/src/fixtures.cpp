#include "tanglebounds/fixtures.hpp"

#include <utility>

#include "tanglebounds/crosscap.hpp"
#include "tanglebounds/diagram.hpp"
#include "tanglebounds/family.hpp"
#include "tanglebounds/state_graph.hpp"
#include "tanglebounds/twist.hpp"

namespace tb {

namespace {

// crossing index carrying a boundary arc (corner arcs occur exactly once)
int corner_crossing(const TangleDiagram& t, Corner c) {
    int arc = t.corner(c);
    for (std::size_t i = 0; i < t.inner.crossings.size(); ++i)
        for (int s = 0; s < 4; ++s)
            if (t.inner.crossings[i].arcs[s] == arc) return static_cast<int>(i);
    return -1;
}

// A multi-region summand whose NW and SW corners enter the same crossing has
// that lead crossing hanging on the two seam strands; flypes slide it along
// the backbone of the sum. Two or more such summands stack their lead
// crossings into one twist region, so the assembled diagram is not
// twist-reduced (each extra rider costs one region: observed T_L = tw-(r-1)).
bool seam_rider(const TangleDiagram& t) {
    return tangle_twist_number(t) >= 2 &&
           corner_crossing(t, Corner::NW) == corner_crossing(t, Corner::SW);
}

Fixture plain(std::string name, LinkDiagram d, bool prime, bool twist_reduced) {
    Fixture f;
    f.name = std::move(name);
    f.d = std::move(d);
    f.prime = prime;
    f.twist_reduced = twist_reduced;
    return f;
}

// Labeled Conway sum; summand metadata is computed from the tangles here so
// the corpus stays honest about which sums satisfy which hypotheses.
Fixture sum_fixture(std::string name, const std::vector<TangleDiagram>& parts) {
    Fixture f;
    f.name = std::move(name);
    f.d = conway_sum(parts);
    f.l = static_cast<int>(parts.size());
    f.prime = true;  // sums of nontrivial alternating tangles
    f.strongly_alt_sum = true;
    f.summands_twist_reduced = true;
    f.closure_tw_equal = true;
    int riders = 0;
    for (const TangleDiagram& t : parts) {
        int tw = tangle_twist_number(t);
        f.summand_tw.push_back(tw);
        if (seam_rider(t)) ++riders;
        if (!strongly_alternating(t)) f.strongly_alt_sum = false;
        if (tw != twist_number(numerator_closure(t)) ||
            tw != twist_number(denominator_closure(t)))
            f.closure_tw_equal = false;
    }
    f.twist_reduced = riders <= 1;
    return f;
}

LinkDiagram unknot_diagram() {
    LinkDiagram d;
    d.free_loops = 1;
    return d;
}

}  // namespace

std::vector<TangleFixture> tangle_corpus() {
    std::vector<TangleFixture> out;
    auto add = [&out](std::string name, TangleDiagram t) {
        TangleFixture f;
        f.name = std::move(name);
        f.strongly_alt = strongly_alternating(t);
        f.t = std::move(t);
        f.twist_reduced = true;
        out.push_back(std::move(f));
    };
    add("tangle-3", gen_twist_tangle({3}));
    add("tangle-1-2", gen_twist_tangle({1, 2}));
    add("tangle-2-2", gen_twist_tangle({2, 2}));
    add("tangle-3-2", gen_twist_tangle({3, 2}));
    add("tangle-2-3", gen_twist_tangle({2, 3}));
    add("tangle-3-3", gen_twist_tangle({3, 3}));
    add("tangle-2-2-2", gen_twist_tangle({2, 2, 2}));
    add("tangle-m2-2", gen_twist_tangle({-2, -2}));
    add("tangle-wheel", wheel_tangle());
    add("tangle-wheel-m", mirror(wheel_tangle()));
    return out;
}

std::vector<Fixture> fixture_corpus() {
    std::vector<Fixture> out;

    out.push_back(plain("unknot", unknot_diagram(), false, true));
    {
        LinkDiagram two;
        two.free_loops = 2;
        out.push_back(plain("unlink2", std::move(two), false, true));
    }
    out.push_back(plain("kink", parse_pd("X(1,1,2,2)"), false, false));
    {
        Fixture f = plain("trefoil-left", trefoil(false), true, true);
        f.torus_2p = 3;
        f.known_crosscap = crosscap_torus(2, 3);
        out.push_back(std::move(f));
    }
    {
        Fixture f = plain("trefoil-right", trefoil(true), true, true);
        f.torus_2p = 3;
        f.known_crosscap = crosscap_torus(2, 3);
        out.push_back(std::move(f));
    }
    {
        Fixture f = plain("figure-eight",
                          numerator_closure(gen_twist_tangle({2, 2})), true, true);
        f.known_crosscap = 2;  // spans the once-punctured Klein bottle, not less
        out.push_back(std::move(f));
    }
    {
        Fixture f = plain("hopf", parse_pd("X(1,3,2,4) X(3,1,4,2)"), true, true);
        f.torus_2p = 2;
        out.push_back(std::move(f));
    }
    {
        Fixture f = plain("braid-2-2", gen_braid_torus(2, 2), true, true);
        f.torus_2p = 2;
        out.push_back(std::move(f));
    }
    for (int q : {3, 5, 7}) {
        Fixture f = plain("braid-2-" + std::to_string(q), gen_braid_torus(2, q),
                          true, true);
        f.torus_2p = q;
        f.known_crosscap = crosscap_torus(2, q);
        out.push_back(std::move(f));
    }
    {
        Fixture f = plain("braid-3-4", gen_braid_torus(3, 4), true, false);
        f.known_crosscap = crosscap_torus(3, 4);
        out.push_back(std::move(f));
    }
    out.push_back(
        plain("clasp", whitehead_double_negative(unknot_diagram(), 1), false, false));
    out.push_back(plain("granny",
                        connected_sum(trefoil(true), 1, trefoil(true), 1), false,
                        true));
    out.push_back(plain("square",
                        connected_sum(trefoil(true), 1, trefoil(false), 1), false,
                        true));
    {
        Fixture f =
            plain("whitehead-trefoil", gen_whitehead_trefoils(1), true, false);
        f.crosscap_cap = 3;  // genus-one satellite, C <= 2g + 1
        out.push_back(std::move(f));
    }

    // Stacked single-region sums: the seams merge the two columns, giving the
    // standard (2, a+b) picture. Kept as labeled sums with closure data.
    {
        Fixture f = sum_fixture("sum-3+2",
                                {gen_twist_tangle({3}), gen_twist_tangle({2})});
        f.torus_2p = 5;
        f.known_crosscap = crosscap_torus(2, 5);
        f.closure_m = 0;  // denominator closures are unknots
        out.push_back(std::move(f));
    }
    {
        Fixture f = sum_fixture("sum-3+4",
                                {gen_twist_tangle({3}), gen_twist_tangle({4})});
        f.torus_2p = 7;
        f.known_crosscap = crosscap_torus(2, 7);
        f.closure_m = 0;
        out.push_back(std::move(f));
    }
    {
        Fixture f = sum_fixture("sum-2+2",
                                {gen_twist_tangle({2}), gen_twist_tangle({2})});
        f.torus_2p = 4;
        f.closure_m = 0;
        out.push_back(std::move(f));
    }

    // Staircase sums (alternating, multi-region summands).
    auto st = [](std::initializer_list<int> v) { return gen_twist_tangle(v); };
    out.push_back(sum_fixture("sum-22+22", {st({2, 2}), st({2, 2})}));
    out.push_back(sum_fixture("sum-22+32", {st({2, 2}), st({3, 2})}));
    out.push_back(sum_fixture("sum-32+23", {st({3, 2}), st({2, 3})}));
    out.push_back(sum_fixture("sum-22+222", {st({2, 2}), st({2, 2, 2})}));
    out.push_back(sum_fixture("sum-33+22", {st({3, 3}), st({2, 2})}));
    out.push_back(sum_fixture("sum-12+12", {st({1, 2}), st({1, 2})}));
    out.push_back(sum_fixture("sum-32+32", {st({3, 2}), st({3, 2})}));
    out.push_back(sum_fixture("sum-222+222", {st({2, 2, 2}), st({2, 2, 2})}));
    out.push_back(sum_fixture("sum-22+22m", {st({2, 2}), st({-2, -2})}));
    out.push_back(sum_fixture("sum3-12x3", {st({1, 2}), st({1, 2}), st({1, 2})}));
    out.push_back(
        sum_fixture("sum3-22-22-12", {st({2, 2}), st({2, 2}), st({1, 2})}));
    out.push_back(sum_fixture("sum4-12x4",
                              {st({1, 2}), st({1, 2}), st({1, 2}), st({1, 2})}));

    // Wheel sums: the strongly alternating instances.
    out.push_back(sum_fixture("sum-wheel+22", {wheel_tangle(), st({2, 2})}));
    out.push_back(sum_fixture("sum-wheel+wheel", {wheel_tangle(), wheel_tangle()}));
    out.push_back(
        sum_fixture("sum-wheel+wheelm", {wheel_tangle(), mirror(wheel_tangle())}));
    out.push_back(sum_fixture(
        "sum3-wheelx3", {wheel_tangle(), wheel_tangle(), wheel_tangle()}));

    return out;
}

LinkRecord make_record(const Fixture& f, int cap) {
    LinkRecord r;
    r.name = f.name;
    r.k = count_components(f.d);
    r.c = static_cast<long long>(f.d.crossings.size());
    r.tw = twist_number(f.d);
    JonesSummary s = coefficient_summary(jones_polynomial(f.d, cap));
    r.t_l = static_cast<long long>(s.t_l);
    r.adequate_a = is_adequate(f.d, Resolution::A);
    r.adequate_b = is_adequate(f.d, Resolution::B);
    r.l = f.l;
    r.closure_m = f.closure_m;
    r.known_crosscap = f.known_crosscap;
    r.crosscap_cap = f.crosscap_cap;
    r.flags.alternating = is_alternating(f.d);
    r.flags.reduced = is_reduced(f.d);
    r.flags.prime = f.prime;
    r.flags.twist_reduced = f.twist_reduced;
    // Connected alternating and connected adequate diagrams are non-split;
    // one-component diagrams trivially so.
    bool connected = is_connected(f.d);
    r.flags.non_split =
        connected && (r.k == 1 || r.flags.alternating || r.adequate_a || r.adequate_b);
    r.flags.strongly_alt_sum = f.strongly_alt_sum;
    r.flags.summands_twist_reduced = f.summands_twist_reduced;
    r.flags.not_2p_torus = f.torus_2p == 0;
    r.flags.closure_tw_equal = f.closure_tw_equal;
    return r;
}

}  // namespace tb
