#include "tanglebounds/jones.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <unordered_map>

namespace tb {

namespace {

// Union-find over arc indices with union by size and no path compression, so
// unions can be rolled back in O(1) during the state enumeration.
struct RollbackUF {
    std::vector<int> parent, size;
    struct Undo {
        int child, parent, merged;
    };
    explicit RollbackUF(int n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) const {
        while (parent[x] != x) x = parent[x];
        return x;
    }
    Undo unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return {-1, -1, 0};
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        return {b, a, 1};
    }
    void undo(const Undo& u) {
        if (u.merged) {
            size[u.parent] -= size[u.child];
            parent[u.child] = u.child;
        }
    }
};

}  // namespace

LaurentPoly kauffman_bracket(const LinkDiagram& d, int cap) {
    const int c = static_cast<int>(d.crossings.size());
    if (c > cap) throw cap_exceeded(c, cap);
    if (c == 0) {
        if (d.free_loops == 0)
            throw std::invalid_argument("bracket of the empty diagram");
        // d^(loops-1) with d = -A^2 - A^(-2); A^2 is -2 quarters of t.
        LaurentPoly delta = LaurentPoly::monomial(-1, -2) + LaurentPoly::monomial(-1, 2);
        return pow(delta, static_cast<unsigned>(d.free_loops - 1));
    }

    // Compress arc labels to 0..n-1.
    std::map<int, int> index;
    for (const Crossing& cr : d.crossings)
        for (int a : cr.arcs)
            index.emplace(a, 0);
    int n = 0;
    for (auto& [a, i] : index) i = n++;

    struct Pair {
        int a0, a1, a2, a3;
    };
    std::vector<Pair> px(d.crossings.size());
    for (std::size_t i = 0; i < d.crossings.size(); ++i) {
        const auto& arcs = d.crossings[i].arcs;
        px[i] = {index[arcs[0]], index[arcs[1]], index[arcs[2]], index[arcs[3]]};
    }

    // histogram[a_count][circles] = number of states.
    std::vector<std::vector<std::uint64_t>> hist(
        static_cast<std::size_t>(c) + 1,
        std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));

    RollbackUF uf(n);
    // Iterative DFS over smoothing choices; merges tracks circle count.
    struct Frame {
        int merges_before;
        int branch;  // 0 = A next, 1 = B next, 2 = done
        RollbackUF::Undo u1, u2;
    };
    std::vector<Frame> stack(static_cast<std::size_t>(c) + 1);
    int depth = 0;
    int merges = 0;
    int a_count = 0;
    stack[0] = {0, 0, {}, {}};
    while (depth >= 0) {
        Frame& f = stack[depth];
        if (depth == c) {
            int circles = n - merges;
            ++hist[static_cast<std::size_t>(a_count)][static_cast<std::size_t>(circles)];
            --depth;
            continue;
        }
        if (f.branch > 0) {
            // Roll back the previous branch at this depth.
            uf.undo(f.u2);
            uf.undo(f.u1);
            merges = f.merges_before;
            if (f.branch == 1) --a_count;
        }
        if (f.branch == 2) {
            --depth;
            continue;
        }
        const Pair& p = px[depth];
        if (f.branch == 0) {
            // A-smoothing joins (0,1) and (2,3).
            f.u1 = uf.unite(p.a0, p.a1);
            f.u2 = uf.unite(p.a2, p.a3);
            ++a_count;
        } else {
            // B-smoothing joins (0,3) and (1,2).
            f.u1 = uf.unite(p.a0, p.a3);
            f.u2 = uf.unite(p.a1, p.a2);
        }
        merges = f.merges_before + f.u1.merged + f.u2.merged;
        ++f.branch;
        ++depth;
        stack[depth] = {merges, 0, {}, {}};
    }

    // Assemble: sum over a, circles of count * A^(2a - c) * delta^(circles - 1 + loops)
    // in quarters of t: A^k is -k quarters.
    LaurentPoly delta = LaurentPoly::monomial(-1, -2) + LaurentPoly::monomial(-1, 2);
    std::vector<LaurentPoly> delta_pow(static_cast<std::size_t>(n) + 1 +
                                       static_cast<std::size_t>(d.free_loops));
    delta_pow[0] = LaurentPoly::one();
    for (std::size_t i = 1; i < delta_pow.size(); ++i)
        delta_pow[i] = delta_pow[i - 1] * delta;

    LaurentPoly result;
    for (int a = 0; a <= c; ++a)
        for (int circles = 1; circles <= n; ++circles) {
            std::uint64_t count = hist[static_cast<std::size_t>(a)]
                                      [static_cast<std::size_t>(circles)];
            if (count == 0) continue;
            int a_exp = 2 * a - c;  // power of A
            LaurentPoly term =
                delta_pow[static_cast<std::size_t>(circles - 1 + d.free_loops)]
                    .shifted(-a_exp)
                    .scaled(bigint(count));
            result += term;
        }
    return result;
}

namespace {

// Smooth one crossing of a diagram. Arc labels identified by the smoothing
// are merged (smallest label wins); merged classes with no remaining crossing
// occurrence close into free loops. Handles repeated labels at the crossing.
LinkDiagram smooth(const LinkDiagram& d, std::size_t ci, bool a_smoothing) {
    const Crossing cr = d.crossings[ci];
    LinkDiagram out;
    out.free_loops = d.free_loops;
    out.crossings.reserve(d.crossings.size() - 1);
    for (std::size_t i = 0; i < d.crossings.size(); ++i)
        if (i != ci) out.crossings.push_back(d.crossings[i]);

    std::map<int, int> parent;
    auto find = [&parent](int x) {
        parent.emplace(x, x);
        while (parent[x] != x) x = parent[x];
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent[b] = a;
    };
    if (a_smoothing) {
        unite(cr.arcs[0], cr.arcs[1]);
        unite(cr.arcs[2], cr.arcs[3]);
    } else {
        unite(cr.arcs[0], cr.arcs[3]);
        unite(cr.arcs[1], cr.arcs[2]);
    }
    std::map<int, int> live;  // class root -> occurrences in remaining crossings
    for (int s = 0; s < 4; ++s) live[find(cr.arcs[s])] = 0;
    for (Crossing& c : out.crossings)
        for (int& a : c.arcs) {
            if (parent.count(a)) a = find(a);
            auto it = live.find(a);
            if (it != live.end()) ++it->second;
        }
    for (const auto& [root, occurrences] : live) {
        (void)root;
        if (occurrences == 0) ++out.free_loops;
    }
    return out;
}

std::string memo_key(const LinkDiagram& d) {
    // Renumber arcs in first-appearance order for a stable key.
    std::map<int, int> ren;
    std::string key;
    key.reserve(d.crossings.size() * 12);
    for (const Crossing& c : d.crossings)
        for (int a : c.arcs) {
            auto [it, fresh] = ren.emplace(a, static_cast<int>(ren.size()) + 1);
            (void)fresh;
            key += std::to_string(it->second);
            key += ',';
        }
    key += '|';
    key += std::to_string(d.free_loops);
    return key;
}

LaurentPoly bracket_skein_memo(const LinkDiagram& d,
                               std::unordered_map<std::string, LaurentPoly>& memo) {
    if (d.crossings.empty()) {
        if (d.free_loops == 0)
            throw std::invalid_argument("bracket of the empty diagram");
        LaurentPoly delta = LaurentPoly::monomial(-1, -2) + LaurentPoly::monomial(-1, 2);
        return pow(delta, static_cast<unsigned>(d.free_loops - 1));
    }
    std::string key = memo_key(d);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    // <D> = A <D_A> + A^(-1) <D_B>; A is -1 quarters of t.
    LaurentPoly va = bracket_skein_memo(smooth(d, 0, true), memo);
    LaurentPoly vb = bracket_skein_memo(smooth(d, 0, false), memo);
    LaurentPoly result = va.shifted(-1) + vb.shifted(1);
    memo.emplace(std::move(key), result);
    return result;
}

}  // namespace

LaurentPoly bracket_skein(const LinkDiagram& d) {
    std::unordered_map<std::string, LaurentPoly> memo;
    return bracket_skein_memo(d, memo);
}

LaurentPoly jones_polynomial(const LinkDiagram& d, const Orientation& o, int cap) {
    LaurentPoly br = kauffman_bracket(d, cap);
    int w = d.crossings.empty() ? 0 : writhe(d, o);
    // (-A)^(-3w) = (-1)^w A^(-3w); A^(-3w) is +3w quarters of t.
    LaurentPoly v = br.shifted(3 * w);
    if (w % 2 != 0) v = -v;
    return v;
}

LaurentPoly jones_polynomial(const LinkDiagram& d, int cap) {
    return jones_polynomial(d, orient(d), cap);
}

JonesSummary coefficient_summary(const LaurentPoly& v) {
    if (v.is_zero()) throw std::invalid_argument("summary of zero polynomial");
    JonesSummary s;
    s.max_deg_q = v.max_exp();
    s.min_deg_q = v.min_exp();
    s.span_q = s.max_deg_q - s.min_deg_q;
    if (s.span_q % 4 != 0)
        throw std::invalid_argument("polynomial support spans a fractional power of t");
    s.alpha = v.coeff(s.max_deg_q);
    s.alpha_prime = v.coeff(s.min_deg_q);
    s.beta = s.span_q >= 4 ? v.coeff(s.max_deg_q - 4) : bigint(0);
    s.beta_prime = s.span_q >= 4 ? v.coeff(s.min_deg_q + 4) : bigint(0);
    s.t_l = abs(s.beta) + abs(s.beta_prime);
    return s;
}

LaurentPoly torus_jones(int p, int q) {
    if (p < 2 || q < 2) throw std::invalid_argument("torus parameters must be >= 2");
    if (std::gcd(p, q) != 1)
        throw std::invalid_argument("torus parameters must be coprime");
    // All exponents in quarters of t (so t^k -> 4k).
    LaurentPoly num = LaurentPoly::one() - LaurentPoly::monomial(1, 4 * (p + 1)) -
                      LaurentPoly::monomial(1, 4 * (q + 1)) +
                      LaurentPoly::monomial(1, 4 * (p + q));
    LaurentPoly den = LaurentPoly::one() - LaurentPoly::monomial(1, 8);
    LaurentPoly quot = divide_exact(num, den);
    return quot.shifted(4 * (p - 1) * (q - 1) / 2);
}

}  // namespace tb
