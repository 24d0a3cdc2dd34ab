#include "tanglebounds/verify.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tanglebounds/bounds.hpp"
#include "tanglebounds/crosscap.hpp"
#include "tanglebounds/diagram.hpp"
#include "tanglebounds/family.hpp"
#include "tanglebounds/fixtures.hpp"
#include "tanglebounds/jones.hpp"
#include "tanglebounds/pd.hpp"
#include "tanglebounds/state_graph.hpp"
#include "tanglebounds/twist.hpp"

namespace tb {

namespace {

void check(SuiteResult& s, const std::string& name, bool pass,
           const std::string& detail = "") {
    s.checks.push_back({name, pass, detail});
    if (!pass) s.pass = false;
}

template <typename T>
std::string str(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

void suite_jones_oracle(SuiteResult& s, int cap,
                        const std::optional<std::string>& fixtures_dir) {
    for (const Fixture& f : fixture_corpus()) {
        const std::string name = "jones-oracle/" + f.name;
        if (static_cast<int>(f.d.crossings.size()) > 16) {
            check(s, name, true, "skipped, over dual-route size");
            continue;
        }
        try {
            validate(f.d);
            LaurentPoly direct = kauffman_bracket(f.d, cap);
            LaurentPoly skein = bracket_skein(f.d);
            check(s, name, direct == skein,
                  direct == skein ? ""
                                  : "state sum " + direct.to_string_bracket() +
                                        " vs skein " + skein.to_string_bracket());
        } catch (const std::exception& e) {
            check(s, name, false, e.what());
        }
    }
    if (!fixtures_dir) return;
    std::vector<std::filesystem::path> files;
    try {
        for (const auto& entry : std::filesystem::directory_iterator(*fixtures_dir))
            if (entry.path().extension() == ".pd") files.push_back(entry.path());
    } catch (const std::exception& e) {
        check(s, "jones-oracle/fixtures-dir", false, e.what());
        return;
    }
    std::sort(files.begin(), files.end());
    for (const auto& path : files) {
        const std::string name = "jones-oracle/" + path.filename().string();
        try {
            std::ifstream in(path);
            std::stringstream buf;
            buf << in.rdbuf();
            LinkDiagram d = parse_pd(buf.str());
            validate(d);
            if (static_cast<int>(d.crossings.size()) > 16) {
                check(s, name, true, "skipped, over dual-route size");
                continue;
            }
            check(s, name, kauffman_bracket(d, cap) == bracket_skein(d));
        } catch (const std::exception& e) {
            check(s, name, false, e.what());
        }
    }
}

void suite_torus_closed_form(SuiteResult& s, int cap) {
    const std::pair<int, int> cases[] = {{2, 3}, {2, 5}, {2, 7}, {3, 4}};
    for (auto [p, q] : cases) {
        const std::string name =
            "torus-closed-form/" + std::to_string(p) + "-" + std::to_string(q);
        LinkDiagram d = gen_braid_torus(p, q);
        LaurentPoly closed = torus_jones(p, q);
        LaurentPoly braid = jones_polynomial(d, cap);
        if (braid == closed) {
            check(s, name, true, "direct");
        } else {
            LaurentPoly mirrored = jones_polynomial(mirror(d), cap);
            check(s, name, mirrored == closed,
                  mirrored == closed
                      ? "mirror"
                      : "braid " + braid.to_string() + " vs closed " +
                            closed.to_string());
        }
    }
}

void suite_family_a(SuiteResult& s) {
    std::vector<FamilyARecord> all;
    for (int q : {3, 5, 7}) {
        std::vector<FamilyARecord> rows = family_part_a(q, 10);
        bool crosscap_ok = true, tl_ok = true;
        std::string bad;
        for (const FamilyARecord& r : rows) {
            if (r.crosscap != r.k + 1) {
                crosscap_ok = false;
                bad = "q=" + std::to_string(r.q) + " k=" + std::to_string(r.k) +
                      " C=" + std::to_string(r.crosscap);
            }
            if (r.t_l > 2) {
                tl_ok = false;
                bad = "q=" + std::to_string(r.q) + " k=" + std::to_string(r.k) +
                      " T_L=" + str(r.t_l);
            }
            all.push_back(r);
        }
        check(s, "family-a/crosscap-q" + std::to_string(q), crosscap_ok, bad);
        check(s, "family-a/jones-head-q" + std::to_string(q), tl_ok, bad);
    }
    IndependenceReport rep = independence_check_a(all);
    std::string notes;
    for (const std::string& n : rep.notes) notes += (notes.empty() ? "" : "; ") + n;
    check(s, "family-a/independence", rep.pass, notes);
}

void suite_family_b(SuiteResult& s, int cap) {
    std::vector<WhiteheadRecord> rows = family_whitehead(8, cap);
    bool e_ok = true, v_ok = true, betti_ok = true, adequate_ok = true;
    std::string e_bad, v_bad, betti_all, adequate_bad;
    for (const WhiteheadRecord& r : rows) {
        if (r.e_prime != 5 * r.m + 3) {
            e_ok = false;
            e_bad = "m=" + std::to_string(r.m) + " e'=" + std::to_string(r.e_prime);
        }
        if (r.v_prime != 4 * r.m + 3) {
            v_ok = false;
            v_bad = "m=" + std::to_string(r.m) + " v'=" + std::to_string(r.v_prime);
        }
        if (r.betti != r.m) betti_ok = false;
        betti_all += (betti_all.empty() ? "betti: " : ", ") + std::to_string(r.betti);
        if (!r.adequate_b) {
            adequate_ok = false;
            adequate_bad = "m=" + std::to_string(r.m);
        }
    }
    check(s, "family-b/e-prime", e_ok, e_bad);
    check(s, "family-b/v-prime", v_ok, v_bad);
    check(s, "family-b/betti-equals-m", betti_ok, betti_all);
    check(s, "family-b/b-adequacy", adequate_ok, adequate_bad);
    bool beta_ok = true;
    std::string beta_all;
    for (const WhiteheadRecord& r : rows) {
        if (!r.t_l) continue;
        // Under this library's smoothing conventions the all-B graph governs
        // the head coefficient, so the graph-side count is |beta|.
        if (!r.abs_beta || *r.abs_beta != r.m) beta_ok = false;
        beta_all += (beta_all.empty() ? "" : ", ") + ("m=" + std::to_string(r.m)) +
                    " |beta|=" + (r.abs_beta ? std::to_string(*r.abs_beta) : "-") +
                    " |beta'|=" +
                    (r.abs_beta_prime ? std::to_string(*r.abs_beta_prime) : "-");
    }
    check(s, "family-b/jones-head-equals-m", beta_ok, beta_all);
    IndependenceReport rep = independence_check_b(rows);
    std::string notes;
    for (const std::string& n : rep.notes) notes += (notes.empty() ? "" : "; ") + n;
    check(s, "family-b/independence", rep.pass, notes);
}

void suite_twist_equality(SuiteResult& s, int cap) {
    for (const Fixture& f : fixture_corpus()) {
        LinkRecord r = make_record(f, cap);
        if (!r.flags.alternating || !r.flags.reduced) continue;
        const std::string name = "twist-equality/" + f.name;
        if (f.torus_2p != 0 && f.torus_2p % 2 == 0) {
            check(s, name, true,
                  "excluded (2," + std::to_string(f.torus_2p) +
                      ") picture: T_L=" + str(r.t_l) + " tw=" + str(r.tw));
            continue;
        }
        if (!is_connected(f.d)) {
            check(s, name, true,
                  "excluded split diagram: T_L=" + str(r.t_l) + " tw=" + str(r.tw));
            continue;
        }
        if (!f.twist_reduced) {
            check(s, name, true,
                  "excluded, not twist-reduced (seam riders): T_L=" + str(r.t_l) +
                      " tw=" + str(r.tw));
            continue;
        }
        check(s, name, r.t_l == r.tw,
              "T_L=" + str(r.t_l) + " tw=" + str(r.tw));
    }
}

void suite_sum_bounds(SuiteResult& s, int cap) {
    int swept = 0;
    for (const Fixture& f : fixture_corpus()) {
        if (f.l < 2) continue;
        ++swept;
        LinkRecord r = make_record(f, cap);
        BoundInterval sandwich = tl_twist_sandwich(r.tw, r.k);
        check(s, "sum-bounds/sandwich/" + f.name, sandwich.contains(r.t_l),
              "T_L=" + str(r.t_l) + " interval [" + str(sandwich.lo) + "," +
                  str(*sandwich.hi) + "]");
        EdgeLossSplit loss = edge_loss_split(f.d);
        long long stated = lext_cap(r.tw, r.k);
        std::string detail = "l_ext=" + str(loss.external) + " cap=" + str(stated);
        if (f.l > 2) {
            long long general = lext_cap_general(r.tw, r.k, f.l);
            detail += " general-cap=" + str(general);
            check(s, "sum-bounds/ext-loss-general/" + f.name,
                  loss.external <= general, detail);
        }
        check(s, "sum-bounds/ext-loss/" + f.name, loss.external <= stated, detail);
    }
    check(s, "sum-bounds/coverage", swept >= 12,
          std::to_string(swept) + " labeled sum fixtures");
}

void suite_twist_bounds(SuiteResult& s) {
    for (const TangleFixture& tf : tangle_corpus()) {
        int tt = tangle_twist_number(tf.t);
        int num = twist_number(numerator_closure(tf.t));
        int den = twist_number(denominator_closure(tf.t));
        bool ok = tt - 2 <= num && num <= tt && tt - 2 <= den && den <= tt;
        check(s, "twist-bounds/closure/" + tf.name, ok,
              "tw(T)=" + str(tt) + " tw(N)=" + str(num) + " tw(D)=" + str(den));
        if (tf.name == "tangle-wheel")
            check(s, "twist-bounds/wheel-instance", tt == 5 && num == 3 && den == 3,
                  "tw(T)=" + str(tt) + " tw(N)=" + str(num) + " tw(D)=" + str(den));
    }
    for (const Fixture& f : fixture_corpus()) {
        if (f.l < 2) continue;
        // Single-region summands merge across the seams by construction; the
        // additivity statement covers multi-region summands.
        bool applicable = true;
        long long total = 0;
        for (long long tw : f.summand_tw) {
            if (tw < 2) applicable = false;
            total += tw;
        }
        if (!applicable) continue;
        long long tw = twist_number(f.d);
        check(s, "twist-bounds/additivity/" + f.name, tw == total,
              "tw(sum)=" + str(tw) + " sum of parts=" + str(total));
    }
}

void suite_intervals(SuiteResult& s, int cap) {
    for (const Fixture& f : fixture_corpus()) {
        LinkRecord r = make_record(f, cap);
        ConsistencyReport rep = check_consistency(r);
        bool sane = true;
        for (const IntervalReportEntry& e : rep.intervals)
            if (e.interval.hi && e.interval.lo > *e.interval.hi) sane = false;
        std::string detail;
        if (rep.witness) detail += "C=" + str(*rep.witness) + " ";
        detail += "asserted [" + str(rep.isect_lo) + "," +
                  (rep.isect_hi ? str(*rep.isect_hi) : "inf") + "] over " +
                  str(rep.intervals.size()) + " intervals";
        check(s, "intervals/" + f.name,
              sane && rep.consistent && rep.witness_in_all &&
                  rep.formula_tier_contains,
              detail);
    }
}

void suite_adequacy_doubles(SuiteResult& s) {
    for (const Fixture& f : fixture_corpus()) {
        if (count_components(f.d) != 1) continue;
        if (!is_adequate(f.d, Resolution::B)) continue;
        int clasp_arc = f.d.crossings.empty() ? 1 : f.d.crossings[0].arcs[0];
        LinkDiagram w = whitehead_double_negative(f.d, clasp_arc);
        check(s, "adequacy-doubles/" + f.name, is_adequate(w, Resolution::B),
              str(w.crossings.size()) + " crossings");
    }
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"jones-oracle", "torus-closed-form", "family-a",
            "family-b",     "twist-equality",    "sum-bounds",
            "twist-bounds", "intervals",         "adequacy-doubles"};
}

SuiteResult run_suite(const std::string& suite, int cap,
                      const std::optional<std::string>& fixtures_dir) {
    SuiteResult s;
    s.suite = suite;
    if (suite == "all") {
        for (const std::string& name : suite_names()) {
            SuiteResult part = run_suite(name, cap, fixtures_dir);
            for (CheckResult& c : part.checks) s.checks.push_back(std::move(c));
            if (!part.pass) s.pass = false;
        }
        return s;
    }
    if (suite == "jones-oracle")
        suite_jones_oracle(s, cap, fixtures_dir);
    else if (suite == "torus-closed-form")
        suite_torus_closed_form(s, cap);
    else if (suite == "family-a")
        suite_family_a(s);
    else if (suite == "family-b")
        suite_family_b(s, cap);
    else if (suite == "twist-equality")
        suite_twist_equality(s, cap);
    else if (suite == "sum-bounds")
        suite_sum_bounds(s, cap);
    else if (suite == "twist-bounds")
        suite_twist_bounds(s);
    else if (suite == "intervals")
        suite_intervals(s, cap);
    else if (suite == "adequacy-doubles")
        suite_adequacy_doubles(s);
    else
        throw std::invalid_argument("unknown suite: " + suite);
    return s;
}

}  // namespace tb
