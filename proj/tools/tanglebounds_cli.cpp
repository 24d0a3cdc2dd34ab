#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tanglebounds/crosscap.hpp"
#include "tanglebounds/diagram.hpp"
#include "tanglebounds/family.hpp"
#include "tanglebounds/jones.hpp"
#include "tanglebounds/pd.hpp"
#include "tanglebounds/state_graph.hpp"
#include "tanglebounds/twist.hpp"
#include "tanglebounds/verify.hpp"

namespace {

template <typename T>
std::string str(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

int resolve_cap(int flag_cap) {
    if (flag_cap > 0) return flag_cap;
    if (const char* env = std::getenv("TANGLEBOUNDS_CAP")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return tb::default_state_sum_cap;
}

std::ostream& open_sink(const std::string& path, std::ofstream& file) {
    if (path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open " + path);
    return file;
}

using Rows = std::vector<std::pair<std::string, std::string>>;

void emit_csv(std::ostream& os, const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows) {
    for (std::size_t i = 0; i < header.size(); ++i)
        os << (i ? "," : "") << header[i];
    os << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << row[i];
        os << "\n";
    }
}

void emit_json(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json obj;
        for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
        arr.push_back(obj);
    }
    os << arr.dump(2) << "\n";
}

int run_invariants(const std::string& path, const std::string& csv,
                   const std::string& json_path, bool dump_graph,
                   bool dump_twist, int cap) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    tb::LinkDiagram d = tb::parse_pd(buf.str());
    tb::validate(d);

    tb::LaurentPoly v = tb::jones_polynomial(d, cap);
    tb::JonesSummary s = tb::coefficient_summary(v);
    tb::ReducedStateGraph ga = tb::reduce(tb::state_graph(d, tb::Resolution::A));
    tb::ReducedStateGraph gb = tb::reduce(tb::state_graph(d, tb::Resolution::B));

    Rows kv;
    kv.push_back({"crossings", str(d.crossings.size())});
    kv.push_back({"components", str(tb::count_components(d))});
    kv.push_back({"writhe", str(tb::writhe(d))});
    kv.push_back({"twist_number", str(tb::twist_number(d))});
    kv.push_back({"jones", v.to_string()});
    kv.push_back({"span_q", str(s.span_q)});
    kv.push_back({"T_L", str(s.t_l)});
    kv.push_back({"alpha", str(s.alpha)});
    kv.push_back({"beta", str(s.beta)});
    kv.push_back({"beta_prime", str(s.beta_prime)});
    kv.push_back({"alpha_prime", str(s.alpha_prime)});
    kv.push_back({"adequate_A", tb::is_adequate(d, tb::Resolution::A) ? "true" : "false"});
    kv.push_back({"adequate_B", tb::is_adequate(d, tb::Resolution::B) ? "true" : "false"});
    kv.push_back({"v_prime_A", str(ga.v_prime())});
    kv.push_back({"e_prime_A", str(ga.e_prime())});
    kv.push_back({"v_prime_B", str(gb.v_prime())});
    kv.push_back({"e_prime_B", str(gb.e_prime())});

    std::vector<std::string> header;
    std::vector<std::string> row;
    for (const auto& [k, val] : kv) {
        header.push_back(k);
        row.push_back(val);
    }
    if (!csv.empty()) {
        std::ofstream file;
        emit_csv(open_sink(csv, file), header, {row});
    } else if (!json_path.empty()) {
        std::ofstream file;
        emit_json(open_sink(json_path, file), header, {row});
    } else {
        for (const auto& [k, val] : kv) std::cout << k << ": " << val << "\n";
    }

    if (dump_graph) {
        for (tb::Resolution r : {tb::Resolution::A, tb::Resolution::B}) {
            tb::StateGraph g = tb::state_graph(d, r);
            std::cout << "graph " << (r == tb::Resolution::A ? "A" : "B") << "\n";
            std::cout << g.vertices << "\n";
            for (const tb::StateEdge& e : g.edges)
                std::cout << e.u << " " << e.v << " " << e.crossing << " "
                          << e.tangle_id << "\n";
        }
    }
    if (dump_twist) {
        for (const tb::TwistRegion& region : tb::twist_regions(d)) {
            for (std::size_t i = 0; i < region.crossings.size(); ++i)
                std::cout << (i ? " " : "") << region.crossings[i];
            std::cout << "\n";
        }
    }
    return 0;
}

int run_family_torus(int q, int k_max, const std::string& csv,
                     const std::string& json_path) {
    std::vector<std::string> header = {"q",     "k",    "p",          "C",
                                       "T_L",   "alpha", "beta",      "beta_prime",
                                       "alpha_prime"};
    std::vector<std::vector<std::string>> rows;
    for (const tb::FamilyARecord& r : tb::family_part_a(q, k_max))
        rows.push_back({str(r.q), str(r.k), str(r.p), str(r.crosscap), str(r.t_l),
                        str(r.alpha), str(r.beta), str(r.beta_prime),
                        str(r.alpha_prime)});
    std::ofstream file;
    if (!json_path.empty())
        emit_json(open_sink(json_path, file), header, rows);
    else
        emit_csv(open_sink(csv.empty() ? "-" : csv, file), header, rows);
    return 0;
}

int run_family_whitehead(int m_max, int cap, const std::string& csv,
                         const std::string& json_path) {
    std::vector<std::string> header = {"m",  "crossings",  "e_prime",
                                       "v_prime", "betti", "adequate_A",
                                       "adequate_B", "tw", "k", "T_L"};
    std::vector<std::vector<std::string>> rows;
    for (const tb::WhiteheadRecord& r : tb::family_whitehead(m_max, cap))
        rows.push_back({str(r.m), str(r.crossings), str(r.e_prime), str(r.v_prime),
                        str(r.betti), r.adequate_a ? "true" : "false",
                        r.adequate_b ? "true" : "false", str(r.tw), str(r.k),
                        r.t_l ? str(*r.t_l) : ""});
    std::ofstream file;
    if (!json_path.empty())
        emit_json(open_sink(json_path, file), header, rows);
    else
        emit_csv(open_sink(csv.empty() ? "-" : csv, file), header, rows);
    return 0;
}

int run_family_braid(int p, int q) {
    std::cout << tb::serialize_pd(tb::gen_braid_torus(p, q)) << "\n";
    return 0;
}

int run_family_tangle_sum(const std::string& spec) {
    std::vector<tb::TangleDiagram> parts;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ';')) {
        std::vector<int> twists;
        std::stringstream ps(part);
        std::string tok;
        while (std::getline(ps, tok, ',')) twists.push_back(std::stoi(tok));
        parts.push_back(tb::gen_twist_tangle(twists));
    }
    if (parts.size() < 2)
        throw std::invalid_argument("tangle-sum needs at least two summands");
    std::cout << tb::serialize_pd(tb::conway_sum(parts)) << "\n";
    return 0;
}

int run_verify(const std::string& suite, int cap,
               const std::optional<std::string>& fixtures_dir) {
    tb::SuiteResult res = tb::run_suite(suite, cap, fixtures_dir);
    int failures = 0;
    for (const tb::CheckResult& c : res.checks) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
        std::cout << "\n";
        if (!c.pass) ++failures;
    }
    std::cout << "suite " << suite << ": " << res.checks.size() << " checks, "
              << failures << " failures\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"diagrammatic link invariants, families, and crosscap bounds"};
    app.require_subcommand(1);
    long long seed = 0;
    app.add_option("--seed", seed, "reserved; output is fully deterministic");

    auto* inv = app.add_subcommand("invariants", "invariant report for one PD file");
    std::string inv_path, inv_csv, inv_json;
    bool inv_dump_graph = false, inv_dump_twist = false;
    int inv_cap = 0;
    inv->add_option("file", inv_path, "PD text file")->required();
    inv->add_option("--csv", inv_csv, "write CSV to FILE ('-' = stdout)");
    inv->add_option("--json", inv_json, "write JSON to FILE ('-' = stdout)");
    inv->add_flag("--dump-graph", inv_dump_graph, "dump both state graphs");
    inv->add_flag("--dump-twist", inv_dump_twist, "dump twist regions");
    inv->add_option("--cap", inv_cap, "state-sum crossing cap");

    auto* family = app.add_subcommand("family", "generate a fixture family");
    family->require_subcommand(1);

    auto* torus = family->add_subcommand("torus", "torus-knot sweep rows");
    int torus_q = 3, torus_kmax = 10;
    std::string torus_csv, torus_json;
    torus->add_option("--q", torus_q, "odd strand parameter (>= 3)");
    torus->add_option("--kmax", torus_kmax, "sweep k = 1..kmax");
    torus->add_option("--csv", torus_csv, "write CSV to FILE ('-' = stdout)");
    torus->add_option("--json", torus_json, "write JSON to FILE ('-' = stdout)");

    auto* wh = family->add_subcommand("whitehead", "doubled connect-sum rows");
    int wh_mmax = 8, wh_cap = 0;
    std::string wh_csv, wh_json;
    wh->add_option("--mmax", wh_mmax, "sweep m = 1..mmax");
    wh->add_option("--cap", wh_cap, "state-sum crossing cap for the Jones side");
    wh->add_option("--csv", wh_csv, "write CSV to FILE ('-' = stdout)");
    wh->add_option("--json", wh_json, "write JSON to FILE ('-' = stdout)");

    auto* braid = family->add_subcommand("braid", "torus braid closure PD text");
    int braid_p = 2, braid_q = 3;
    braid->add_option("--p", braid_p, "strand count (>= 2)");
    braid->add_option("--q", braid_q, "repeat count (>= 1)");

    auto* tsum = family->add_subcommand("tangle-sum", "Conway sum PD text");
    std::string tsum_spec;
    tsum->add_option("--twists", tsum_spec,
                     "summand twist vectors, e.g. \"2,2;3,2\"")
        ->required();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string verify_suite = "all", verify_fixtures;
    int verify_cap = 0;
    verify->add_option("--suite", verify_suite, "suite name or 'all'");
    verify->add_option("--fixtures", verify_fixtures,
                       "directory of extra .pd fixtures");
    verify->add_option("--cap", verify_cap, "state-sum crossing cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*inv)
            return run_invariants(inv_path, inv_csv, inv_json, inv_dump_graph,
                                  inv_dump_twist, resolve_cap(inv_cap));
        if (*torus) return run_family_torus(torus_q, torus_kmax, torus_csv, torus_json);
        if (*wh)
            return run_family_whitehead(wh_mmax, resolve_cap(wh_cap), wh_csv, wh_json);
        if (*braid) return run_family_braid(braid_p, braid_q);
        if (*tsum) return run_family_tangle_sum(tsum_spec);
        if (*verify) {
            std::optional<std::string> dir;
            if (!verify_fixtures.empty()) dir = verify_fixtures;
            return run_verify(verify_suite, resolve_cap(verify_cap), dir);
        }
    } catch (const tb::parse_error& e) {
        std::cerr << "parse error at offset " << e.offset << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
