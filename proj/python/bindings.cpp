#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>

#include "tanglebounds/crosscap.hpp"
#include "tanglebounds/diagram.hpp"
#include "tanglebounds/family.hpp"
#include "tanglebounds/jones.hpp"
#include "tanglebounds/pd.hpp"
#include "tanglebounds/twist.hpp"
#include "tanglebounds/verify.hpp"

namespace py = pybind11;

namespace {

std::string big_str(const tb::bigint& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

py::dict summary_dict(const tb::LaurentPoly& v) {
    tb::JonesSummary s = tb::coefficient_summary(v);
    py::dict d;
    d["jones"] = v.to_string();
    d["t_l"] = big_str(s.t_l);
    d["alpha"] = big_str(s.alpha);
    d["beta"] = big_str(s.beta);
    d["beta_prime"] = big_str(s.beta_prime);
    d["alpha_prime"] = big_str(s.alpha_prime);
    d["span_q"] = s.span_q;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "diagrammatic link invariants and crosscap bounds";

    m.def("canonical_pd",
          [](const std::string& text) { return tb::serialize_pd(tb::parse_pd(text)); },
          py::arg("pd"), "parse PD text and return its canonical serialization");

    m.def("jones",
          [](const std::string& text, int cap) {
              return tb::jones_polynomial(tb::parse_pd(text), cap).to_string();
          },
          py::arg("pd"), py::arg("cap") = tb::default_state_sum_cap);

    m.def("jones_summary",
          [](const std::string& text, int cap) {
              return summary_dict(tb::jones_polynomial(tb::parse_pd(text), cap));
          },
          py::arg("pd"), py::arg("cap") = tb::default_state_sum_cap);

    m.def("twist_number",
          [](const std::string& text) { return tb::twist_number(tb::parse_pd(text)); },
          py::arg("pd"));

    m.def("writhe",
          [](const std::string& text) { return tb::writhe(tb::parse_pd(text)); },
          py::arg("pd"));

    m.def("crosscap_torus", &tb::crosscap_torus, py::arg("p"), py::arg("q"));

    m.def("family_torus",
          [](int q, int k_max) {
              py::list rows;
              for (const tb::FamilyARecord& r : tb::family_part_a(q, k_max)) {
                  py::dict d;
                  d["q"] = r.q;
                  d["k"] = r.k;
                  d["p"] = r.p;
                  d["C"] = r.crosscap;
                  d["T_L"] = r.t_l;
                  d["alpha"] = big_str(r.alpha);
                  d["beta"] = big_str(r.beta);
                  d["beta_prime"] = big_str(r.beta_prime);
                  d["alpha_prime"] = big_str(r.alpha_prime);
                  rows.append(d);
              }
              return rows;
          },
          py::arg("q"), py::arg("k_max"));

    m.def("family_whitehead",
          [](int m_max, int cap) {
              py::list rows;
              for (const tb::WhiteheadRecord& r : tb::family_whitehead(m_max, cap)) {
                  py::dict d;
                  d["m"] = r.m;
                  d["crossings"] = r.crossings;
                  d["e_prime"] = r.e_prime;
                  d["v_prime"] = r.v_prime;
                  d["betti"] = r.betti;
                  d["adequate_A"] = r.adequate_a;
                  d["adequate_B"] = r.adequate_b;
                  d["tw"] = r.tw;
                  d["k"] = r.k;
                  if (r.t_l)
                      d["T_L"] = *r.t_l;
                  else
                      d["T_L"] = py::none();
                  rows.append(d);
              }
              return rows;
          },
          py::arg("m_max"), py::arg("cap") = tb::default_state_sum_cap);

    m.def("verify_suite",
          [](const std::string& suite, int cap) {
              tb::SuiteResult res = tb::run_suite(suite, cap, std::nullopt);
              py::list checks;
              for (const tb::CheckResult& c : res.checks) {
                  py::dict d;
                  d["name"] = c.name;
                  d["pass"] = c.pass;
                  d["detail"] = c.detail;
                  checks.append(d);
              }
              py::dict out;
              out["suite"] = res.suite;
              out["pass"] = res.pass;
              out["checks"] = checks;
              return out;
          },
          py::arg("suite"), py::arg("cap") = tb::default_state_sum_cap);

    m.def("suite_names", &tb::suite_names);

    m.attr("DEFAULT_CAP") = tb::default_state_sum_cap;
}
