// Copyright 2026 The hypersat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hypersat/bounds.hpp"
#include "hypersat/cli.hpp"
#include "hypersat/constructions.hpp"
#include "hypersat/counting.hpp"
#include "hypersat/io.hpp"
#include "hypersat/oracles.hpp"
#include "hypersat/report.hpp"
#include "hypersat/sidorenko.hpp"
#include "hypersat/supersat.hpp"

namespace py = pybind11;
using namespace hypersat;

namespace {

py::object to_py(const BigInt& x) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(x.str().c_str(), nullptr, 10));
}

py::object to_py(const Rational& q) {
  static const py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(boost::multiprecision::numerator(q)), to_py(boost::multiprecision::denominator(q)));
}

py::object optional_rational(const std::optional<Rational>& q) { return q ? to_py(*q) : py::none(); }

py::dict certificate_dict(const CycleCertificate& c) {
  py::dict d;
  d["r"] = c.r;
  d["ell"] = c.ell;
  d["hinges"] = c.hinges;
  d["interior"] = c.interior;
  d["edges"] = c.edges;
  return d;
}

}  // namespace

PYBIND11_MODULE(_hypersat, m) {
  m.doc() = "Exact hypergraph counting and cycle supersaturation";
  m.attr("__version__") = kToolVersion;

  // Translators run newest first, so the base class goes in first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init<unsigned, std::size_t, std::vector<std::vector<Vertex>>>(), py::arg("r"), py::arg("n"),
           py::arg("edges"))
      .def_property_readonly("r", &Hypergraph::uniformity)
      .def_property_readonly("n", &Hypergraph::vertex_count)
      .def_property_readonly("m", &Hypergraph::edge_count)
      .def("edges", &Hypergraph::edge_list)
      .def("degree", &Hypergraph::degree)
      .def("codegree",
           [](const Hypergraph& h, std::vector<Vertex> s) {
             std::sort(s.begin(), s.end());
             return h.codegree(s);
           })
      .def("is_linear", &Hypergraph::is_linear)
      .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a == b; })
      .def("__len__", &Hypergraph::edge_count)
      .def("__repr__", [](const Hypergraph& h) {
        std::ostringstream s;
        s << "Hypergraph(r=" << h.uniformity() << ", n=" << h.vertex_count() << ", m=" << h.edge_count() << ")";
        return s.str();
      });

  m.def("parse_hypergraph", [](const std::string& text) { return parse_hypergraph(text); });
  m.def("format_hypergraph", &format_hypergraph);
  m.def("read_hypergraph", py::overload_cast<const std::string&>(&read_hypergraph));
  m.def("write_hypergraph", py::overload_cast<const Hypergraph&, const std::string&>(&write_hypergraph));

  m.def("single_edge", &single_edge, py::arg("r"));
  m.def("linear_cycle", &linear_cycle, py::arg("r"), py::arg("length"));
  m.def("linear_path", &linear_path, py::arg("r"), py::arg("length"));
  m.def("complete_hypergraph", &complete_hypergraph, py::arg("r"), py::arg("n"));
  m.def(
      "complete_partite", [](unsigned r, std::size_t s) { return complete_partite(r, s).graph(); }, py::arg("r"),
      py::arg("s"));
  m.def("blow_up", &blow_up, py::arg("h"), py::arg("t"));
  m.def("tensor_product", &tensor_product);
  m.def("steiner_triple_9", &steiner_triple_9);
  m.def(
      "random_uniform",
      [](std::size_t n, unsigned r, std::size_t edges, std::uint64_t seed) {
        return random_uniform(n, r, edges, RngSeed{seed});
      },
      py::arg("n"), py::arg("r"), py::arg("m"), py::arg("seed") = 0);
  m.def(
      "greedy_high_girth",
      [](std::size_t n, unsigned r, unsigned g, std::size_t attempts, std::uint64_t seed) {
        return greedy_high_girth(n, r, g, attempts, RngSeed{seed});
      },
      py::arg("n"), py::arg("r"), py::arg("girth"), py::arg("attempts"), py::arg("seed") = 0);

  m.def(
      "hom_count", [](const Hypergraph& f, const Hypergraph& h, unsigned t) { return to_py(hom_count(f, h, t).value); },
      py::arg("f"), py::arg("h"), py::arg("threads") = 1);
  m.def(
      "labeled_copy_count",
      [](const Hypergraph& f, const Hypergraph& h, unsigned t) { return to_py(labeled_copy_count(f, h, t).value); },
      py::arg("f"), py::arg("h"), py::arg("threads") = 1);
  m.def("automorphism_count", [](const Hypergraph& f) { return to_py(automorphism_count(f)); });
  m.def("berge_girth", [](const Hypergraph& h) -> py::object {
    const auto g = berge_girth(h).girth;
    return g ? py::object(py::int_(*g)) : py::object(py::none());
  });
  m.def("brute_hom", [](const Hypergraph& f, const Hypergraph& h) { return to_py(oracle::brute_hom(f, h)); });
  m.def("brute_copies", [](const Hypergraph& f, const Hypergraph& h) { return to_py(oracle::brute_copies(f, h)); });
  m.def("brute_berge_girth", [](const Hypergraph& h) -> py::object {
    const auto g = oracle::brute_berge_girth(h);
    return g ? py::object(py::int_(*g)) : py::object(py::none());
  });

  m.def("sidorenko_check", [](const Hypergraph& f, const Hypergraph& h) {
    return std::string(to_string(sidorenko_check(f, h)));
  });
  m.def("gap_estimate", [](const Hypergraph& f, const Hypergraph& h) { return gap_estimate(f, h); });
  m.def("edge_exponent", &edge_exponent);

  m.def(
      "bound_values",
      [](unsigned r, unsigned ell, std::size_t n, std::uint64_t e, double slack) {
        const auto b = bound_values(r, ell, n, e, slack);
        py::dict d;
        d["f_r"] = to_py(b.f_r);
        d["f_prev"] = optional_rational(b.f_prev);
        d["weaker_exponent"] = to_py(b.weaker_exponent);
        d["conditional_exponent"] = to_py(b.conditional_exponent);
        d["coincide"] = b.coincide;
        d["a_edge_exponent"] = optional_rational(b.a_edge_exponent);
        d["a_vertex_exponent"] = optional_rational(b.a_vertex_exponent);
        d["a_value"] = b.a_value ? py::cast(*b.a_value) : py::none();
        d["delta"] = b.delta;
        d["log_copy_lower_bound"] = b.log_copy_lower_bound;
        d["conditional_copy_exponent"] = b.conditional_copy_exponent;
        d["weaker_copy_exponent"] = b.weaker_copy_exponent;
        return d;
      },
      py::arg("r"), py::arg("ell"), py::arg("n"), py::arg("e"), py::arg("slack") = 0.0);

  m.def(
      "greedy_count",
      [](const Hypergraph& h, std::size_t a, unsigned ell, unsigned threads) {
        GreedyOptions o;
        o.count_only = true;
        o.threads = threads;
        const auto rep = greedy_expand_cycles(h, a, ell, 0, RngSeed{0}, o);
        return py::make_tuple(to_py(rep.certificates), to_py(rep.floor));
      },
      py::arg("h"), py::arg("a"), py::arg("ell"), py::arg("threads") = 1);

  m.def(
      "supersat",
      [](const Hypergraph& g, unsigned ell, const std::string& mode, std::size_t budget, std::uint64_t seed) {
        const PipelineMode pm = mode == "induction" ? PipelineMode::induction : PipelineMode::shadow;
        if (mode != "induction" && mode != "shadow") throw PreconditionError("mode must be 'induction' or 'shadow'");
        PipelineReport rep;
        {
          py::gil_scoped_release release;
          rep = supersat_pipeline(g, ell, pm, budget, RngSeed{seed});
        }
        py::list trace;
        for (const auto& t : rep.trace) {
          py::dict d;
          d["r"] = t.r;
          d["stage"] = t.stage;
          d["anchor"] = t.anchor;
          d["values"] = t.values;
          d["status"] = to_string(t.status);
          trace.append(d);
        }
        py::list certs;
        for (const auto& c : rep.certificates) certs.append(certificate_dict(c));
        py::dict out;
        out["trace"] = trace;
        out["certificates"] = certs;
        out["truncated"] = rep.truncated;
        return out;
      },
      py::arg("g"), py::arg("ell") = 2, py::arg("mode") = "shadow", py::arg("budget") = 1000, py::arg("seed") = 0);

  m.def("certificate_problem", [](const py::dict& d, const Hypergraph& host) -> py::object {
    const auto c = make_certificate(d["r"].cast<unsigned>(), d["ell"].cast<unsigned>(),
                                    d["hinges"].cast<std::vector<Vertex>>(),
                                    d["interior"].cast<std::vector<std::vector<Vertex>>>());
    const auto p = certificate_problem(c, host);
    return p ? py::cast(*p) : py::none();
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int status = 0;
    {
      py::gil_scoped_release release;
      status = run_cli(args, out, err);
    }
    return py::make_tuple(status, out.str(), err.str());
  });
}
