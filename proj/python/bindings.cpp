#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "listcol/choosability.hpp"
#include "listcol/errors.hpp"
#include "listcol/exact.hpp"
#include "listcol/io.hpp"
#include "listcol/reductions.hpp"
#include "listcol/solvers.hpp"
#include "listcol/structure.hpp"

namespace py = pybind11;
using namespace listcol;

namespace {

py::dict result_dict(const SolveResult& r) {
    py::dict d;
    d["feasible"] = r.feasible;
    d["method"] = r.method;
    d["fallback_used"] = r.stats.fallback_used;
    if (r.colouring) d["colouring"] = r.colouring->colour;
    return d;
}

Instance make_instance(const Graph& g, const std::vector<ColourList>& lists,
                       const std::optional<std::pair<std::vector<int>, int>>& pre) {
    if (!pre) return Instance(g, ListAssignment(lists));
    return Instance(g, ListAssignment(lists), Precolouring(pre->first, pre->second));
}

} // namespace

PYBIND11_MODULE(_listcol, m) {
    m.doc() = "exact list-colouring toolkit (solvers, choosability, hardness gadgets)";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseFailure", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, std::vector<Edge>>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def_property_readonly("edges", &Graph::edges)
        .def("degree", &Graph::degree)
        .def("neighbours", &Graph::neighbours)
        .def("max_degree", &Graph::max_degree)
        .def("is_connected", &Graph::is_connected)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("named_graph", &named_graph, py::arg("family"),
          py::arg("params") = std::vector<int>{});

    py::class_<Instance>(m, "Instance")
        .def(py::init(&make_instance), py::arg("graph"), py::arg("lists"),
             py::arg("precolouring") = std::nullopt,
             "precolouring: optional pair (assignment with -1 for unset, palette k)")
        .def_property_readonly("graph", &Instance::graph)
        .def_property_readonly("lists",
                               [](const Instance& i) { return i.lists().lists(); })
        .def("__eq__", [](const Instance& a, const Instance& b) { return a == b; })
        .def("__repr__", [](const Instance& i) {
            return "Instance(n=" + std::to_string(i.graph().vertex_count()) +
                   ", m=" + std::to_string(i.graph().edge_count()) + ")";
        });

    m.def("parse_instance", &parse_instance);
    m.def("write_instance", &write_instance);

    m.def("check_colouring", [](const Instance& inst, const std::vector<int>& c) {
        return check_colouring(inst, Colouring{c});
    });

    m.def("solve", [](const Instance& inst, const std::string& method) {
        if (method == "auto") {
            auto [rep, res] = classify_and_solve(inst);
            py::dict d = result_dict(res);
            d["classification"] = rep.classification;
            return d;
        }
        if (method == "exact") return result_dict(solve_exact(inst));
        if (method == "2list") return result_dict(solve_2list(inst));
        if (method == "deg2") return result_dict(solve_max_degree2(inst));
        if (method == "gallai") return result_dict(solve_gallai_tree(inst));
        if (method == "deglist") return result_dict(solve_degree_lists(inst));
        throw InputError("unknown method '" + method + "'");
    }, py::arg("instance"), py::arg("method") = "auto");

    m.def("solve_precolouring_extension",
          [](const Graph& g, const std::vector<int>& pre, int k) {
              return result_dict(solve_precolouring_extension(g, Precolouring(pre, k), k));
          });

    m.def("classify", [](const Instance& inst) {
        auto [rep, res] = classify_and_solve(inst);
        py::dict d;
        d["classification"] = rep.classification;
        d["method"] = rep.method;
        d["max_list_size"] = rep.max_list_size;
        d["regular"] = rep.lists_regular;
        d["regularity"] = rep.regularity;
        d["max_degree"] = rep.max_degree;
        d["bipartite"] = rep.bipartite;
        d["gallai_components"] = rep.all_components_gallai;
        d["feasible"] = res.feasible;
        return d;
    });

    m.def("is_choosable", [](const Graph& g, int ell, std::uint64_t budget) {
        auto r = is_choosable(g, ell, budget);
        py::dict d;
        d["decided"] = r.decided();
        d["choosable"] = r.decided() ? py::cast(r.choosable()) : py::none();
        d["assignments_tested"] = r.assignments_tested;
        if (r.witness) {
            std::vector<ColourList> w;
            for (int v = 0; v < r.witness->vertex_count(); ++v)
                w.push_back(r.witness->list(v));
            d["witness"] = w;
        }
        return d;
    }, py::arg("graph"), py::arg("ell"), py::arg("budget") = std::uint64_t{0});

    m.def("choosability_peel", &choosability_peel);

    py::class_<GadgetSpec>(m, "GadgetSpec")
        .def_property_readonly("t", &GadgetSpec::t)
        .def_readonly("forced", &GadgetSpec::forced)
        .def_readonly("ell", &GadgetSpec::ell)
        .def("__repr__", [](const GadgetSpec& g) {
            return "GadgetSpec(n=" + std::to_string(g.f_prime.vertex_count()) +
                   ", t=" + std::to_string(g.t()) + ")";
        });

    m.def("synthetic_gadget_3reg", &synthetic_gadget_3reg);
    m.def("synthetic_gadget_4reg", &synthetic_gadget_4reg);
    m.def("synthetic_gadget_toy", &synthetic_gadget_toy);
    m.def("k4_gadget", [] { return make_gadget(k4_counterexample(), {0, 1}); });

    auto built_tuple = [](BuiltInstance b) {
        return py::make_tuple(b.instance, write_certificate(b.certificate));
    };
    m.def("build_girth_lift", [=](const Instance& seed, int p) {
        return built_tuple(build_girth_lift(seed, p));
    });
    m.def("build_3reg_case1", [=](const Graph& seed, const GadgetSpec& g, int r) {
        return built_tuple(build_3reg_case1(seed, g, r));
    });
    m.def("build_3reg_case2", [=](const Instance& seed, const GadgetSpec& g, int r) {
        return built_tuple(build_3reg_case2(seed, g, r));
    });
    m.def("build_4reg_instance", [=](const Instance& seed, const GadgetSpec& g, int r) {
        return built_tuple(build_4reg_instance(seed, g, r));
    });
    m.def("build_butterfly_safe", [=](const Instance& seed, const GadgetSpec& g, int r) {
        return built_tuple(build_butterfly_safe(seed, g, r));
    });
    m.def("build_pendant_precolour", [=](const Graph& seed, int k) {
        return built_tuple(build_pendant_precolour(seed, k));
    });
    m.def("build_pendant_clique", [=](const Graph& seed, int k) {
        return built_tuple(build_pendant_clique(seed, k));
    });
    m.def("build_3p1_instance", [=](const Instance& seed) {
        return built_tuple(build_3p1_instance(seed));
    });

    m.def("verify_reduction",
          [](const Instance& seed, const Instance& out, const std::string& cert_text,
             std::uint64_t budget) {
              auto rep = verify_reduction(seed, out, parse_certificate(cert_text), budget);
              py::dict d;
              d["passed"] = rep.passed();
              d["digest_ok"] = rep.digest_ok;
              d["equivalence"] = rep.equivalence == VerifyReport::Equivalence::match
                                     ? "match"
                                     : (rep.equivalence == VerifyReport::Equivalence::mismatch
                                            ? "mismatch"
                                            : "unverified");
              py::list claims;
              for (const auto& [desc, ok] : rep.claim_results)
                  claims.append(py::make_tuple(desc, ok));
              d["claims"] = claims;
              return d;
          },
          py::arg("seed"), py::arg("out"), py::arg("cert_text"),
          py::arg("budget") = std::uint64_t{50'000'000});

    m.def("structure_report", [](const Graph& g, const std::vector<std::string>& patterns) {
        auto rep = structure_report(g, patterns);
        py::dict d;
        d["max_degree"] = rep.max_degree;
        d["girth"] = rep.girth ? py::cast(*rep.girth) : py::none();
        d["bipartite"] = rep.bipartite;
        d["planar"] = rep.planar;
        d["two_connected"] = rep.two_connected;
        d["intersecting_triangles"] = rep.intersecting_triangles;
        py::dict forb;
        for (const auto& [pat, present] : rep.forbidden) forb[py::str(pat)] = present;
        d["forbidden"] = forb;
        return d;
    }, py::arg("graph"), py::arg("patterns") = std::vector<std::string>{});

    m.def("is_planar", &is_planar);
    m.def("girth", [](const Graph& g) -> py::object {
        auto v = girth(g);
        return v ? py::cast(*v) : py::none();
    });
}
