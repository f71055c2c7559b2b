#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sl3qt/verify.hpp"

namespace py = pybind11;
using namespace sl3qt;

namespace {

RenderStyle style_of(const std::string& s) {
    if (s == "canonical") return RenderStyle::canonical;
    if (s == "latex-like") return RenderStyle::latex_like;
    throw InputError("unknown rendering '" + s + "'");
}

std::vector<std::string> trace(const std::string& surface, const std::string& webs, int e1, int e2,
                               bool omega_one, const std::string& style) {
    Triangulation T = Triangulation::parse(surface);
    Seed s = build_quiver(T);
    std::vector<std::string> out;
    for (auto& w : parse_webs(T, webs)) {
        LaurentPoly v = w.closed ? loop_trace(T, s, w) : edge_trace(T, s, w, {e1, e2});
        out.push_back(render(s, omega_one ? classicalize(v) : v, style_of(style)));
    }
    return out;
}

std::string mutate(const std::string& seed, const std::vector<std::string>& nodes) {
    Seed s = Seed::parse(seed);
    for (auto& v : nodes) s = mutate_quiver(s, v);
    return s.render();
}

py::tuple flip_check_py(const std::string& surface, const std::string& arc, const std::string& webs, int e1, int e2) {
    Triangulation T = Triangulation::parse(surface);
    Quadrilateral Q = make_quadrilateral(T, parse_webs(T, webs), arc);
    bool ok = true;
    std::string report;
    for (std::size_t c = 0; c < Q.webs.size(); ++c) {
        FlipCheck f = flip_check(Q, c, {e1, e2});
        ok = ok && f.ok;
        report += f.report;
    }
    return py::make_tuple(ok, report);
}

std::vector<py::dict> verify_all(const std::string& data_dir, const std::string& golden_dir, int samples) {
    std::vector<py::dict> out;
    for (auto& r : verify_suite({data_dir, golden_dir, samples})) {
        py::dict d;
        d["criterion"] = r.criterion;
        d["name"] = r.name;
        d["passed"] = r.pass;
        d["detail"] = r.detail;
        out.push_back(d);
    }
    return out;
}

std::string table(const std::string& data_dir, int case_no) {
    Quadrilateral Q = load_quadrilateral(data_dir);
    if (case_no < 1 || case_no > int(Q.webs.size())) throw InputError("case out of range");
    return render_table(case_no, Q.s, step1_table(Q, Q.webs[case_no - 1]));
}

}  // namespace

PYBIND11_MODULE(_sl3qt, m) {
    m.doc() = "Exact SL3 quantum trace values and balanced quantum mutations";
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    m.def("trace", &trace, py::arg("surface"), py::arg("webs"), py::arg("e1") = 1, py::arg("e2") = 1,
          py::arg("omega_one") = false, py::arg("render") = "canonical",
          "Rendered trace value of every web in the web text.");
    m.def("mutate", &mutate, py::arg("seed"), py::arg("nodes"), "Mutate a seed (text format) at the nodes in turn.");
    m.def("consistency", [](const std::string& seed, const std::string& relation) {
        return check_relation(Seed::parse(seed), relation).ok();
    }, py::arg("seed"), py::arg("relation"));
    m.def("flip_check", &flip_check_py, py::arg("surface"), py::arg("arc"), py::arg("webs"), py::arg("e1") = 1,
          py::arg("e2") = 1, "Returns (ok, report) comparing both sides of a diagonal flip.");
    m.def("verify_all", &verify_all, py::arg("data_dir"), py::arg("golden_dir"), py::arg("samples") = 100);
    m.def("step1_table", &table, py::arg("data_dir"), py::arg("case"));
}
