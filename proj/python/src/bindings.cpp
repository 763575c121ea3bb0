#include "massey/commands.hpp"
#include "massey/errors.hpp"
#include "massey/parse.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace massey;

namespace {

struct PyAlgebra {
    AlgebraPtr algebra;
    RingPtr ring;

    const RingPtr& cohomology() {
        if (!ring) ring = compute_cohomology(algebra);
        return ring;
    }
};

CommandOptions options(std::optional<int> cap, std::vector<std::string> bundles = {}, std::uint64_t budget = 0,
                       std::optional<int> max_degree = std::nullopt) {
    CommandOptions o;
    o.cap = cap;
    o.bundles = std::move(bundles);
    o.budget = budget;
    o.max_degree = max_degree;
    return o;
}

Triple triple_of(const std::vector<std::string>& v) {
    if (v.size() != 3) throw py::value_error("expected three class expressions");
    return {v[0], v[1], v[2]};
}

/// Reports cross the boundary as their structured rendering.
std::string run(const std::string& name, const std::function<Report()>& body) {
    return render_structured(run_guarded(name, body));
}

}  // namespace

PYBIND11_MODULE(_massey, m) {
    m.doc() = "Exact Massey products and their transfer along circle actions";

    py::register_exception<Error>(m, "MasseyError");
    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<ValidationError>(m, "ValidationError");
    py::register_exception<CapOverflow>(m, "CapOverflow");
    py::register_exception<PremiseViolated>(m, "PremiseViolated");

    py::class_<PyAlgebra>(m, "Algebra")
        .def_property_readonly("cap", [](const PyAlgebra& a) { return a.algebra->cap(); })
        .def("dims", [](const PyAlgebra& a) { return a.algebra->dims(); })
        .def("betti_numbers", [](PyAlgebra& a) { return a.cohomology()->betti_numbers(); })
        .def("class_basis",
             [](PyAlgebra& a, int degree) {
                 std::vector<std::string> out;
                 const auto& ring = a.cohomology();
                 for (std::size_t i = 0; i < ring->betti(degree); ++i) out.push_back(ring->basis_class(degree, i).to_string());
                 return out;
             })
        .def("with_cap", [](const PyAlgebra& a, int cap) { return PyAlgebra{a.algebra->with_cap(cap), nullptr}; })
        .def(
            "massey_json",
            [](PyAlgebra& a, const std::string& x, const std::string& y, const std::string& z) {
                const auto& ring = a.cohomology();
                return to_json(triple_massey(parse_class(ring, x), parse_class(ring, y), parse_class(ring, z))).dump();
            },
            "Triple Massey product of three cocycle expressions, as JSON text");

    m.def(
        "parse_model",
        [](const std::string& text) { return PyAlgebra{parse_document(text).algebra, nullptr}; },
        "Algebra of a model document");
    m.def(
        "load_model", [](const std::string& path) { return PyAlgebra{load_document(path).algebra, nullptr}; },
        "Algebra of a model file");
    m.def("massey_tally", [] {
        auto t = massey_tally();
        return py::make_tuple(t.computed, t.disagreements);
    });

    m.def(
        "cohomology",
        [](const std::string& path, std::optional<int> cap, std::optional<int> max_degree) {
            return run("cohomology", [&] { return cmd_cohomology(path, options(cap, {}, 0, max_degree)); });
        },
        py::arg("path"), py::arg("cap") = py::none(), py::arg("max_degree") = py::none());
    m.def(
        "massey",
        [](const std::string& path, const std::vector<std::string>& t, std::optional<int> cap) {
            return run("massey", [&] { return cmd_massey(path, triple_of(t), options(cap)); });
        },
        py::arg("path"), py::arg("triple"), py::arg("cap") = py::none());
    m.def(
        "euler",
        [](const std::string& path, std::vector<std::string> bundles, std::optional<int> cap) {
            return run("euler", [&] { return cmd_euler(path, options(cap, bundles)); });
        },
        py::arg("path"), py::arg("bundles") = std::vector<std::string>{}, py::arg("cap") = py::none());
    m.def(
        "lemma32",
        [](const std::string& path, const std::vector<std::string>& t, std::vector<std::string> bundles,
           std::optional<int> cap) {
            return run("lemma32", [&] { return cmd_lemma32(path, triple_of(t), options(cap, bundles)); });
        },
        py::arg("path"), py::arg("triple"), py::arg("bundles") = std::vector<std::string>{},
        py::arg("cap") = py::none());
    m.def(
        "transfer",
        [](const std::string& path, std::optional<std::vector<std::string>> t, std::vector<std::string> bundles,
           std::optional<int> cap) {
            std::optional<Triple> triple;
            if (t) triple = triple_of(*t);
            return run("transfer", [&] { return cmd_transfer(path, triple, options(cap, bundles)); });
        },
        py::arg("path"), py::arg("triple") = py::none(), py::arg("bundles") = std::vector<std::string>{},
        py::arg("cap") = py::none());
    m.def(
        "theorem11",
        [](const std::string& path, const std::vector<std::string>& t, std::vector<std::string> bundles,
           std::optional<int> cap) {
            return run("theorem11", [&] { return cmd_theorem11(path, triple_of(t), options(cap, bundles)); });
        },
        py::arg("path"), py::arg("triple"), py::arg("bundles") = std::vector<std::string>{},
        py::arg("cap") = py::none());
    m.def(
        "scan",
        [](const std::string& path, std::uint64_t budget) {
            return run("scan", [&] { return cmd_scan(path, options(std::nullopt, {}, budget)); });
        },
        py::arg("path"), py::arg("budget") = 0);
    m.def("render_human", [](const std::string& structured) { return render_human(parse_structured(structured)); });
}
