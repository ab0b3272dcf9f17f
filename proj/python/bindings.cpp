#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mdsconv/pipeline.hpp"

namespace py = pybind11;
using namespace mdsconv;

namespace {

// Documents cross the boundary as JSON text; the package decodes them.
std::string construct_json(const std::string& family, unsigned q, std::size_t n, std::size_t k, std::size_t delta,
                           std::size_t tau) {
    return bundle_json(build(make_spec(parse_family(family), q, n, k, delta, tau))).dump();
}

std::string classify_json(const std::string& doc, std::size_t jmax, std::uint64_t budget) {
    const VerifyInput in = verify_input_from_json(Json::parse(doc));
    ClassifyOptions co;
    co.jmax = jmax;
    co.limits.budget = budget;
    Json out = report_json(classify(*in.field, in.parity, co));
    if (in.expected) out["expected"] = expected_json(*in.expected);
    return out.dump();
}

std::size_t block_min_distance(unsigned q, const std::vector<std::vector<Elem>>& parity) {
    const FieldPtr f = make_field_of_order(q);
    return min_distance(*f, Matrix::from_rows(parity));
}

std::vector<std::tuple<std::string, unsigned, std::size_t, std::size_t, std::size_t>> admissible(
    unsigned q, const std::vector<std::string>& families) {
    std::vector<Family> fams;
    for (const auto& f : families) fams.push_back(parse_family(f));
    if (families.empty()) fams = all_families();
    std::vector<std::tuple<std::string, unsigned, std::size_t, std::size_t, std::size_t>> out;
    for (const auto& s : admissible_parameters(q, fams))
        out.emplace_back(std::string(to_string(s.family)), s.q, s.n, s.k, s.delta);
    return out;
}

std::string example_json(int id) {
    const ExampleCheck c = check_example(example_fixture(id));
    Json claims = Json::object();
    for (const auto& cl : c.claims) claims[cl.name] = Json{{"claimed", cl.claimed}, {"verdict", to_string(cl.verdict)}};
    return Json{{"id", c.id},
                {"label", c.label},
                {"parity_match", c.parity_match},
                {"dfree", {c.report.dfree_lower, c.report.dfree_upper}},
                {"dfree_expected", c.dfree_expected},
                {"claims", claims},
                {"ok", c.ok()}}
        .dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Unit-memory MDS convolutional codes over small finite fields";

    static py::exception<Error> error(m, "MdsconvError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error, e.what());
        }
    });

    py::class_<Field, std::shared_ptr<Field>>(m, "Field")
        .def(py::init([](unsigned p, unsigned m, std::optional<std::vector<unsigned>> modulus) {
                 return std::make_shared<Field>(p, m, modulus);
             }),
             py::arg("p"), py::arg("m"), py::arg("modulus") = std::nullopt)
        .def_property_readonly("p", &Field::p)
        .def_property_readonly("m", &Field::m)
        .def_property_readonly("q", &Field::q)
        .def_property_readonly("theta", &Field::theta)
        .def_property_readonly("modulus", &Field::modulus)
        .def("add", &Field::add)
        .def("sub", &Field::sub)
        .def("mul", &Field::mul)
        .def("inv", &Field::inv)
        .def("pow", &Field::pow)
        .def("render", &Field::render);

    m.def("singleton_and_indices", [](std::size_t n, std::size_t k, std::size_t delta) {
        const auto s = singleton_and_indices(n, k, delta);
        return std::make_tuple(s.bound, s.M, s.L);
    });
    m.def("block_min_distance", &block_min_distance, py::arg("q"), py::arg("parity"));
    m.def("construct_json", &construct_json, py::arg("family"), py::arg("q"), py::arg("n") = 0, py::arg("k") = 0,
          py::arg("delta") = 0, py::arg("tau") = 0);
    m.def("classify_json", &classify_json, py::arg("doc"), py::arg("jmax") = 4, py::arg("budget") = 10'000'000,
          py::call_guard<py::gil_scoped_release>());
    m.def("admissible_parameters", &admissible, py::arg("q"), py::arg("families") = std::vector<std::string>{});
    m.def("example_json", &example_json, py::arg("id"));
}
