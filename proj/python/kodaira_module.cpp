#include "kodaira/catalog.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace kodaira;

namespace {

py::dict recipe_result(const Recipe& r) {
    const auto run = run_recipe(r);
    py::dict d;
    d["id"] = r.id;
    d["expected"] = to_string(r.expected);
    d["computed"] = to_string(run.computed);
    d["inertia_order"] = run.inertia_order;
    d["pass"] = run.pass;
    return d;
}

}  // namespace

PYBIND11_MODULE(_kodaira, m) {
    m.doc() = "Kodaira type calculus for singular fibers of abelian fibrations";
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    m.def("canonical_type", [](const std::string& s) { return to_string(parse_kodaira_type(s)); }, py::arg("text"));
    m.def("validate", [](const std::string& s) { return validate(parse_kodaira_type(s)); }, py::arg("text"));
    m.def("pi0", [](const std::string& s) { return neron_component_group(parse_kodaira_type(s)).to_string(); }, py::arg("type"));
    m.def("cokernel", [](const std::vector<std::vector<long long>>& rows) {
        std::vector<std::vector<Integer>> big;
        for (const auto& row : rows) big.emplace_back(row.begin(), row.end());
        return cokernel(IntMatrix::from_rows(big)).to_string();
    }, py::arg("rows"));
    m.def("enumerate_balanced", [](int n) {
        std::vector<py::dict> out;
        for (const auto& c : enumerate_balanced(n)) {
            py::dict d;
            d["type"] = c.tag ? *c.tag : classify_config(c).name();
            d["multiplicities"] = c.multiplicities;
            std::vector<std::vector<long long>> pairing(c.size(), std::vector<long long>(c.size()));
            for (std::size_t i = 0; i < c.size(); ++i)
                for (std::size_t j = 0; j < c.size(); ++j) pairing[i][j] = static_cast<long long>(to_int64(c.pairing(i, j)));
            d["pairing"] = pairing;
            d["incidence"] = to_string(c.incidence);
            out.push_back(d);
        }
        return out;
    }, py::arg("max_components"));
    m.def("base_change", [](const std::string& s, std::int64_t d) {
        const auto r = base_change(parse_kodaira_type(s), d);
        return py::dict(py::arg("type") = to_string(r.type), py::arg("inertia_order") = r.inertia_order);
    }, py::arg("type"), py::arg("d"));
    m.def("semistable_reduction", [](const std::string& s) {
        const auto r = semistable_reduction(parse_kodaira_type(s));
        return py::dict(py::arg("degree") = r.degree, py::arg("reduced") = to_string(r.reduced), py::arg("twisted") = r.twisted);
    }, py::arg("type"));
    m.def("multiple_fiber_types", [](const std::string& p, std::int64_t mult, std::optional<std::string> j) {
        std::vector<std::string> out;
        for (const auto& t : multiple_fiber_types(parse_kodaira_type(p), mult, j)) out.push_back(to_string(t));
        return out;
    }, py::arg("p"), py::arg("m"), py::arg("j") = std::nullopt);
    m.def("parse_automorphism", [](const std::string& s) { return to_string(parse_automorphism(s)); }, py::arg("text"));
    m.def("quotient_type", [](const std::string& shape, std::int64_t mult, const std::vector<std::string>& formulas,
                              const std::string& j, const std::string& stabilizer) {
        CurveModel c = curve_model(parse_curve_type(shape), j);
        const auto g = FgAbelianGroup::parse(stabilizer);
        if (!g.is_trivial()) c = decorate(c, g);
        std::vector<DiagonalAutomorphism> gens;
        for (const auto& f : formulas) gens.push_back(realize(parse_automorphism(f), c));
        return to_string(quotient_type(c, gens, mult));
    }, py::arg("shape"), py::arg("m"), py::arg("formulas"), py::arg("j") = "generic", py::arg("stabilizer") = "0");
    m.def("recipe_ids", [] {
        std::vector<std::string> ids;
        for (const auto& r : standard_recipes()) ids.push_back(r.id);
        return ids;
    });
    m.def("run_recipe", [](const std::string& id) { return recipe_result(find_recipe(id)); }, py::arg("id"));
    m.def("table_ids", [] { return table_ids(); });
    m.def("emit_table_json", [](const std::string& id) {
        Json rows = Json::array();
        for (const auto& e : emit_table(id)) rows.push_back(e.row);
        return rows.dump();
    }, py::arg("id"));
}
