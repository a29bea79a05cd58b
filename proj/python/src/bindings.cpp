#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weyl/io.hpp"

namespace py = pybind11;
using namespace weyl;
using io::Json;

namespace {

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_py(const py::object& obj) {
    const std::string text = py::module_::import("json").attr("dumps")(obj).cast<std::string>();
    return Json::parse(text);
}

// Accepts a braiding document or a bare list of rows.
BraidingMatrix to_braiding(const py::object& obj) {
    Json doc = from_py(obj);
    if (doc.is_array()) doc = Json{{"rank", doc.size()}, {"q", doc}};
    return io::parse_braiding(doc);
}

std::size_t object_index(const CartanScheme& scheme, const py::object& obj) {
    if (obj.is_none()) return 0;
    return scheme.resolve(py::str(obj).cast<std::string>());
}

Word to_word(const CartanScheme& scheme, const std::vector<long long>& letters) {
    return io::word_from_json(Json(letters), scheme.rank());
}

std::vector<std::vector<Int>> root_list(const std::vector<RootVector>& roots) {
    std::vector<std::vector<Int>> out;
    for (const auto& r : roots) out.push_back(r.coords());
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Cartan schemes, Weyl groupoids and coideal subalgebras";
    m.attr("__version__") = WEYL_VERSION;

    auto base = py::register_exception<Error>(m, "WeylError", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", base);
    py::register_exception<VerificationError>(m, "VerificationError", base);
    py::register_exception<InputError>(m, "InputError", base);
    py::register_exception<OverflowError>(m, "OverflowError", base);

    m.attr("DEFAULT_MAX_LENGTH") = kDefaultMaxLength;

    py::class_<CartanScheme>(m, "Scheme")
        .def_static(
            "from_dict",
            [](const py::object& doc, std::size_t max_objects, Int exponent_bound) {
                return io::parse_scheme(from_py(doc), {max_objects, exponent_bound});
            },
            py::arg("doc"), py::arg("max_objects") = kDefaultMaxObjects,
            py::arg("exponent_bound") = kDefaultExponentBound)
        .def_property_readonly("rank", &CartanScheme::rank)
        .def_property_readonly("objects", [](const CartanScheme& s) {
            std::vector<std::string> names;
            for (std::size_t x = 0; x < s.object_count(); ++x) names.push_back(s.object(x).name);
            return names;
        })
        .def("cartan", [](const CartanScheme& s, const py::object& x) {
            const auto& a = s.cartan(object_index(s, x));
            std::vector<std::vector<Int>> rows;
            for (std::size_t i = 0; i < s.rank(); ++i) rows.push_back(a.row(i));
            return rows;
        }, py::arg("object") = py::none())
        .def("to_dict", [](const CartanScheme& s) { return to_py(io::scheme_to_json(s)); })
        .def("check_axioms", [](const CartanScheme& s, Int bound) {
            return to_py(io::axiom_report_to_json(s, check_axioms(s, bound)));
        }, py::arg("exponent_bound") = kDefaultExponentBound)
        .def("real_roots", [](const CartanScheme& s, const py::object& x, std::size_t max_length) {
            const auto roots = real_roots(s, object_index(s, x), max_length).roots;
            return root_list({roots.begin(), roots.end()});
        }, py::arg("object") = py::none(), py::arg("max_length") = kDefaultMaxLength)
        .def("is_finite", [](const CartanScheme& s, std::size_t max_length) {
            return to_py(io::finiteness_to_json(s, is_finite(s, max_length)));
        }, py::arg("max_length") = kDefaultMaxLength)
        .def("morphisms", [](const CartanScheme& s, const py::object& x, std::size_t max_length) {
            return to_py(io::morphisms_to_json(s, enumerate_morphisms_to(s, object_index(s, x), max_length)));
        }, py::arg("object") = py::none(), py::arg("max_length") = kDefaultMaxLength)
        .def("lambda_plus", [](const CartanScheme& s, const std::vector<long long>& word, const py::object& x) {
            return root_list(lambda_plus(s, object_index(s, x), to_word(s, word)).roots);
        }, py::arg("word"), py::arg("object") = py::none())
        .def("is_reduced", [](const CartanScheme& s, const std::vector<long long>& word, const py::object& x) {
            return is_reduced(s, object_index(s, x), to_word(s, word));
        }, py::arg("word"), py::arg("object") = py::none())
        .def("leq_duflo", [](const CartanScheme& s, const std::vector<long long>& w1,
                             const std::vector<long long>& w2, const py::object& x) {
            return leq_duflo(s, object_index(s, x), to_word(s, w1), to_word(s, w2));
        }, py::arg("w1"), py::arg("w2"), py::arg("object") = py::none())
        .def("duflo_poset", [](const CartanScheme& s, const py::object& x, std::size_t max_length, unsigned threads) {
            const std::size_t base = object_index(s, x);
            DufloPoset poset;
            {
                py::gil_scoped_release release;
                poset = build_poset(s, base, max_length, threads);
            }
            return to_py(io::poset_to_json(s, poset));
        }, py::arg("object") = py::none(), py::arg("max_length") = kDefaultMaxLength, py::arg("threads") = 1)
        .def("duflo_dot", [](const CartanScheme& s, const py::object& x, std::size_t max_length) {
            return to_dot(build_poset(s, object_index(s, x), max_length), s);
        }, py::arg("object") = py::none(), py::arg("max_length") = kDefaultMaxLength)
        .def("census", [](const CartanScheme& s, const py::object& x, std::size_t max_length, Int truncation) {
            const std::size_t base = object_index(s, x);
            return to_py(io::census_to_json(s, base, census(s, base, max_length, truncation)));
        }, py::arg("object") = py::none(), py::arg("max_length") = kDefaultMaxLength,
           py::arg("truncation") = kDefaultTruncation)
        .def("kharchenko_count", [](const CartanScheme& s, const py::object& x, std::size_t max_length) {
            const auto c = kharchenko_count(s, object_index(s, x), max_length);
            py::dict d;
            d["count"] = c.count;
            d["standard"] = c.standard;
            d["weyl_order"] = c.weyl_order ? py::object(py::int_(*c.weyl_order)) : py::none();
            d["type"] = c.type;
            return d;
        }, py::arg("object") = py::none(), py::arg("max_length") = kDefaultMaxLength)
        .def("oracle_verify", [](const CartanScheme& s, const py::object& x, int cap, long base) {
            if (!s.has_braiding()) throw DomainError("ModeUnsupported", "the oracle needs a braiding input");
            const auto records = census(s, object_index(s, x));
            const mpq_class q(base);
            py::list out;
            for (const auto& r : records) {
                Json j = io::oracle_report_to_json(oracle::verify_coideal(s, r, cap, q));
                j["record"] = r.id;
                out.append(to_py(j));
            }
            return out;
        }, py::arg("object") = py::none(), py::arg("cap") = oracle::kDefaultDegreeCap, py::arg("base") = 2);

    m.def("symmetrizer_dim", [](const py::object& braiding, const std::vector<Int>& degree, int cap, long base) {
        return oracle::symmetrizer_dim(to_braiding(braiding), RootVector(degree), cap, mpq_class(base));
    }, py::arg("braiding"), py::arg("degree"), py::arg("cap") = oracle::kDefaultDegreeCap, py::arg("base") = 2);

    m.def("enumerate_coideals_small", [](const py::object& braiding, std::size_t cap_dim, int degree_cap) {
        const auto e = oracle::enumerate_coideals_small(to_braiding(braiding), cap_dim, degree_cap);
        py::dict d;
        d["total_dimension"] = e.total_dimension;
        d["coideals"] = e.coideals;
        d["distinct_hilbert"] = e.distinct_hilbert;
        d["exhaustive"] = e.exhaustive;
        return d;
    }, py::arg("braiding"), py::arg("cap_dim"), py::arg("degree_cap") = oracle::kDefaultDegreeCap);
}
