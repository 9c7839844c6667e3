#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "apcoprime/crt.hpp"
#include "apcoprime/decomposition.hpp"
#include "apcoprime/errors.hpp"
#include "apcoprime/json_io.hpp"
#include "apcoprime/pillai.hpp"

namespace py = pybind11;
using namespace apcoprime;

namespace pybind11::detail {

// Python int <-> mpz_class through decimal text.
template <>
struct type_caster<Integer> {
    PYBIND11_TYPE_CASTER(Integer, const_name("int"));

    bool load(handle src, bool convert) {
        if (!src) return false;
        if (!PyLong_Check(src.ptr())) {
            if (!convert || !PyIndex_Check(src.ptr())) return false;
        }
        object as_int = reinterpret_steal<object>(PyNumber_Index(src.ptr()));
        if (!as_int) {
            PyErr_Clear();
            return false;
        }
        value = Integer(py::str(as_int).cast<std::string>());
        return true;
    }

    static handle cast(const Integer& src, return_value_policy, handle) {
        return PyLong_FromString(src.get_str().c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::dict primes_above_dict(const PrimesAbove& pa) {
    py::dict d;
    d["p"] = pa.p;
    d["splitting"] = to_string(pa.splitting);
    d["first"] = pa.first ? py::cast(*pa.first) : py::none();
    d["second"] = pa.second ? py::cast(*pa.second) : py::none();
    return d;
}

CongruenceSystem system_from(const std::vector<std::pair<RingElement, RingElement>>& pairs) {
    CongruenceSystem sys;
    for (const auto& [u, v] : pairs) sys.push_back({u, v});
    return sys;
}

}  // namespace

PYBIND11_MODULE(_apcoprime, m) {
    m.doc() = "Coprime terms in arithmetic progressions over Z and norm-Euclidean quadratic rings";

    static py::exception<PreconditionError> precondition(m, "PreconditionError", PyExc_ValueError);
    static py::exception<InvariantViolation> invariant(m, "InvariantViolation", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const PreconditionError& e) {
            py::set_error(precondition, e.what());
        } catch (const InvariantViolation& e) {
            py::set_error(invariant, e.what());
        }
    });

    // Rational integers.
    m.def("gcd_int", &gcd_int, py::arg("a"), py::arg("b"));
    m.def("extended_gcd_int", [](const Integer& a, const Integer& b) {
        const auto r = extended_gcd_int(a, b);
        return py::make_tuple(r.g, r.s, r.t);
    }, py::arg("a"), py::arg("b"));
    m.def("legendre_symbol", &legendre_symbol, py::arg("a"), py::arg("p"));
    m.def("is_prime", &is_prime, py::arg("n"));
    m.def("factorize", [](const Integer& n) {
        const auto f = factorize(n);
        std::vector<std::pair<Integer, unsigned long>> factors;
        for (const auto& pp : f.factors) factors.emplace_back(pp.prime, pp.exponent);
        return py::make_tuple(f.sign, factors);
    }, py::arg("n"));
    m.def("multiplicative_order", &multiplicative_order, py::arg("a"), py::arg("n"));
    m.def("is_perfect_power_int", &is_perfect_power_int, py::arg("n"));

    // Rings and elements.
    py::class_<RingDescriptor>(m, "Ring")
        .def_static("integers", &RingDescriptor::integers)
        .def_static("quadratic", [](long mm) { return RingDescriptor::quadratic(mm); }, py::arg("m"))
        .def_static("parse", [](const std::string& s) { return parse_ring(s); }, py::arg("text"))
        .def_property_readonly("m", &RingDescriptor::m)
        .def_property_readonly("tag", &RingDescriptor::tag)
        .def_property_readonly("is_integers", &RingDescriptor::is_integers)
        .def_property_readonly("is_real", &RingDescriptor::is_real)
        .def_property_readonly("is_imaginary", &RingDescriptor::is_imaginary)
        .def_property_readonly("fundamental_unit", &RingDescriptor::fundamental_unit)
        .def(py::self == py::self)
        .def("__hash__", [](const RingDescriptor& r) { return std::hash<std::string>{}(r.tag()); })
        .def("__repr__", [](const RingDescriptor& r) { return "Ring('" + r.tag() + "')"; });

    py::class_<RingElement>(m, "Element")
        .def(py::init([](const RingDescriptor& ring, const Integer& x, const Integer& y) {
                 return RingElement(ring, x, y);
             }),
             py::arg("ring"), py::arg("x"), py::arg("y") = 0)
        .def_static("parse", &parse_element, py::arg("text"), py::arg("ring"))
        .def_property_readonly("ring", &RingElement::ring)
        .def_property_readonly("x", &RingElement::x)
        .def_property_readonly("y", &RingElement::y)
        .def("is_zero", &RingElement::is_zero)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__pow__", [](const RingElement& a, unsigned long e) { return power(a, e); })
        .def("__str__", &format_element)
        .def("__repr__", [](const RingElement& a) {
            return "Element('" + format_element(a) + "', " + a.ring().tag() + ")";
        });

    m.def("embed_int", &embed_int, py::arg("k"), py::arg("ring"));
    m.def("norm", &norm, py::arg("a"));
    m.def("conjugate", &conjugate, py::arg("a"));
    m.def("is_unit", &is_unit, py::arg("a"));
    m.def("divmod", [](const RingElement& a, const RingElement& b) {
        const auto r = divmod(a, b);
        return py::make_tuple(r.quotient, r.remainder);
    }, py::arg("a"), py::arg("b"));
    m.def("divides", &divides, py::arg("b"), py::arg("a"));
    m.def("are_associates", &are_associates, py::arg("a"), py::arg("b"));
    m.def("canonical_associate", &canonical_associate, py::arg("a"));
    m.def("gcd", &gcd_ring, py::arg("a"), py::arg("b"));
    m.def("extended_gcd", [](const RingElement& a, const RingElement& b) {
        const auto r = extended_gcd_ring(a, b);
        return py::make_tuple(r.g, r.s, r.t);
    }, py::arg("a"), py::arg("b"));
    m.def("coprime", &coprime, py::arg("a"), py::arg("b"));
    m.def("primes_above", [](const Integer& p, const RingDescriptor& r) {
        return primes_above_dict(primes_above(p, r));
    }, py::arg("p"), py::arg("ring"));

    // Decomposition numbers; results use the CLI's JSON schema.
    m.def("delta_quadratic", [](long mm) { return to_py(to_json(delta_quadratic(mm))); }, py::arg("m"));
    m.def("delta_cyclotomic", [](long mm, long bound) { return to_py(to_json(delta_cyclotomic(mm, bound))); },
          py::arg("m"), py::arg("bound") = kDefaultCyclotomicBound);
    m.def("delta_oracle", [](const RingDescriptor& r, long bound) { return to_py(to_json(delta_oracle(r, bound))); },
          py::arg("ring"), py::arg("bound"));

    // Congruences.
    m.def("crt_solve", [](const std::vector<std::pair<RingElement, RingElement>>& pairs) {
        const auto sys = system_from(pairs);
        validate_system(sys);
        return to_py(to_json(solve(sys), sys.front().residue.ring()));
    }, py::arg("congruences"), "Solve z = u (mod v) for a list of (u, v) pairs.");

    // Progressions.
    py::class_<ArithmeticProgression>(m, "Progression")
        .def(py::init<RingElement, RingElement, long>(), py::arg("first"), py::arg("difference"),
             py::arg("length"))
        .def_static("over_z", [](const Integer& a, const Integer& d, long n) {
            const auto z = RingDescriptor::integers();
            return ArithmeticProgression(embed_int(a, z), embed_int(d, z), n);
        }, py::arg("a"), py::arg("d"), py::arg("n"))
        .def_property_readonly("first", &ArithmeticProgression::first)
        .def_property_readonly("difference", &ArithmeticProgression::difference)
        .def_property_readonly("length", &ArithmeticProgression::length)
        .def_property_readonly("ring", &ArithmeticProgression::ring)
        .def("term", &ArithmeticProgression::term, py::arg("i"))
        .def("terms", &ArithmeticProgression::terms)
        .def("to_dict", [](const ArithmeticProgression& ap) { return to_py(to_json(ap)); });

    m.def("find_coprime_term", [](const ArithmeticProgression& ap) { return to_py(to_json(find_coprime_term(ap))); },
          py::arg("ap"));
    m.def("max_guaranteed_length", &max_guaranteed_length, py::arg("ring"));
    m.def("verify_bound_sweep", [](const RingDescriptor& r, long bound, long n_max, unsigned jobs) {
        SweepReport rep;
        {
            py::gil_scoped_release release;
            rep = verify_bound_sweep(r, bound, n_max, jobs);
        }
        return to_py(to_json(rep));
    }, py::arg("ring"), py::arg("coord_bound"), py::arg("n_max"), py::arg("jobs") = 1);
    m.def("construct_counterexample_ring", [](const RingDescriptor& r, long n) {
        return to_py(to_json(construct_counterexample_ring(r, n)));
    }, py::arg("ring"), py::arg("n"));
    m.def("search_counterexample_consecutive", [](long n, const Integer& limit) -> py::object {
        const auto found = search_counterexample_consecutive(n, limit);
        return found ? py::cast(*found) : py::none();
    }, py::arg("n"), py::arg("scan_limit"));
    m.def("transfer_ap_to_consecutive", &transfer_ap_to_consecutive, py::arg("ap"));
    m.def("squares_ap_triples", [](long count) {
        std::vector<std::tuple<Integer, Integer, Integer>> out;
        for (const auto& t : squares_ap_triples(count)) out.emplace_back(t.s1, t.s2, t.s3);
        return out;
    }, py::arg("count"));
    m.def("product_power_check", [](const ArithmeticProgression& ap) {
        return to_py(to_json(product_power_check(ap)));
    }, py::arg("ap"));
}
