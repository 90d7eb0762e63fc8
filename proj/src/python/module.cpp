#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fqgamma/cache.hpp"
#include "fqgamma/cli.hpp"
#include "fqgamma/errors.hpp"
#include "fqgamma/json_io.hpp"

namespace py = pybind11;

namespace fqgamma {
namespace {

// Recursive nlohmann -> Python conversion; ordered_json preserves the key
// order the schemas pin, and dicts keep insertion order.
py::object to_py(const json& j) {
    if (j.is_null()) return py::none();
    if (j.is_boolean()) return py::bool_(j.get<bool>());
    if (j.is_number_unsigned()) return py::int_(j.get<unsigned long long>());
    if (j.is_number_integer()) return py::int_(j.get<long long>());
    if (j.is_number_float()) return py::float_(j.get<double>());
    if (j.is_string()) return py::str(j.get<std::string>());
    if (j.is_array()) {
        py::list out;
        for (const auto& e : j) out.append(to_py(e));
        return out;
    }
    py::dict out;
    for (const auto& [k, v] : j.items()) out[py::str(k)] = to_py(v);
    return out;
}

FqPtr field_of(std::uint64_t q, const std::string& field_modulus) {
    return field_modulus.empty() ? Fq::make(q) : Fq::make(q, field_modulus);
}

// Same grammar as the CLI --arg flag: everything after the single '/' is
// the denominator; a bare "a" is the integral argument a/1.
RationalArg parse_arg(const FqPtr& F, const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos)
        return RationalArg::make(Poly::parse(F, text), Poly::one(F));
    if (text.find('/', slash + 1) != std::string::npos)
        throw domain_error("argument must be a single fraction a/f: " + text);
    return RationalArg::make(Poly::parse(F, text.substr(0, slash)),
                             Poly::parse(F, text.substr(slash + 1)));
}

}  // namespace
}  // namespace fqgamma

PYBIND11_MODULE(_core, m) {
    using namespace fqgamma;

    m.doc() = "Thakur Gamma values over F_q[t]: series evaluation, bracket "
              "relations, CM classification, certification";
    m.attr("__version__") = kToolVersion;

    py::register_exception<domain_error>(m, "DomainError", PyExc_ValueError);
    py::register_exception<precision_error>(m, "PrecisionError", PyExc_ValueError);
    py::register_exception<guard_error>(m, "GuardError", PyExc_RuntimeError);

    m.def(
        "gamma",
        [](std::uint64_t q, const std::string& arg, long prec, const std::string& field_modulus) {
            auto F = field_of(q, field_modulus);
            return to_py(gamma_json(gamma(parse_arg(F, arg), prec)));
        },
        py::arg("q"), py::arg("arg"), py::arg("prec") = 32, py::arg("field_modulus") = std::string(),
        "Gamma(a/f) as a 1/theta series dict with its stabilization data");

    m.def(
        "pi",
        [](std::uint64_t q, long prec, const std::string& field_modulus) {
            return to_py(series_json(carlitz_period(field_of(q, field_modulus), prec)));
        },
        py::arg("q"), py::arg("prec") = 32, py::arg("field_modulus") = std::string(),
        "Carlitz period as a 1/eta series dict, with eta^(q-1) = -theta");

    m.def(
        "bracket",
        [](std::uint64_t q, const std::string& f, const std::string& vec,
           const std::string& field_modulus) {
            auto F = field_of(q, field_modulus);
            Poly fp = Poly::parse(F, f);
            return to_py(bracket_json(is_bracket_relation(ExponentVector::parse(F, fp, vec))));
        },
        py::arg("q"), py::arg("f"), py::arg("vec"), py::arg("field_modulus") = std::string(),
        "Decide the bracket relation for an exponent vector \"rep:exp,...\" mod f");

    m.def(
        "classify",
        [](std::uint64_t q, const std::string& f, const std::string& field_modulus) {
            auto F = field_of(q, field_modulus);
            return to_py(classification_json(classify(Poly::parse(F, f))));
        },
        py::arg("q"), py::arg("f"), py::arg("field_modulus") = std::string(),
        "CM structure of the soliton t-module of the conductor f");

    m.def(
        "isogeny",
        [](std::uint64_t q, const std::string& f, const std::string& g,
           const std::string& field_modulus) {
            auto F = field_of(q, field_modulus);
            return to_py(isogeny_json(isogenous(Poly::parse(F, f), Poly::parse(F, g))));
        },
        py::arg("q"), py::arg("f"), py::arg("g"), py::arg("field_modulus") = std::string(),
        "Isogeny test between the CM modules of f and g");

    m.def(
        "equiv",
        [](std::uint64_t q, const std::string& a, const std::string& f, const std::string& b,
           const std::string& g, const std::string& field_modulus) {
            auto F = field_of(q, field_modulus);
            return approx_equiv(Poly::parse(F, a), Poly::parse(F, f), Poly::parse(F, b),
                                Poly::parse(F, g));
        },
        py::arg("q"), py::arg("a"), py::arg("f"), py::arg("b"), py::arg("g"),
        py::arg("field_modulus") = std::string(),
        "Whether Gamma(a/f) ~ Gamma(b/g) up to an algebraic multiple");

    m.def(
        "certify",
        [](std::uint64_t q, const std::string& f, const std::string& vec, long prec, int dmax,
           const std::string& field_modulus) {
            auto F = field_of(q, field_modulus);
            Poly fp = Poly::parse(F, f);
            return to_py(cert_json(certify_relation(ExponentVector::parse(F, fp, vec), prec, dmax)));
        },
        py::arg("q"), py::arg("f"), py::arg("vec"), py::arg("prec") = 80, py::arg("dmax") = 8,
        py::arg("field_modulus") = std::string(),
        "Numerically certify a bracket relation by rational recognition over F_q(eta)");

    m.def(
        "verify",
        [](std::uint64_t q, const std::string& rel, const std::string& a, const std::string& f,
           const std::string& b, const std::string& g, const std::string& field_modulus) {
            auto F = field_of(q, field_modulus);
            Poly fp = Poly::parse(F, f);
            Poly ap = Poly::parse(F, a);

            ExponentVector v(fp);
            long long expected = 0;
            if (rel == "translation") {
                if (b.empty()) throw domain_error("verify rel=translation needs b");
                v = translation_vector(ap, Poly::parse(F, b), fp);
            } else if (rel == "reflection") {
                v = reflection_vector(ap, fp);
                expected = 1;
            } else if (rel == "gauss") {
                if (g.empty()) throw domain_error("verify rel=gauss needs g");
                Poly gp = Poly::parse(F, g);
                v = gauss_vector(ap, fp, gp);
                long long p = 1;
                for (int i = 0; i < gp.deg(); ++i) {
                    expected += p;
                    p *= static_cast<long long>(F->q());
                }
            } else {
                throw domain_error("rel must be translation, reflection or gauss");
            }

            BracketCheck chk = is_bracket_relation(v);
            json body = json::object();
            body["rel"] = rel;
            body["vector"] = v.to_string();
            body["is_relation"] = chk.is_relation;
            body["sigma_plus"] = chk.sigma_plus;
            body["expected_sigma_plus"] = expected;
            body["ok"] = chk.is_relation && chk.sigma_plus == expected;
            if (chk.witness) body["witness"] = chk.witness->to_string();
            return to_py(body);
        },
        py::arg("q"), py::arg("rel"), py::arg("a"), py::arg("f"), py::arg("b") = std::string(),
        py::arg("g") = std::string(), py::arg("field_modulus") = std::string(),
        "Check that a functional-equation family yields the expected relation");

    m.def(
        "run",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = run_command(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"),
        "Run a CLI command line (program name excluded); returns (exit_code, stdout, stderr)");
}
