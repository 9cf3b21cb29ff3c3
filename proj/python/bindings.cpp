// Thin bindings over the exact core: inputs are integers and "p/q" strings,
// structured results come back as JSON-shaped dicts so no GMP state crosses
// the boundary.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json.hpp"
#include "krall/darboux.hpp"
#include "krall/eigen_algebra.hpp"
#include "krall/genericity.hpp"
#include "krall/laguerre.hpp"
#include "krall/serialize.hpp"
#include "krall/sobolev.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace krall;

namespace {

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null:
            return py::none();
        case json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case json::value_t::number_integer:
            return py::int_(j.get<long>());
        case json::value_t::number_unsigned:
            return py::int_(static_cast<long>(j.get<unsigned long>()));
        case json::value_t::string:
            return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& e : j) out.append(json_to_py(e));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (const auto& [k, v] : j.items()) out[py::str(k)] = json_to_py(v);
            return out;
        }
        default:
            throw std::runtime_error("unsupported json payload");
    }
}

std::vector<Rat> parse_betas(const std::vector<std::string>& beta) {
    std::vector<Rat> out;
    for (const auto& b : beta) out.push_back(Rat::from_string(b));
    return out;
}

py::object py_laguerre(const std::string& alpha, long n) {
    return json_to_py(poly_to_json(laguerre_poly(Rat::from_string(alpha), n)));
}

py::object py_system(long alpha, long k, const std::vector<std::string>& beta, long n) {
    auto spec = build_system(alpha, k, parse_betas(beta));
    json report;
    report["alpha"] = alpha;
    report["k"] = k;
    report["tau"] = poly_to_json(spec.tau);
    auto adm = admissible(spec);
    report["admissible"] = adm.admissible;
    if (!adm.admissible) {
        report["witness"] = adm.witness;
        return json_to_py(report);
    }
    auto mf = u_from_beta(spec);
    json u = json::array();
    for (const auto& x : mf.u) u.push_back(x.to_string());
    report["u"] = u;
    report["recurrence_pass"] = recurrence_check(spec, n).pass;
    report["orthogonality_pass"] = orthogonality_check(spec, mf, n).pass;
    return json_to_py(report);
}

py::object py_hat_laguerre(long alpha, long k, const std::vector<std::string>& beta, long n) {
    auto spec = build_system(alpha, k, parse_betas(beta));
    return json_to_py(poly_to_json(hat_laguerre(spec.sys, n)));
}

py::object py_operator(long alpha, long k, const std::vector<std::string>& beta,
                       const std::vector<std::string>& h_coeffs, long verify_n) {
    auto spec = build_system(alpha, k, parse_betas(beta));
    NPoly h(parse_betas(h_coeffs));
    json report;
    report["in_algebra"] = algebra_membership(h, spec.tau).member;
    auto solved = bhat_linear_solve(h, spec.sys);
    report["operator_found"] = solved.has_value();
    if (solved) {
        report["order"] = solved->op.order();
        report["operator"] = diffop_to_json(solved->op);
        report["eigen_verify_pass"] = eigen_verify(solved->op, h, spec.sys, verify_n).pass;
    }
    return json_to_py(report);
}

py::object py_k1_generator(long alpha, const std::string& beta0, long j, long verify_n) {
    auto spec = build_system(alpha, 1, {Rat::from_string(beta0)});
    auto gens = k1_generators(alpha, Rat::from_string(beta0));
    if (j < 0 || j > alpha) throw std::invalid_argument("generator index must be in 0..alpha");
    auto op = bhat_closed_form_k1(gens[static_cast<size_t>(j)], spec);
    json report;
    report["h"] = poly_to_json(gens[static_cast<size_t>(j)].h);
    report["order"] = op.op.order();
    report["operator"] = diffop_to_json(op.op);
    report["eigen_verify_pass"] =
        eigen_verify(op.op, gens[static_cast<size_t>(j)].h, spec.sys, verify_n).pass;
    return json_to_py(report);
}

py::object py_genericity(long alpha, long k, const std::vector<std::string>& beta) {
    auto spec = build_system(alpha, k, parse_betas(beta));
    auto rep = genericity_report(spec);
    json report;
    report["resultant"] = rep.resultant_value.to_string();
    report["generic"] = rep.generic;
    if (rep.closed_form_checked) report["closed_form_match"] = rep.closed_form_match;
    return json_to_py(report);
}

py::object py_sobolev(long alpha, const std::string& u0, const std::string& u1,
                      const std::string& v0, long n) {
    auto spec =
        params_from_A(alpha, Rat::from_string(u0), Rat::from_string(u1), Rat::from_string(v0));
    SobolevInnerProduct ip{alpha, Rat::from_string(u0), Rat::from_string(u1),
                           Rat::from_string(v0)};
    json report;
    report["singular_basis"] = spec.singular;
    report["beta0"] = spec.beta0.to_string();
    report["beta1"] = spec.beta1.to_string();
    report["l0"] = spec.l0.to_string();
    report["l1"] = spec.l1.to_string();
    report["deg_tau"] = spec.tau.degree();
    report["minimal_operator_order"] = 2 * (spec.tau.degree() + 1);
    report["orthogonality_pass"] = sobolev_orthogonality_check(spec, ip, n).pass;
    report["pentadiagonal_pass"] = pentadiagonal_factorization_check(spec, std::min(n, 10L)).pass;
    return json_to_py(report);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact Krall-Laguerre systems: Darboux transforms, eigenvalue algebras, "
              "genericity resultants, Sobolev orthogonality";
    m.def("laguerre_poly", &py_laguerre, py::arg("alpha"), py::arg("n"));
    m.def("system_report", &py_system, py::arg("alpha"), py::arg("k"), py::arg("beta"),
          py::arg("n") = 12);
    m.def("hat_laguerre", &py_hat_laguerre, py::arg("alpha"), py::arg("k"), py::arg("beta"),
          py::arg("n"));
    m.def("operator_report", &py_operator, py::arg("alpha"), py::arg("k"), py::arg("beta"),
          py::arg("h_coeffs"), py::arg("verify_n") = 25);
    m.def("k1_generator_report", &py_k1_generator, py::arg("alpha"), py::arg("beta0"),
          py::arg("j"), py::arg("verify_n") = 25);
    m.def("genericity_report", &py_genericity, py::arg("alpha"), py::arg("k"), py::arg("beta"));
    m.def("sobolev_report", &py_sobolev, py::arg("alpha"), py::arg("u0"), py::arg("u1"),
          py::arg("v0"), py::arg("n") = 10);
}
