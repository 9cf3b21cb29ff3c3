#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "krall/diffop.hpp"
#include "krall/poly.hpp"

namespace krall {

/// Canonical text form, descending degree: "3/2*n^2 - 1", "x", "-2", "0".
template <class Var>
std::string poly_to_text(const Poly<Rat, Var>& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int d = p.degree(); d >= 0; --d) {
        const Rat& c = p.coeff(d);
        if (c.is_zero()) continue;
        Rat mag = rat_abs(c);
        if (s.empty()) {
            if (c.sign() < 0) s += "-";
        } else {
            s += c.sign() < 0 ? " - " : " + ";
        }
        if (d == 0) {
            s += mag.to_string();
        } else {
            if (!mag.is_one()) s += mag.to_string() + "*";
            s += Var::name;
            if (d > 1) s += "^" + std::to_string(d);
        }
    }
    return s;
}

/// Canonical operator text, descending order: "(x^2 - 1)*D^2 + 3*D^0".
/// Single nonnegative terms are printed bare, everything else in parens.
std::string diffop_to_text(const DiffOp& op);

nlohmann::json rat_to_json(const Rat& r);
Rat rat_from_json(const nlohmann::json& j);

template <class Var>
nlohmann::json poly_to_json(const Poly<Rat, Var>& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.to_string());
    return nlohmann::json{{"var", Var::name}, {"coeffs", coeffs}, {"text", poly_to_text(p)}};
}

template <class Var>
Poly<Rat, Var> poly_from_json(const nlohmann::json& j) {
    std::vector<Rat> c;
    for (const auto& e : j.at("coeffs")) c.push_back(Rat::from_string(e.get<std::string>()));
    return Poly<Rat, Var>(std::move(c));
}

nlohmann::json diffop_to_json(const DiffOp& op);
DiffOp diffop_from_json(const nlohmann::json& j);

std::vector<Rat> parse_rat_list(const std::string& comma_separated);

}  // namespace krall
