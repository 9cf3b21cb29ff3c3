#include "krall/serialize.hpp"

namespace krall {

namespace {

int nonzero_terms(const XPoly& p) {
    int t = 0;
    for (const auto& c : p.coeffs())
        if (!c.is_zero()) ++t;
    return t;
}

}  // namespace

std::string diffop_to_text(const DiffOp& op) {
    if (op.is_zero()) return "0";
    std::string s;
    for (auto it = op.terms().rbegin(); it != op.terms().rend(); ++it) {
        const auto& [j, c] = *it;
        std::string cs = poly_to_text(c);
        bool bare = nonzero_terms(c) == 1 && cs[0] != '-';
        if (!s.empty()) s += " + ";
        s += (bare ? cs : "(" + cs + ")") + "*D^" + std::to_string(j);
    }
    return s;
}

nlohmann::json rat_to_json(const Rat& r) { return r.to_string(); }

Rat rat_from_json(const nlohmann::json& j) { return Rat::from_string(j.get<std::string>()); }

nlohmann::json diffop_to_json(const DiffOp& op) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [j, c] : op.terms())
        terms.push_back(nlohmann::json{{"order", j}, {"coeff", poly_to_json(c)}});
    return nlohmann::json{{"terms", terms}, {"text", diffop_to_text(op)}};
}

DiffOp diffop_from_json(const nlohmann::json& j) {
    DiffOp op;
    for (const auto& t : j.at("terms"))
        op += DiffOp::from_term(t.at("order").get<int>(), poly_from_json<XVar>(t.at("coeff")));
    return op;
}

std::vector<Rat> parse_rat_list(const std::string& comma_separated) {
    std::vector<Rat> out;
    std::string cur;
    for (char ch : comma_separated) {
        if (ch == ',') {
            out.push_back(Rat::from_string(cur));
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(Rat::from_string(cur));
    return out;
}

}  // namespace krall
