#include "krall/diffop.hpp"

namespace krall {

XPoly DiffOp::apply(const XPoly& f) const {
    XPoly acc;
    int last = 0;
    XPoly der = f;
    for (const auto& [j, c] : t_) {
        for (; last < j; ++last) der = der.derivative();
        acc += c * der;
    }
    return acc;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
    // D^i (g D^j) = sum_m binom(i, m) g^(m) D^(i+j-m)
    DiffOp out;
    for (const auto& [i, ai] : a.terms()) {
        for (const auto& [j, bj] : b.terms()) {
            XPoly der = bj;
            for (int m = 0; m <= i; ++m) {
                XPoly c = ai * der * binom_rat(Rat(i), m);
                out += DiffOp::from_term(i + j - m, c);
                if (m < i) der = der.derivative();
            }
        }
    }
    return out;
}

DiffOp op_substitute(const NPoly& h, const DiffOp& base) {
    DiffOp acc;
    const auto& c = h.coeffs();
    for (size_t i = c.size(); i-- > 0;) {
        acc = acc * base;
        acc += DiffOp::from_term(0, XPoly(c[i]));
    }
    return acc;
}

}  // namespace krall
