#include "krall/laguerre.hpp"

#include <stdexcept>

#include "krall/serialize.hpp"

namespace krall {

XPoly laguerre_poly(const Rat& alpha, long n) {
    if (n < 0) return XPoly();
    std::vector<Rat> c(static_cast<size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) {
        Rat b = binom_rat(alpha + Rat(n), n - i);
        c[static_cast<size_t>(i)] = b / factorial(i) * (i % 2 == 0 ? Rat(1) : Rat(-1));
    }
    return XPoly(std::move(c));
}

DiffOp laguerre_operator(const Rat& alpha) {
    DiffOp b = DiffOp::from_term(2, -XPoly::variable());
    b += DiffOp::from_term(1, XPoly(std::vector<Rat>{-(alpha + Rat(1)), Rat(1)}));
    return b;
}

NPoly laguerre_deriv_at_zero(long alpha, long j) {
    if (alpha < 0 || j < 0)
        throw std::invalid_argument("laguerre_deriv_at_zero: negative argument");
    NPoly p = binom_poly<NVar>(alpha, alpha + j);
    if (j % 2 != 0) p = -p;
    return p;
}

Rat gamma_moment(long alpha_eff, long m) {
    if (alpha_eff < 0 || m < 0) throw std::invalid_argument("gamma_moment: negative argument");
    return factorial(m + alpha_eff);
}

Rat gamma_integral(const XPoly& f, long alpha_eff) {
    Rat acc(0);
    for (int m = 0; m <= f.degree() && !f.is_zero(); ++m)
        acc += f.coeff(m) * gamma_moment(alpha_eff, m);
    return acc;
}

Certificate laguerre_recurrence_check(const Rat& alpha, long n_max) {
    Certificate cert;
    cert.claim = "three-term recurrence of Laguerre polynomials";
    cert.range = "n=0.." + std::to_string(n_max);
    for (long n = 0; n <= n_max; ++n) {
        XPoly lhs = laguerre_poly(alpha, n + 1) * Rat(-(n + 1)) +
                    laguerre_poly(alpha, n) * (Rat(2 * n + 1) + alpha) -
                    laguerre_poly(alpha, n - 1) * (Rat(n) + alpha);
        XPoly rhs = XPoly::variable() * laguerre_poly(alpha, n);
        cert.record("n=" + std::to_string(n), lhs == rhs);
    }
    return cert;
}

Certificate laguerre_diffeq_check(const Rat& alpha, long n_max) {
    Certificate cert;
    cert.claim = "second-order differential equation B L_n = n L_n";
    cert.range = "n=0.." + std::to_string(n_max);
    DiffOp b = laguerre_operator(alpha);
    for (long n = 0; n <= n_max; ++n) {
        XPoly ln = laguerre_poly(alpha, n);
        cert.record("n=" + std::to_string(n), b.apply(ln) == ln * Rat(n));
    }
    return cert;
}

Certificate laguerre_derivative_relation_check(const Rat& alpha, long n_max) {
    Certificate cert;
    cert.claim = "derivative relation d/dx[L_n - L_{n-1}] = -L_{n-1}";
    cert.range = "n=0.." + std::to_string(n_max);
    for (long n = 0; n <= n_max; ++n) {
        XPoly prev = laguerre_poly(alpha, n - 1);
        XPoly lhs = (laguerre_poly(alpha, n) - prev).derivative();
        cert.record("n=" + std::to_string(n), lhs == -prev);
    }
    return cert;
}

Certificate laguerre_norm_check(long alpha, long n_max) {
    Certificate cert;
    cert.claim = "squared norm of L_n equals (alpha+n)!/n!";
    cert.range = "n=0.." + std::to_string(n_max);
    for (long n = 0; n <= n_max; ++n) {
        XPoly ln = laguerre_poly(Rat(alpha), n);
        Rat norm = gamma_integral(ln * ln, alpha);
        Rat expected = factorial(alpha + n) / factorial(n);
        cert.record("n=" + std::to_string(n), norm == expected,
                    norm == expected ? "" : norm.to_string());
    }
    return cert;
}

}  // namespace krall
