#include "krall/darboux.hpp"

#include <stdexcept>

#include "krall/laguerre.hpp"
#include "krall/linsolve.hpp"
#include "krall/serialize.hpp"

namespace krall {

NPoly phi(long alpha, int i, long j) {
    if (j < 0) throw std::invalid_argument("phi: negative j");
    if (i == 1) {
        if (j >= alpha) throw std::invalid_argument("phi undefined: j >= alpha");
        Rat c = pochhammer_rat(Rat(1 - alpha), j);
        NPoly p = binom_poly<NVar>(j, j);
        p *= Rat(j % 2 == 0 ? 1 : -1) / c;
        return p;
    }
    if (i == 2) {
        NPoly p = binom_poly<NVar>(alpha + j, alpha + j);
        p *= Rat(j % 2 == 0 ? 1 : -1) / factorial(j);
        return p;
    }
    throw std::invalid_argument("phi: family index must be 1 or 2");
}

NPoly psi_poly(long alpha, const std::vector<Rat>& beta, long j) {
    if (j < 0 || static_cast<size_t>(j) >= beta.size())
        throw std::invalid_argument("psi: j out of range");
    NPoly p = phi(alpha, 2, j);
    for (long l = 0; l <= j; ++l)
        p += phi(alpha, 1, l) * beta[static_cast<size_t>(j - l)];
    return p;
}

NPoly tau_of(const PsiSystem& sys) { return casorati(sys.psis); }

NPoly rho_of(const PsiSystem& sys) {
    const long k = sys.k();
    if (k == 0) return NPoly();
    Matrix<NPoly> m(static_cast<int>(k), static_cast<int>(k));
    for (long r = 0; r < k; ++r) {
        long shift = r == 0 ? 0 : -(r + 1);
        for (long c = 0; c < k; ++c)
            m.at(static_cast<int>(r), static_cast<int>(c)) =
                sys.psis[static_cast<size_t>(c)].shifted(shift);
    }
    return det(m);
}

SystemSpec build_system(long alpha, long k, std::vector<Rat> beta) {
    if (alpha < 1) throw std::invalid_argument("build_system: alpha must be a positive integer");
    if (k < 0 || k > alpha) throw std::invalid_argument("build_system: need 0 <= k <= alpha");
    if (static_cast<long>(beta.size()) != k)
        throw std::invalid_argument("build_system: need exactly k beta parameters");
    SystemSpec spec;
    spec.alpha = alpha;
    spec.k = k;
    spec.beta = std::move(beta);
    spec.sys.alpha = alpha;
    for (long j = 0; j < k; ++j) spec.sys.psis.push_back(psi_poly(alpha, spec.beta, j));
    spec.tau = tau_of(spec.sys);
    spec.rho = rho_of(spec.sys);
    return spec;
}

Admissibility admissible(const NPoly& tau) {
    if (tau.is_zero()) return {false, -1};

    auto is_root = [&](const mpz_class& n) { return tau.eval(Rat(n)).is_zero(); };

    // direct scan over the small window first
    for (long n = -1; n <= tau.degree() + 1; ++n)
        if (is_root(mpz_class(n))) return {false, n};
    if (tau.degree() == 0) return {true, 0};

    // clear denominators, strip powers of n (root 0 already scanned)
    mpz_class lcm(1);
    for (const auto& c : tau.coeffs()) {
        mpz_class d = c.denominator(), g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
        lcm = lcm / g * d;
    }
    NPoly t = tau * Rat(lcm);
    int low = 0;
    while (t.coeff(low).is_zero()) ++low;
    mpz_class c0 = t.coeff(low).numerator();
    if (c0 < 0) c0 = -c0;

    // every positive integer root divides c0
    bool found = false;
    mpz_class best;
    auto consider = [&](const mpz_class& cand) {
        if (is_root(cand) && (!found || cand < best)) {
            found = true;
            best = cand;
        }
    };
    for (mpz_class f(1); f * f <= c0; ++f) {
        if (c0 % f != 0) continue;
        consider(f);
        consider(c0 / f);
    }
    if (found) {
        if (!best.fits_slong_p())
            throw std::domain_error("admissible: integer root exceeds witness range");
        return {false, best.get_si()};
    }
    return {true, 0};
}

Admissibility admissible(const SystemSpec& spec) { return admissible(spec.tau); }

Rat tau_minus1_closed_form(long alpha, long k, const Rat& beta0) {
    Rat denom(1);
    for (long j = 1; j <= k - 1; ++j) denom *= pow_rat(Rat(alpha - j), k - j);
    Rat sign = (k * (k - 1) / 2) % 2 == 0 ? Rat(1) : Rat(-1);
    return sign * pow_rat(beta0, k) / denom;
}

JacobiRow hat_jacobi_row(const SystemSpec& spec, long n) {
    if (n < 0) throw std::invalid_argument("hat_jacobi_row: n must be >= 0");
    Rat t_n = eval_at_long(spec.tau, n);
    Rat t_nm1 = eval_at_long(spec.tau, n - 1);
    if (t_n.is_zero() || t_nm1.is_zero())
        throw std::domain_error("hat_jacobi_row: tau vanishes, parameters not admissible");
    Rat r_n = eval_at_long(spec.rho, n);
    Rat r_np1 = eval_at_long(spec.rho, n + 1);
    JacobiRow row;
    row.n = n;
    row.a_hat = -t_nm1 / t_n * Rat(n + 1);
    row.b_hat = Rat(2 * n + spec.alpha + 1) - r_np1 / t_n * Rat(n + 1) + r_n / t_nm1 * Rat(n);
    row.c_hat = -t_n / t_nm1 * Rat(n + spec.alpha - spec.k);
    return row;
}

std::vector<Rat> casorati_cofactors(const PsiSystem& sys, long n) {
    const long k = sys.k();
    std::vector<Rat> out(static_cast<size_t>(k) + 1);
    for (long omit = 0; omit <= k; ++omit) {
        Matrix<Rat> m(static_cast<int>(k), static_cast<int>(k));
        int mr = 0;
        for (long r = 0; r <= k; ++r) {
            if (r == omit) continue;
            for (long c = 0; c < k; ++c)
                m.at(mr, static_cast<int>(c)) =
                    eval_at_long(sys.psis[static_cast<size_t>(c)], n - r);
            ++mr;
        }
        Rat minor = det(m);
        out[static_cast<size_t>(omit)] = (omit + k) % 2 == 0 ? minor : -minor;
    }
    return out;
}

XPoly hat_laguerre(const PsiSystem& sys, long n) {
    auto cof = casorati_cofactors(sys, n);
    XPoly acc;
    for (long r = 0; r <= sys.k(); ++r) {
        if (n - r < 0) continue;  // truncation applies to the Laguerre column only
        acc += cof[static_cast<size_t>(r)] * laguerre_poly(Rat(sys.alpha), n - r);
    }
    return acc;
}

NPoly hat_deriv_at_zero(const PsiSystem& sys, long j) {
    std::vector<NPoly> cols = sys.psis;
    cols.push_back(laguerre_deriv_at_zero(sys.alpha, j));
    return casorati(cols);
}

Certificate recurrence_check(const SystemSpec& spec, long n_max) {
    Certificate cert;
    cert.claim = "transformed three-term recurrence J^ hatL = x hatL";
    cert.range = "n=0.." + std::to_string(n_max);
    std::vector<XPoly> hatl(static_cast<size_t>(n_max) + 2);
    for (long n = 0; n <= n_max + 1; ++n) hatl[static_cast<size_t>(n)] = hat_laguerre(spec.sys, n);
    for (long n = 0; n <= n_max; ++n) {
        JacobiRow row = hat_jacobi_row(spec, n);
        XPoly lhs = row.b_hat * hatl[static_cast<size_t>(n)] +
                    row.a_hat * hatl[static_cast<size_t>(n) + 1];
        if (n > 0) lhs += row.c_hat * hatl[static_cast<size_t>(n) - 1];
        XPoly rhs = XPoly::variable() * hatl[static_cast<size_t>(n)];
        bool ok = lhs == rhs;
        cert.record("n=" + std::to_string(n), ok,
                    ok ? "" : "mismatch " + poly_to_text(lhs - rhs));
    }
    return cert;
}

Certificate intertwining_check(const SystemSpec& spec, long n_max) {
    Certificate cert;
    cert.claim = "intertwining J^ Q = Q J at sample level";
    cert.range = "n=0.." + std::to_string(n_max);
    const Rat alpha(spec.alpha);
    // columnwise image of L under the classical Jacobi matrix, truncated
    auto jl = [&](long m) -> XPoly {
        if (m < 0) return XPoly();
        XPoly acc = laguerre_poly(alpha, m + 1) * Rat(-(m + 1)) +
                    laguerre_poly(alpha, m) * (Rat(2 * m + 1) + alpha);
        if (m > 0) acc += laguerre_poly(alpha, m - 1) * -(Rat(m) + alpha);
        return acc;
    };
    for (long n = 0; n <= n_max; ++n) {
        auto cof = casorati_cofactors(spec.sys, n);
        XPoly lhs;
        for (long r = 0; r <= spec.k; ++r) lhs += cof[static_cast<size_t>(r)] * jl(n - r);
        JacobiRow row = hat_jacobi_row(spec, n);
        XPoly rhs = row.b_hat * hat_laguerre(spec.sys, n) +
                    row.a_hat * hat_laguerre(spec.sys, n + 1);
        if (n > 0) rhs += row.c_hat * hat_laguerre(spec.sys, n - 1);
        cert.record("n=" + std::to_string(n), lhs == rhs);
    }
    return cert;
}

Rat MomentFunctional::apply(const XPoly& f) const {
    Rat acc = gamma_integral(f, alpha_eff) / factorial(alpha_eff);
    for (size_t j = 0; j < u.size(); ++j)
        acc += u[j] * factorial(static_cast<long>(j)) * f.coeff(static_cast<int>(j));
    return acc;
}

MomentFunctional u_from_beta_closed(const SystemSpec& spec) {
    MomentFunctional mf;
    mf.alpha_eff = spec.alpha - spec.k;
    if (mf.alpha_eff < 0) throw std::invalid_argument("u_from_beta: alpha - k must be >= 0");
    if (spec.k == 0) return mf;
    const Rat& b0 = spec.beta[0];
    if (b0.is_zero()) throw std::domain_error("u_from_beta: beta0 = 0 is not admissible");
    if (spec.k == 1) {
        mf.u = {Rat(1) / b0};
        return mf;
    }
    if (spec.k == 2) {
        Rat am1(spec.alpha - 1);
        mf.u = {-am1 * (b0 + spec.beta[1]) / (b0 * b0), am1 / b0};
        return mf;
    }
    throw std::invalid_argument("u_from_beta_closed: closed forms exist for k <= 2 only");
}

namespace {

// exact k x k solve of M(hatL_n hatL_0) = 0, n = 1..k
MomentFunctional u_solve(const SystemSpec& spec);

}  // namespace

MomentFunctional u_from_beta(const SystemSpec& spec) {
    if (spec.alpha - spec.k < 0)
        throw std::invalid_argument("u_from_beta: alpha - k must be >= 0");
    if (spec.k > 0 && spec.k <= 2) {
        MomentFunctional closed = u_from_beta_closed(spec);
        if (u_solve(spec).u != closed.u)
            throw std::domain_error("u_from_beta: closed form and linear solve disagree");
        return closed;
    }
    return u_solve(spec);
}

namespace {

MomentFunctional u_solve(const SystemSpec& spec) {
    MomentFunctional mf;
    mf.alpha_eff = spec.alpha - spec.k;
    const long k = spec.k;
    if (k == 0) return mf;

    XPoly hat0 = hat_laguerre(spec.sys, 0);
    LinSystem sysm{Matrix<Rat>(static_cast<int>(k), static_cast<int>(k)),
                   std::vector<Rat>(static_cast<size_t>(k))};
    for (long n = 1; n <= k; ++n) {
        XPoly prod = hat_laguerre(spec.sys, n) * hat0;
        for (long j = 0; j < k; ++j)
            sysm.a.at(static_cast<int>(n - 1), static_cast<int>(j)) =
                factorial(j) * prod.coeff(static_cast<int>(j));
        sysm.rhs[static_cast<size_t>(n - 1)] =
            -gamma_integral(prod, mf.alpha_eff) / factorial(mf.alpha_eff);
    }
    auto sol = linsolve(sysm);
    if (sol.kind != SolveKind::Unique)
        throw std::domain_error("u-parameters not determined");
    mf.u = sol.particular;
    return mf;
}

}  // namespace

Certificate orthogonality_check(const SystemSpec& spec, const MomentFunctional& mf, long n_max) {
    Certificate cert;
    cert.claim = "moment functional orthogonality of hatL";
    cert.range = "0<=m<n<=" + std::to_string(n_max);
    std::vector<XPoly> hatl(static_cast<size_t>(n_max) + 1);
    for (long n = 0; n <= n_max; ++n) hatl[static_cast<size_t>(n)] = hat_laguerre(spec.sys, n);
    for (long n = 0; n <= n_max; ++n) {
        for (long m = 0; m < n; ++m) {
            Rat v = mf.apply(hatl[static_cast<size_t>(n)] * hatl[static_cast<size_t>(m)]);
            cert.record("n=" + std::to_string(n) + ",m=" + std::to_string(m), v.is_zero(),
                        v.is_zero() ? "" : v.to_string());
        }
        Rat norm = mf.apply(hatl[static_cast<size_t>(n)] * hatl[static_cast<size_t>(n)]);
        cert.record("norm n=" + std::to_string(n), !norm.is_zero());
    }
    return cert;
}

namespace {

Poly<ParamPoly, NVar> lift(const NPoly& p) {
    std::vector<ParamPoly> c;
    c.reserve(p.coeffs().size());
    for (const auto& r : p.coeffs()) c.emplace_back(r);
    return Poly<ParamPoly, NVar>(std::move(c));
}

}  // namespace

Poly<ParamPoly, NVar> psi_symbolic(long alpha, long k, long j) {
    if (k < 1 || k > ParamPoly::kMaxVars)
        throw std::invalid_argument("psi_symbolic: k out of symbolic range");
    if (j < 0 || j >= k) throw std::invalid_argument("psi_symbolic: j out of range");
    Poly<ParamPoly, NVar> p = lift(phi(alpha, 2, j));
    for (long l = 0; l <= j; ++l)
        p += lift(phi(alpha, 1, l)) * ParamPoly::variable(static_cast<int>(j - l));
    return p;
}

Poly<ParamPoly, NVar> tau_symbolic(long alpha, long k) {
    std::vector<Poly<ParamPoly, NVar>> psis;
    for (long j = 0; j < k; ++j) psis.push_back(psi_symbolic(alpha, k, j));
    return casorati(psis);
}

Poly<ParamPoly, NVar> hat_deriv_at_zero_symbolic(long alpha, long k, long j) {
    std::vector<Poly<ParamPoly, NVar>> cols;
    for (long l = 0; l < k; ++l) cols.push_back(psi_symbolic(alpha, k, l));
    cols.push_back(lift(laguerre_deriv_at_zero(alpha, j)));
    return casorati(cols);
}

NPoly specialize(const Poly<ParamPoly, NVar>& p, const std::vector<Rat>& beta) {
    std::vector<Rat> c;
    c.reserve(p.coeffs().size());
    for (const auto& pc : p.coeffs()) c.push_back(pc.eval(beta));
    return NPoly(std::move(c));
}

}  // namespace krall
