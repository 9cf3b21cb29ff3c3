#include "krall/eigen_algebra.hpp"

#include <stdexcept>

#include "krall/laguerre.hpp"
#include "krall/linsolve.hpp"
#include "krall/serialize.hpp"

namespace krall {

Membership algebra_membership(const NPoly& h, const NPoly& tau) {
    Membership out;
    NPoly delta = h - h.shifted(-1);
    auto dm = divmod(delta, tau.shifted(-1));
    if (dm.remainder.is_zero()) {
        out.member = true;
        out.ep = {h, dm.quotient};
    } else {
        out.remainder = dm.remainder;
    }
    return out;
}

std::vector<EigenPoly> algebra_basis(const NPoly& tau, long max_deg) {
    if (tau.is_zero()) throw std::invalid_argument("algebra_basis: zero tau");
    const long dt = tau.degree();
    if (max_deg <= dt) throw std::invalid_argument("algebra_basis: max_deg must exceed deg(tau)");
    std::vector<EigenPoly> out;
    out.push_back({NPoly(1), NPoly()});
    for (long d = dt + 1; d <= max_deg; ++d) {
        NPoly g = NPoly::monomial(static_cast<int>(d - dt - 1), Rat(1));
        NPoly h = antidifference(g * tau.shifted(-1));
        out.push_back({h, g});
    }
    return out;
}

std::vector<EigenPoly> k1_generators(long alpha, const Rat& beta0) {
    std::vector<EigenPoly> out;
    for (long j = 0; j <= alpha; ++j) {
        NPoly h = binom_poly<NVar>(alpha + j, j + 1) * beta0 +
                  binom_poly<NVar>(alpha + j, alpha + j + 1) * binom_rat(Rat(alpha + j), j);
        NPoly g = binom_poly<NVar>(alpha + j - 1, j);
        out.push_back({h, g});
    }
    return out;
}

namespace {

NPoly reach_F(const std::vector<NPoly>& fs, const std::vector<long>& base_points) {
    const long k = static_cast<long>(fs.size()) - 2;
    NPoly f_sum;
    for (long j = 1; j <= k + 1; ++j) {
        std::vector<NPoly> others;
        for (long i = 1; i <= k + 1; ++i)
            if (i != j) others.push_back(fs[static_cast<size_t>(i)]);
        NPoly integrand = fs[0] * casorati(others);
        NPoly anti = antidifference(integrand);
        NPoly integral = anti - NPoly(eval_at_long(anti, base_points[static_cast<size_t>(j - 1)]));
        NPoly term = fs[static_cast<size_t>(j)] * integral;
        if ((k + 1 + j) % 2 != 0) term = -term;
        f_sum += term;
    }
    return f_sum;
}

// right-hand side of the Reach identity for a given last base point
NPoly reach_rhs(const std::vector<NPoly>& fs, long last_base) {
    const long k = static_cast<long>(fs.size()) - 2;
    std::vector<NPoly> first_k(fs.begin() + 1, fs.begin() + 1 + k);
    std::vector<NPoly> first_k1(fs.begin() + 1, fs.begin() + 2 + k);
    NPoly anti = antidifference(fs[0] * casorati(first_k));
    NPoly factor = anti.shifted(-1) - NPoly(eval_at_long(anti, last_base));
    return factor * casorati(first_k1);
}

}  // namespace

Certificate reach_identity_check(const std::vector<NPoly>& fs,
                                 const std::vector<long>& base_points,
                                 const std::vector<long>& alt_base_points) {
    if (fs.size() < 2) throw std::invalid_argument("reach_identity_check: need k+2 functions");
    const long k = static_cast<long>(fs.size()) - 2;
    if (base_points.size() != static_cast<size_t>(k + 1) ||
        alt_base_points.size() != static_cast<size_t>(k + 1))
        throw std::invalid_argument("reach_identity_check: need k+1 base points");

    Certificate cert;
    cert.claim = "discrete Reach identity, k=" + std::to_string(k);
    cert.range = "polynomial identity in n";

    std::vector<NPoly> first_k(fs.begin() + 1, fs.begin() + 1 + k);
    auto lhs_for = [&](const std::vector<long>& bp) {
        std::vector<NPoly> cols = first_k;
        cols.push_back(reach_F(fs, bp));
        return casorati(cols);
    };
    for (const auto& [bp, tag] :
         {std::pair{&base_points, "base"}, std::pair{&alt_base_points, "alt-base"}}) {
        cert.record(std::string(tag) + " points",
                    lhs_for(*bp) == reach_rhs(fs, (*bp)[static_cast<size_t>(k)]));
    }
    // the left side does not depend on the first k base points at all: mix
    // the alternate points with the original last one
    std::vector<long> mixed(alt_base_points.begin(), alt_base_points.end());
    mixed[static_cast<size_t>(k)] = base_points[static_cast<size_t>(k)];
    cert.record("independent of the first k base points", lhs_for(mixed) == lhs_for(base_points));
    return cert;
}

DiffOp lemma44_operator(const NPoly& r0, const NPoly& r1, const NPoly& r2, long alpha) {
    DiffOp b = laguerre_operator(Rat(alpha));
    DiffOp d = DiffOp::d1();
    DiffOp inner = op_substitute(r1, b) * (DiffOp::identity() - d) -
                   op_substitute(r2.shifted(1), b) * d;
    return inner * op_substitute(r0, b);
}

Certificate lemma44_check(const NPoly& r0, const NPoly& r1, const NPoly& r2, long alpha,
                          long n_max) {
    Certificate cert;
    cert.claim = "discrete-integral operator identity";
    cert.range = "n=0.." + std::to_string(n_max);
    DiffOp bbar = lemma44_operator(r0, r1, r2, alpha);
    XPoly running;  // sum_{s=0..n} [r1(s) L_s + r2(s) L_{s-1}]
    for (long n = 0; n <= n_max; ++n) {
        running += laguerre_poly(Rat(alpha), n) * eval_at_long(r1, n);
        running += laguerre_poly(Rat(alpha), n - 1) * eval_at_long(r2, n);
        XPoly lhs = running * eval_at_long(r0, n);
        cert.record("n=" + std::to_string(n), lhs == bbar.apply(laguerre_poly(Rat(alpha), n)));
    }
    return cert;
}

EigenOperator bhat_closed_form_k1(const EigenPoly& ep, const SystemSpec& spec) {
    if (spec.k != 1) throw std::invalid_argument("bhat_closed_form_k1: requires k = 1");
    DiffOp b = laguerre_operator(Rat(spec.alpha));
    DiffOp op = op_substitute(ep.g.shifted(1), b) * (DiffOp::d1() - DiffOp::identity()) *
                    op_substitute(spec.tau, b) +
                op_substitute(ep.h.shifted(1), b);
    EigenOperator out;
    out.op = op;
    out.h = ep;
    out.construction = OperatorConstruction::ClosedFormK1;
    return out;
}

namespace {

// unknown index for the coefficient of x^l in b_j
int unknown_index(int j, int l) { return j * (j + 1) / 2 + l; }

// rows imposing [x^t](B^ f - h(n) f) = 0 for all t, appended to `rows`/`rhs`
void append_equations(const XPoly& f, const Rat& hn, int order_cap,
                      std::vector<std::vector<Rat>>& rows, std::vector<Rat>& rhs) {
    const int unknowns = (order_cap + 1) * (order_cap + 2) / 2;
    std::vector<XPoly> derivs(static_cast<size_t>(order_cap) + 1);
    derivs[0] = f;
    for (int j = 1; j <= order_cap; ++j) derivs[static_cast<size_t>(j)] = derivs[static_cast<size_t>(j) - 1].derivative();
    const int top = f.is_zero() ? 0 : f.degree();
    for (int t = 0; t <= top; ++t) {
        std::vector<Rat> row(static_cast<size_t>(unknowns), Rat(0));
        for (int j = 0; j <= order_cap; ++j)
            for (int l = 0; l <= j && l <= t; ++l)
                row[static_cast<size_t>(unknown_index(j, l))] =
                    derivs[static_cast<size_t>(j)].coeff(t - l);
        rows.push_back(std::move(row));
        rhs.push_back(hn * f.coeff(t));
    }
}

DiffOp operator_from_solution(const std::vector<Rat>& sol, int order_cap) {
    DiffOp op;
    for (int j = 0; j <= order_cap; ++j) {
        std::vector<Rat> c(static_cast<size_t>(j) + 1);
        for (int l = 0; l <= j; ++l) c[static_cast<size_t>(l)] = sol[static_cast<size_t>(unknown_index(j, l))];
        op += DiffOp::from_term(j, XPoly(std::move(c)));
    }
    return op;
}

}  // namespace

std::optional<EigenOperator> bhat_linear_solve(const NPoly& h, const PsiSystem& sys,
                                               int order_cap, long n_extra) {
    if (order_cap < 0) order_cap = h.is_zero() ? 0 : 2 * h.degree();
    if (order_cap % 2 != 0)
        throw std::invalid_argument("bhat_linear_solve: order cap must be even");
    NPoly tau = tau_of(sys);
    const int unknowns = (order_cap + 1) * (order_cap + 2) / 2;
    const long n_build = unknowns + (tau.is_zero() ? 0 : tau.degree()) + 5;
    const long n_total = n_build + n_extra;

    std::vector<XPoly> hatl(static_cast<size_t>(n_total) + 1);
    for (long n = 0; n <= n_total; ++n) hatl[static_cast<size_t>(n)] = hat_laguerre(sys, n);

    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs;
    long fed = 0;  // equations added for n = 0..fed-1
    while (fed <= n_total && static_cast<int>(rows.size()) < unknowns + 8) {
        append_equations(hatl[static_cast<size_t>(fed)], h.eval(Rat(fed)), order_cap, rows, rhs);
        ++fed;
    }

    auto solve_current = [&]() -> LinearSolution {
        LinSystem sysm{Matrix<Rat>(static_cast<int>(rows.size()), unknowns), rhs};
        for (size_t i = 0; i < rows.size(); ++i)
            for (int j = 0; j < unknowns; ++j) sysm.a.at(static_cast<int>(i), j) = rows[i][static_cast<size_t>(j)];
        return linsolve(sysm);
    };

    for (int attempt = 0; attempt < 64; ++attempt) {
        LinearSolution sol = solve_current();
        if (sol.kind == SolveKind::Infeasible) return std::nullopt;
        DiffOp op = operator_from_solution(sol.particular, order_cap);
        long bad = -1;
        for (long n = 0; n <= n_total; ++n) {
            const XPoly& f = hatl[static_cast<size_t>(n)];
            if (op.apply(f) != f * h.eval(Rat(n))) {
                bad = n;
                break;
            }
        }
        if (bad < 0) {
            EigenOperator out;
            out.op = op;
            out.h.h = h;
            auto mem = algebra_membership(h, tau);
            if (mem.member) out.h.g = mem.ep.g;
            out.construction = OperatorConstruction::LinearSolve;
            out.annihilator_dim = static_cast<int>(sol.nullspace.size());
            out.verified_n = n_total;
            return out;
        }
        if (sol.kind == SolveKind::Unique) return std::nullopt;
        append_equations(hatl[static_cast<size_t>(bad)], h.eval(Rat(bad)), order_cap, rows, rhs);
    }
    return std::nullopt;
}

Certificate eigen_verify(const DiffOp& op, const NPoly& h, const PsiSystem& sys, long n_max) {
    Certificate cert;
    cert.claim = "eigenvalue equation B^ hatL_n = h(n) hatL_n";
    cert.range = "n=0.." + std::to_string(n_max);
    // n-degree bound of the x-coefficients of the residual: cofactor degrees
    // are bounded by the sum of the psi degrees, the Laguerre coefficient of
    // x^i has degree alpha + i, plus the operator order / deg h contribution.
    long mtau = 0;
    for (const auto& p : sys.psis)
        if (!p.is_zero()) mtau += p.degree();
    long bound = mtau + sys.alpha + std::max(op.is_zero() ? 0L : static_cast<long>(op.order()),
                                             h.is_zero() ? 0L : static_cast<long>(h.degree()));
    cert.notes = "x-coefficients are polynomials in n of degree <= " + std::to_string(bound) +
                 " + i; identities proven for all n at x^i, i <= " +
                 std::to_string(n_max - bound);
    for (long n = 0; n <= n_max; ++n) {
        XPoly f = hat_laguerre(sys, n);
        cert.record("n=" + std::to_string(n), op.apply(f) == f * h.eval(Rat(n)));
    }
    return cert;
}

Certificate commutativity_check(const std::vector<DiffOp>& ops) {
    Certificate cert;
    cert.claim = "pairwise commutators vanish in normal form";
    cert.range = std::to_string(ops.size()) + " operators";
    for (size_t i = 0; i < ops.size(); ++i)
        for (size_t j = i; j < ops.size(); ++j) {
            DiffOp c = ops[i] * ops[j] - ops[j] * ops[i];
            cert.record("[" + std::to_string(i) + "," + std::to_string(j) + "]", c.is_zero());
        }
    return cert;
}

}  // namespace krall
