#pragma once

#include <vector>

#include "krall/certificate.hpp"
#include "krall/matrix.hpp"
#include "krall/param_poly.hpp"
#include "krall/poly.hpp"

namespace krall {

/// Discrete Wronskian (Casorati determinant): functions as columns, shifts
/// n, n-1, ..., n-k+1 descending down the rows. Wr_n of the empty list is 1.
template <class R>
Poly<R, NVar> casorati(const std::vector<Poly<R, NVar>>& fs) {
    const int k = static_cast<int>(fs.size());
    Matrix<Poly<R, NVar>> m(k, k);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) m.at(r, c) = fs[static_cast<size_t>(c)].shifted(-r);
    return det(m);
}

/// Kernel basis for which polynomials in n span the Darboux data. The psis
/// are evaluated by polynomial extension at every integer, including
/// negatives; only the trailing Laguerre column of the full Casorati is
/// subject to the L_m = 0 (m < 0) truncation.
struct PsiSystem {
    long alpha = 0;
    std::vector<NPoly> psis;
    long k() const { return static_cast<long>(psis.size()); }
};

/// phi^{i,j}: the two seed families the kernel basis is built from.
/// i = 1: (-1)^j / (1-alpha)_j * binom(n+j, j), defined for j < alpha.
/// i = 2: (-1)^j / j!          * binom(n+alpha+j, alpha+j).
NPoly phi(long alpha, int i, long j);

/// psi^(j) = sum_{l=0..j} beta_{j-l} phi^{1,l} + phi^{2,j}.
NPoly psi_poly(long alpha, const std::vector<Rat>& beta, long j);

NPoly tau_of(const PsiSystem& sys);

/// The companion determinant with row pattern n, n-2, n-3, ..., n-k. For
/// k = 1 the pattern degenerates to the single row (n), i.e. rho = tau; the
/// diagonal recurrence entries validate this through recurrence_check. For
/// k = 0 rho is 0, making the k = 0 system an identity pass-through.
NPoly rho_of(const PsiSystem& sys);

/// A configured Darboux system: parameters plus the derived kernel basis and
/// determinants. k = 0 is accepted as the identity transformation.
struct SystemSpec {
    long alpha = 0;
    long k = 0;
    std::vector<Rat> beta;
    PsiSystem sys;
    NPoly tau;
    NPoly rho;
};

SystemSpec build_system(long alpha, long k, std::vector<Rat> beta);

struct Admissibility {
    bool admissible = false;
    long witness = 0;  // offending integer n >= -1 when not admissible
};

/// tau has no integer root >= -1. Decided exactly: direct evaluation on
/// n = -1 .. deg(tau)+1 plus the rational-root bound (every positive integer
/// root divides the constant coefficient of the integer-cleared polynomial).
Admissibility admissible(const NPoly& tau);
Admissibility admissible(const SystemSpec& spec);

/// Closed form (-1)^C(k,2) beta0^k / prod_{j=1}^{k-1} (alpha-j)^(k-j).
Rat tau_minus1_closed_form(long alpha, long k, const Rat& beta0);

struct JacobiRow {
    long n = 0;
    Rat a_hat, b_hat, c_hat;
};

/// Entries of the transformed tridiagonal matrix from the tau/rho
/// evaluations. Requires tau(n), tau(n-1) nonzero (admissible parameters).
JacobiRow hat_jacobi_row(const SystemSpec& spec, long n);

/// Signed cofactors q_{n,n-r}, r = 0..k, of the (k+1)-column Casorati: the
/// transformed polynomial is sum_r q_{n,n-r} f(n-r) for a trailing column f.
std::vector<Rat> casorati_cofactors(const PsiSystem& sys, long n);

/// Generalized polynomial: Casorati of the kernel basis with the Laguerre
/// column appended, rows with negative Laguerre index truncated to zero.
XPoly hat_laguerre(const PsiSystem& sys, long n);

/// d^j/dx^j of the generalized polynomial at x = 0, as a polynomial in n:
/// the kernel Casorati with trailing column (-1)^j binom(n+alpha, alpha+j).
NPoly hat_deriv_at_zero(const PsiSystem& sys, long j);

/// c_n hatL_{n-1} + b_n hatL_n + a_n hatL_{n+1} = x hatL_n for n = 0..N
/// (row 0 omits the subdiagonal term).
Certificate recurrence_check(const SystemSpec& spec, long n_max);

/// Sample-level intertwining: the transformed matrix applied to hatL agrees
/// with the Casorati applied to the columnwise image of L under the
/// classical Jacobi matrix.
Certificate intertwining_check(const SystemSpec& spec, long n_max);

/// Krall moment functional: (1/alpha_eff!) gamma integral plus point terms
/// u_j f^(j)(0), with M(1) = 1 + u_0 under this normalization.
struct MomentFunctional {
    long alpha_eff = 0;
    std::vector<Rat> u;
    Rat apply(const XPoly& f) const;
};

/// Closed forms: k = 1: u0 = 1/beta0; k = 2: u0 = -(alpha-1)(beta0+beta1)/
/// beta0^2, u1 = (alpha-1)/beta0. Errors for k > 2.
MomentFunctional u_from_beta_closed(const SystemSpec& spec);

/// General k: solves the exact k x k system M(hatL_n hatL_0) = 0, n = 1..k.
/// Errors if the system is singular ("u-parameters not determined").
MomentFunctional u_from_beta(const SystemSpec& spec);

/// M(hatL_n hatL_m) = 0 for all 0 <= m < n <= N and M(hatL_n^2) != 0.
Certificate orthogonality_check(const SystemSpec& spec, const MomentFunctional& mf, long n_max);

/// Symbolic kernel basis and determinants with the parameters b0..b_{k-1}
/// kept as variables (k <= 4).
Poly<ParamPoly, NVar> psi_symbolic(long alpha, long k, long j);
Poly<ParamPoly, NVar> tau_symbolic(long alpha, long k);
Poly<ParamPoly, NVar> hat_deriv_at_zero_symbolic(long alpha, long k, long j);

/// Specialize the symbolic parameters to concrete rationals.
NPoly specialize(const Poly<ParamPoly, NVar>& p, const std::vector<Rat>& beta);

}  // namespace krall
