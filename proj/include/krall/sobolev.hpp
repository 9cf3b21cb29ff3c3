#pragma once

#include <array>

#include "krall/certificate.hpp"
#include "krall/darboux.hpp"

namespace krall {

/// Kernel basis for the Sobolev-type construction. The regular form carries
/// (beta0, beta1, l0, l1); when l0 = 0 and l1 = beta0 it reduces to the
/// two-step Darboux system. The singular form covers A = diag(0, v0).
struct SobolevSpec {
    long alpha = 0;
    Rat beta0, beta1, l0, l1;
    bool singular = false;
    Rat v0;  // meaningful in the singular form
    PsiSystem sys;
    NPoly tau;
};

SobolevSpec make_sobolev_spec(long alpha, const Rat& beta0, const Rat& beta1, const Rat& l0,
                              const Rat& l1);
SobolevSpec make_sobolev_singular(long alpha, const Rat& v0);

/// <F, G> = (1/(alpha-2)!) integral of F G x^(alpha-2) e^-x plus the
/// boundary form [F(0), F'(0)] A [G(0), G'(0)]^T with A = [[u0,u1],[u1,v0]].
struct SobolevInnerProduct {
    long alpha = 0;
    Rat u0, u1, v0;
    Rat apply(const XPoly& f, const XPoly& g) const;
};

/// Parameter map from the boundary matrix A. det(A) != 0 uses the rational
/// closed forms; A = diag(0, v0) uses the singular basis. Any other singular
/// A errors ("no basis rule given").
SobolevSpec params_from_A(long alpha, const Rat& u0, const Rat& u1, const Rat& v0);

XPoly sobolev_hat(const SobolevSpec& spec, long n);

/// Mutual orthogonality under the inner product, nonvanishing norms, the
/// four seed conditions <hatL_n, 1> = 0 (n = 1, 2), <hatL_n, x> = 0
/// (n = 2, 3), and for v0 != 0 the non-functional witness <x,x> != <x^2,1>.
Certificate sobolev_orthogonality_check(const SobolevSpec& spec, const SobolevInnerProduct& ip,
                                        long n_max);

/// Banded factorization data: q rows from the Casorati cofactors, p rows
/// solved exactly from [J]^2 = PQ, and the pentadiagonal product QP.
struct PentaFactorization {
    // q[n] = {q_{n,n-2}, q_{n,n-1}, q_{n,n}}; p[n] = {p_{n,n}, p_{n,n+1}, p_{n,n+2}}
    std::vector<std::array<Rat, 3>> q, p;
    // jhat[n][o+2] = (QP)_{n,n+o} for offsets o = -2..2
    std::vector<std::array<Rat, 5>> jhat;
};

PentaFactorization compute_penta_factorization(const SobolevSpec& spec, long n_max);

/// (a) [J]^2 = PQ on the full band, (b) P hatL_n = x^2 L_n, (c) p_{n,n+2}
/// nonzero, for n = 0..N. A vanishing leading q entry fails the certificate
/// with the offending row as witness.
Certificate pentadiagonal_factorization_check(const SobolevSpec& spec, long n_max);

}  // namespace krall
