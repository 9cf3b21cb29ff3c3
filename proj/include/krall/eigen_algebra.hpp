#pragma once

#include <optional>
#include <string>
#include <vector>

#include "krall/certificate.hpp"
#include "krall/darboux.hpp"
#include "krall/diffop.hpp"
#include "krall/poly.hpp"

namespace krall {

/// Element of the eigenvalue algebra: h together with the certified quotient
/// g(n) = (h(n) - h(n-1)) / tau(n-1).
struct EigenPoly {
    NPoly h;
    NPoly g;
};

struct Membership {
    bool member = false;
    EigenPoly ep;     // valid when member
    NPoly remainder;  // nonzero remainder when not a member
};

/// Exact divisibility test of h(n) - h(n-1) by tau(n-1).
Membership algebra_membership(const NPoly& h, const NPoly& tau);

/// One eigenpolynomial per degree deg(tau)+1 .. max_deg built by discrete
/// integration of g(s) tau(s-1) with g a monomial and h(0) = 0, preceded by
/// the constant 1.
std::vector<EigenPoly> algebra_basis(const NPoly& tau, long max_deg);

/// The alpha+1 explicit generators for one Darboux step:
/// h^(j) = beta0 binom(n+alpha+j, j+1) + binom(alpha+j, alpha) binom(n+alpha+j, alpha+j+1),
/// with quotient g^(j) = binom(n+alpha+j-1, j), j = 0..alpha.
std::vector<EigenPoly> k1_generators(long alpha, const Rat& beta0);

/// Discrete analog of the Reach lemma: fs holds f^(0)..f^(k+1); base_points
/// holds n_1..n_{k+1}. Verifies the Casorati/discrete-integral identity as an
/// exact polynomial identity, plus base-point independence of the right-hand
/// side integral up to an additive constant.
Certificate reach_identity_check(const std::vector<NPoly>& fs,
                                 const std::vector<long>& base_points,
                                 const std::vector<long>& alt_base_points);

/// [r1(B)(1 - D) - r2(B+1) D] r0(B) for the classical operator B.
DiffOp lemma44_operator(const NPoly& r0, const NPoly& r1, const NPoly& r2, long alpha);

/// r0(n) sum_{s=0..n} [r1(s) L_s + r2(s) L_{s-1}] equals the assembled
/// operator applied to L_n, n = 0..N.
Certificate lemma44_check(const NPoly& r0, const NPoly& r1, const NPoly& r2, long alpha,
                          long n_max);

enum class OperatorConstruction { ClosedFormK1, Lemma44Assembly, LinearSolve };

struct EigenOperator {
    DiffOp op;
    EigenPoly h;
    OperatorConstruction construction = OperatorConstruction::LinearSolve;
    int annihilator_dim = 0;  // dimension of the solution family (0 = unique)
    long verified_n = 0;      // eigen relation checked exactly for n = 0..verified_n
};

/// One Darboux step closed form: B^ = g(B+1)(D - 1) tau(B) + h(B+1).
EigenOperator bhat_closed_form_k1(const EigenPoly& ep, const SystemSpec& spec);

/// Exact reconstruction of an operator of order <= order_cap with
/// deg b_j <= j satisfying B^ hatL_n = h(n) hatL_n. The trailing coefficient
/// equations are imposed incrementally and the result is verified on
/// n = 0 .. (order_cap+1)(order_cap+2)/2 + deg tau + 5 + n_extra.
/// Returns nullopt when no such operator exists at this order.
std::optional<EigenOperator> bhat_linear_solve(const NPoly& h, const PsiSystem& sys,
                                               int order_cap = -1, long n_extra = 15);

/// B^ hatL_n = h(n) hatL_n exactly for n = 0..N; the certificate records the
/// x-coefficient degree bound in n used for the soundness note.
Certificate eigen_verify(const DiffOp& op, const NPoly& h, const PsiSystem& sys, long n_max);

/// Pairwise commutators vanish in normal form.
Certificate commutativity_check(const std::vector<DiffOp>& ops);

}  // namespace krall
