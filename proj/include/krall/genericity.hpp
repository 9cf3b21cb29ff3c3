#pragma once

#include <vector>

#include "krall/certificate.hpp"
#include "krall/darboux.hpp"
#include "krall/param_poly.hpp"
#include "krall/poly.hpp"
#include "krall/rng.hpp"

namespace krall {

/// Resultant of tau(n) and hatL_n(0); nonzero exactly at generic parameters.
Rat resultant_criterion(const SystemSpec& spec);

/// Same resultant with the parameters kept symbolic (k <= 2).
ParamPoly resultant_criterion_symbolic(long alpha, long k);

/// Closed form for one Darboux step: (-1)^alpha b0^(2 alpha - 1) / ((alpha-1)!)^alpha.
ParamPoly k1_resultant_closed_form(long alpha);

/// Closed form for two Darboux steps (alpha >= 2): the beta0^(5 alpha - 5)
/// prefactor times the bracket polynomial of degree alpha + 1.
ParamPoly k2_resultant_closed_form(long alpha);

/// Left side of the two-step genericity equation
/// (2 alpha)^alpha alpha! b0^(alpha+1) + prod_j [(alpha^2-alpha-2 alpha j) b0 - (alpha^2-1) b1];
/// zero exactly at non-generic parameters.
Rat k2_genericity_equation(long alpha, const Rat& beta0, const Rat& beta1);

struct GenericityReport {
    Rat resultant_value;
    bool generic = false;
    bool closed_form_checked = false;
    bool closed_form_match = false;
};

GenericityReport genericity_report(const SystemSpec& spec);

/// Symbolic (k=1) and symbolic-plus-sampled (k=2) comparison of the computed
/// resultant against the closed forms; the Sylvester convention constant is
/// recorded and must be the same across the alpha range.
Certificate consistency_vs_closed_form(long k, long alpha_min, long alpha_max, Rng& rng,
                                       int samples_per_alpha = 25);

/// Randomized exact instances of the Desnanot-Jacobi Casorati identity.
Certificate desnanot_jacobi_check(Rng& rng, int trials, int m_max = 3);

/// Randomized exact instances of the resultant shift identity for nested
/// Casorati determinants, including the product formula at m = 1.
Certificate resultant_shift_check(Rng& rng, int trials, int m_max = 3);

struct ProbeDegree {
    long degree = 0;
    bool probed = true;           // false when the candidate space exceeds the cap
    long dim_found = 0;           // eigenpolynomials of degree <= d (incl. constants)
    long dim_algebra = 0;         // dimension of A restricted to degree <= d
    bool extra_found = false;     // members outside A at this degree
    NPoly extra_h;
    bool extra_verified = false;  // extra member independently re-solved and verified
    int operator_order = 0;
};

struct ProbeReport {
    NPoly divisibility_filter;  // tau(n-1) / gcd(tau(n-1), hatL_{n-1}(0) hatL_n(0))
    std::vector<ProbeDegree> degrees;
    long minimal_nonconstant_degree = -1;  // smallest degree with dim_found > 1
};

/// Degree-by-degree search for eigenvalue polynomials beyond the explicit
/// algebra: candidates are filtered by the necessary divisibility condition,
/// the joint (operator, h) system is solved exactly at order 2d, and any
/// member outside A is re-derived and verified independently. Findings are
/// evidence within the verified range, not a completeness proof.
ProbeReport abar_probe(const PsiSystem& sys, long max_deg = -1, long dim_cap = 8);

}  // namespace krall
