#pragma once

#include "krall/certificate.hpp"
#include "krall/diffop.hpp"
#include "krall/poly.hpp"

namespace krall {

/// Classical Laguerre polynomial of degree n: the coefficient of x^i is
/// (-1)^i / i! * binom(n + alpha, n - i). Rational alpha > -1 is accepted
/// here; the Darboux machinery downstream requires integer alpha. Negative n
/// gives the zero polynomial.
XPoly laguerre_poly(const Rat& alpha, long n);

/// The second-order operator B = -x D^2 - (alpha + 1 - x) D annihilated onto
/// eigenvalue n: B L_n = n L_n. Decomposes in the two-generator operator
/// algebra as B = -D2 - (alpha + 1) D1.
DiffOp laguerre_operator(const Rat& alpha);

/// d^j/dx^j L_n at x = 0 as a polynomial in n of degree alpha + j:
/// (-1)^j * binom(n + alpha, alpha + j). Integer alpha >= 0.
NPoly laguerre_deriv_at_zero(long alpha, long j);

/// Moment of the gamma weight: integral of x^m x^alpha_eff e^-x over
/// [0, inf) = (m + alpha_eff)!. Errors on negative input.
Rat gamma_moment(long alpha_eff, long m);

/// sum_m f_m (m + alpha_eff)!: the gamma-weight integral of f, no prefactor.
Rat gamma_integral(const XPoly& f, long alpha_eff);

/// Three-term recurrence -(n+1) L_{n+1} + (2n+alpha+1) L_n - (n+alpha) L_{n-1}
/// = x L_n, verified exactly for n = 0..N.
Certificate laguerre_recurrence_check(const Rat& alpha, long n_max);

/// B L_n = n L_n for n = 0..N.
Certificate laguerre_diffeq_check(const Rat& alpha, long n_max);

/// d/dx [L_n - L_{n-1}] = -L_{n-1} for n = 0..N.
Certificate laguerre_derivative_relation_check(const Rat& alpha, long n_max);

/// Squared norms: gamma integral of L_n^2 x^alpha e^-x equals (alpha+n)!/n!.
Certificate laguerre_norm_check(long alpha, long n_max);

}  // namespace krall
