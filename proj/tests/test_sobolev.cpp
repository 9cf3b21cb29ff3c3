#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "krall/eigen_algebra.hpp"
#include "krall/genericity.hpp"
#include "krall/laguerre.hpp"
#include "krall/serialize.hpp"
#include "krall/sobolev.hpp"

using namespace krall;

TEST_CASE("kernel basis reduces to the two-step system") {
    // l0 = 0, l1 = beta0 reproduces the two-step psis
    for (long alpha = 2; alpha <= 4; ++alpha) {
        Rat b0(2), b1(1, 2);
        auto sob = make_sobolev_spec(alpha, b0, b1, Rat(0), b0);
        auto two = build_system(alpha, 2, {b0, b1});
        CHECK(sob.sys.psis == two.sys.psis);
        CHECK(sob.tau == two.tau);
        for (long n = 0; n <= 6; ++n)
            CHECK(sobolev_hat(sob, n) == hat_laguerre(two.sys, n));
    }
    CHECK_THROWS_AS(make_sobolev_spec(1, Rat(1), Rat(1), Rat(0), Rat(1)),
                    std::invalid_argument);
}

TEST_CASE("explicit three-by-three determinant oracle at n = 0") {
    auto spec = params_from_A(3, Rat(1), Rat(1), Rat(2));
    // rows carry shifts 0, -1, -2; the Laguerre column truncates below zero
    Matrix<XPoly> m(3, 3);
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 2; ++c)
            m.at(r, c) = XPoly(eval_at_long(spec.sys.psis[static_cast<size_t>(c)], -r));
        m.at(r, 2) = r == 0 ? laguerre_poly(Rat(3), 0) : XPoly();
    }
    CHECK(det(m) == sobolev_hat(spec, 0));
    // degree audit: the leading cofactor never vanishes, so deg hatL_n = n
    for (long n = 0; n <= 8; ++n) CHECK(sobolev_hat(spec, n).degree() == n);
}

TEST_CASE("singular basis") {
    auto spec = make_sobolev_singular(2, Rat(1));
    CHECK(spec.sys.psis[0] == NPoly(std::vector<Rat>{Rat(1), Rat(1)}));  // n + 1
    CHECK(eval_at_long(spec.sys.psis[0], -1).is_zero());
    NPoly expect = binom_poly<NVar>(3, 3) - binom_poly<NVar>(2, 2) - NPoly(1);
    CHECK(spec.sys.psis[1] == expect);
    CHECK(spec.tau.degree() == 3);  // alpha + 1
    CHECK_THROWS_AS(make_sobolev_singular(2, Rat(0)), std::invalid_argument);
}

TEST_CASE("inner product values") {
    SobolevInnerProduct ip{3, Rat(1), Rat(1), Rat(2)};
    CHECK(ip.apply(XPoly(1), XPoly(1)) == Rat(1) + ip.u0);
    CHECK(ip.apply(XPoly::variable(), XPoly(1)) == Rat(2) + ip.u1);  // alpha - 1 + u1
    SobolevInnerProduct zero{3, Rat(0), Rat(0), Rat(0)};
    XPoly f = XPoly(std::vector<Rat>{Rat(1), Rat(2), Rat(1)});
    CHECK(zero.apply(f, f) == gamma_integral(f * f, 1) / factorial(1));
    CHECK(ip.apply(f, XPoly(1)) == ip.apply(XPoly(1), f));  // symmetry
}

TEST_CASE("parameter map from the boundary matrix") {
    auto spec = params_from_A(3, Rat(1), Rat(1), Rat(2));
    CHECK(spec.beta0 == Rat(-2));
    CHECK(spec.beta1 == Rat(4));
    CHECK(spec.l0 == Rat(4));
    CHECK(spec.l1 == Rat(-6));
    CHECK_FALSE(spec.singular);
    // v0 = 0 inside the regular branch collapses to the moment-functional case
    auto red = params_from_A(3, Rat(1), Rat(2), Rat(0));
    CHECK(red.l0 == Rat(0));
    CHECK(red.l1 == red.beta0);
    // A = diag(0, v0) selects the singular basis
    auto sing = params_from_A(2, Rat(0), Rat(0), Rat(1));
    CHECK(sing.singular);
    // any other singular pattern has no basis rule
    CHECK_THROWS_AS(params_from_A(2, Rat(1), Rat(0), Rat(0)), std::domain_error);
    CHECK_THROWS_AS(params_from_A(2, Rat(1), Rat(1), Rat(1)), std::domain_error);
    CHECK_THROWS_AS(params_from_A(2, Rat(0), Rat(0), Rat(0)), std::domain_error);
}

TEST_CASE("orthogonality for the boundary matrix fixture") {
    auto spec = params_from_A(3, Rat(1), Rat(1), Rat(2));
    SobolevInnerProduct ip{3, Rat(1), Rat(1), Rat(2)};
    auto cert = sobolev_orthogonality_check(spec, ip, 12);
    CHECK(cert.pass);
}

TEST_CASE("reduction case matches the moment functional") {
    // v0 = 0: the inner product is the k = 2 moment functional applied to FG
    auto spec = params_from_A(3, Rat(1), Rat(2), Rat(0));
    SobolevInnerProduct ip{3, Rat(1), Rat(2), Rat(0)};
    auto two = build_system(3, 2, {spec.beta0, spec.beta1});
    REQUIRE(admissible(two).admissible);
    CHECK(spec.sys.psis == two.sys.psis);
    auto mf = u_from_beta_closed(two);
    CHECK(mf.u == std::vector<Rat>{Rat(1), Rat(2)});
    for (long n = 0; n <= 6; ++n)
        for (long m = 0; m <= n; ++m) {
            XPoly a = sobolev_hat(spec, n), b = sobolev_hat(spec, m);
            CHECK(ip.apply(a, b) == mf.apply(a * b));
        }
    CHECK(sobolev_orthogonality_check(spec, ip, 10).pass);
}

TEST_CASE("singular case orthogonality and non-functional witness") {
    auto spec = params_from_A(2, Rat(0), Rat(0), Rat(1));
    SobolevInnerProduct ip{2, Rat(0), Rat(0), Rat(1)};
    auto cert = sobolev_orthogonality_check(spec, ip, 10);
    CHECK(cert.pass);
    XPoly x = XPoly::variable();
    CHECK(ip.apply(x, x) != ip.apply(x * x, XPoly(1)));
}

TEST_CASE("pentadiagonal factorization") {
    auto spec = params_from_A(3, Rat(1), Rat(1), Rat(2));
    CHECK(pentadiagonal_factorization_check(spec, 10).pass);
    auto sing = params_from_A(2, Rat(0), Rat(0), Rat(1));
    CHECK(pentadiagonal_factorization_check(sing, 10).pass);
}

TEST_CASE("reduction case: pentadiagonal product is the squared tridiagonal") {
    Rat b0(2), b1(1, 2);
    auto sob = make_sobolev_spec(3, b0, b1, Rat(0), b0);
    auto two = build_system(3, 2, {b0, b1});
    REQUIRE(admissible(two).admissible);
    auto f = compute_penta_factorization(sob, 8);
    // square the tridiagonal band and compare entries
    auto tri = [&](long i, long j) -> Rat {
        if (i < 0 || j < 0 || j < i - 1 || j > i + 1) return Rat(0);
        auto row = hat_jacobi_row(two, i);
        if (j == i + 1) return row.a_hat;
        if (j == i) return row.b_hat;
        return row.c_hat;
    };
    for (long n = 0; n <= 8; ++n)
        for (long o = -2; o <= 2; ++o) {
            if (n + o < 0) continue;
            Rat expect(0);
            for (long l = n - 1; l <= n + 1; ++l) {
                if (l < 0) continue;
                expect += tri(n, l) * tri(l, n + o);
            }
            CHECK(f.jhat[static_cast<size_t>(n)][static_cast<size_t>(o + 2)] == expect);
        }
}

TEST_CASE("minimal operator orders") {
    // singular case at alpha = 2: deg tau = 3, minimal member degree 4,
    // operator order 2 alpha + 4 = 8, nothing lower
    auto sing = params_from_A(2, Rat(0), Rat(0), Rat(1));
    auto probe = abar_probe(sing.sys, 4);
    CHECK(probe.minimal_nonconstant_degree == 4);
    for (const auto& pd : probe.degrees)
        if (pd.degree < 4) CHECK(pd.dim_found == 1);
    auto basis = algebra_basis(sing.tau, 4);
    auto solved = bhat_linear_solve(basis.back().h, sing.sys);
    REQUIRE(solved.has_value());
    CHECK(solved->op.order() == 8);
    CHECK(eigen_verify(solved->op, basis.back().h, sing.sys, 30).pass);

    // regular boundary matrix: deg tau = 2 alpha; the minimal member sits at
    // degree 2 alpha + 1 with operator order 4 alpha + 2
    for (long alpha = 2; alpha <= 3; ++alpha) {
        auto spec = params_from_A(alpha, Rat(1), Rat(1), Rat(2));
        CHECK(spec.tau.degree() == 2 * alpha);
    }
    auto spec2 = params_from_A(2, Rat(1), Rat(1), Rat(2));
    auto basis2 = algebra_basis(spec2.tau, 5);
    auto solved2 = bhat_linear_solve(basis2.back().h, spec2.sys);
    REQUIRE(solved2.has_value());
    CHECK(solved2->op.order() == 10);  // 4 alpha + 2 at alpha = 2
    CHECK(eigen_verify(solved2->op, basis2.back().h, spec2.sys, 25).pass);
}

TEST_CASE("eigen machinery works unchanged on sobolev systems") {
    auto spec = params_from_A(2, Rat(0), Rat(0), Rat(1));
    auto basis = algebra_basis(spec.tau, 5);
    for (const auto& ep : basis) CHECK(algebra_membership(ep.h, spec.tau).member);
}
