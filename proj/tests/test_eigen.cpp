#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "krall/eigen_algebra.hpp"
#include "krall/laguerre.hpp"
#include "krall/rng.hpp"
#include "krall/serialize.hpp"

using namespace krall;

TEST_CASE("algebra membership") {
    auto spec = build_system(1, 1, {Rat(1)});  // tau = n + 2
    auto cm = algebra_membership(NPoly(5), spec.tau);
    CHECK(cm.member);
    CHECK(cm.ep.g.is_zero());
    // h = n is not a member: remainder 1 after dividing by tau(n-1) = n + 1
    auto nm = algebra_membership(NPoly::variable(), spec.tau);
    CHECK_FALSE(nm.member);
    CHECK(nm.remainder == NPoly(1));
    // explicit generator is a member with unit quotient at j = 0
    auto gens = k1_generators(1, Rat(1));
    auto g0 = algebra_membership(gens[0].h, spec.tau);
    CHECK(g0.member);
    CHECK(g0.ep.g == NPoly(1));
}

TEST_CASE("membership invariant h(n) - h(n-1) = g(n) tau(n-1)") {
    Rng rng(41);
    for (long alpha = 1; alpha <= 3; ++alpha) {
        auto spec = build_system(alpha, 1, {rng.nonzero_rat()});
        for (const auto& ep : algebra_basis(spec.tau, spec.tau.degree() + 3)) {
            CHECK(ep.h - ep.h.shifted(-1) == ep.g * spec.tau.shifted(-1));
            CHECK(algebra_membership(ep.h, spec.tau).member);
            if (!ep.h.is_zero() && ep.h.degree() > 0)
                CHECK(eval_at_long(ep.h, 0).is_zero());
        }
    }
}

TEST_CASE("discrete integral cases") {
    CHECK(discrete_integral(NPoly(1), 0, 5) == Rat(5));
    CHECK(discrete_integral(NPoly::variable(), 0, 0) == Rat(0));
    CHECK(discrete_integral(NPoly::variable(), 3, 0) == Rat(-6));
}

TEST_CASE("algebra basis by discrete integration") {
    auto spec = build_system(1, 1, {Rat(1)});
    auto basis = algebra_basis(spec.tau, 2);
    REQUIRE(basis.size() == 2);  // the constant and one degree-2 element
    CHECK(basis[0].h == NPoly(1));
    // g = 1: h(n) = sum_{s=1..n} (s + 1) = n(n+3)/2
    CHECK(basis[1].g == NPoly(1));
    CHECK(basis[1].h == NPoly(std::vector<Rat>{Rat(0), Rat(3, 2), Rat(1, 2)}));
    CHECK_THROWS_AS(algebra_basis(spec.tau, 1), std::invalid_argument);
}

TEST_CASE("one-step generators") {
    auto gens = k1_generators(1, Rat(1));
    REQUIRE(gens.size() == 2);
    // h^(0)(n) = (n+1) + binom(n+1, 2); value 3 at n = 1
    CHECK(gens[0].h == binom_poly<NVar>(1, 1) + binom_poly<NVar>(1, 2));
    CHECK(eval_at_long(gens[0].h, 1) == Rat(3));
    for (long alpha = 1; alpha <= 4; ++alpha) {
        auto spec = build_system(alpha, 1, {Rat(5, 3)});
        auto gs = k1_generators(alpha, Rat(5, 3));
        for (long j = 0; j <= alpha; ++j) {
            CHECK(gs[static_cast<size_t>(j)].h.degree() == alpha + j + 1);
            CHECK(gs[static_cast<size_t>(j)].g == binom_poly<NVar>(alpha + j - 1, j));
            auto mem = algebra_membership(gs[static_cast<size_t>(j)].h, spec.tau);
            CHECK(mem.member);
            CHECK(mem.ep.g == gs[static_cast<size_t>(j)].g);
        }
    }
}

TEST_CASE("reach identity") {
    Rng rng(42);
    // k = 1, random linear inputs
    for (int t = 0; t < 5; ++t) {
        std::vector<NPoly> fs{rng.poly<NVar>(1), rng.poly<NVar>(1), rng.poly<NVar>(1)};
        CHECK(reach_identity_check(fs, {rng.range(-2, 2), rng.range(-2, 2)},
                                   {rng.range(-2, 2), rng.range(-2, 2)})
                  .pass);
    }
    // k = 2, random quadratics
    for (int t = 0; t < 5; ++t) {
        std::vector<NPoly> fs{rng.poly<NVar>(2), rng.poly<NVar>(2), rng.poly<NVar>(2),
                              rng.poly<NVar>(2)};
        CHECK(reach_identity_check(fs, {0, 1, -1}, {2, -2, 0}).pass);
    }
    // degenerate trailing function: both sides vanish
    std::vector<NPoly> fs{rng.poly<NVar>(1), rng.poly<NVar>(1), NPoly()};
    CHECK(reach_identity_check(fs, {0, 0}, {1, 1}).pass);
    // 50 instances per k
    for (long k = 1; k <= 3; ++k) {
        Rng r2(100 + static_cast<uint64_t>(k));
        for (int t = 0; t < 50; ++t) {
            std::vector<NPoly> f;
            for (long i = 0; i < k + 2; ++i)
                f.push_back(r2.poly<NVar>(static_cast<int>(r2.range(1, 2))));
            std::vector<long> base, alt;
            for (long i = 0; i <= k; ++i) {
                base.push_back(r2.range(-3, 3));
                alt.push_back(r2.range(-3, 3));
            }
            CHECK(reach_identity_check(f, base, alt).pass);
        }
    }
}

TEST_CASE("discrete-integral operator assembly") {
    // r0 = r1 = 1, r2 = 0: the operator is 1 - d/dx
    DiffOp op = lemma44_operator(NPoly(1), NPoly(1), NPoly(), 1);
    CHECK(op == DiffOp::identity() - DiffOp::d1());
    CHECK(op.apply(laguerre_poly(Rat(1), 0)) == XPoly(1));
    CHECK(lemma44_check(NPoly(1), NPoly(1), NPoly(), 1, 8).pass);
    // r1 = 0, r2 = 1
    CHECK(lemma44_check(NPoly(1), NPoly(), NPoly(1), 1, 8).pass);
    // r0 = tau-style polynomial, mixed r1, r2
    auto spec = build_system(2, 1, {Rat(1)});
    CHECK(lemma44_check(spec.tau, NPoly::variable() + NPoly(2), NPoly::variable(), 2, 8).pass);
    Rng rng(43);
    for (int t = 0; t < 5; ++t)
        CHECK(lemma44_check(rng.poly<NVar>(1), rng.poly<NVar>(1), rng.poly<NVar>(1), 1, 6).pass);
}

TEST_CASE("closed-form operator for one step") {
    auto spec = build_system(1, 1, {Rat(1)});
    auto gens = k1_generators(1, Rat(1));
    auto op = bhat_closed_form_k1(gens[0], spec);
    CHECK(op.op.order() == 4);  // 2 alpha + 2
    CHECK(eigen_verify(op.op, gens[0].h, spec.sys, 25).pass);
    // constant h acts as scalar multiplication
    auto cop = bhat_closed_form_k1({NPoly(1), NPoly()}, spec);
    CHECK(cop.op == DiffOp::identity());
}

TEST_CASE("linear reconstruction matches the closed form") {
    auto spec = build_system(2, 1, {Rat(1)});
    auto gens = k1_generators(2, Rat(1));
    auto closed = bhat_closed_form_k1(gens[1], spec);
    auto solved = bhat_linear_solve(gens[1].h, spec.sys);
    REQUIRE(solved.has_value());
    CHECK(solved->op == closed.op);
    CHECK(solved->annihilator_dim == 0);
    CHECK(solved->op.order() == 2 * gens[1].h.degree());
    // the reconstruction grid: alpha <= 3, three beta values, j <= 2
    for (long alpha = 1; alpha <= 3; ++alpha)
        for (const Rat& b0 : {Rat(1), Rat(-2), Rat(1, 2)}) {
            auto s = build_system(alpha, 1, {b0});
            if (!admissible(s).admissible) continue;
            auto gs = k1_generators(alpha, b0);
            for (long j = 0; j <= std::min(alpha, 2L); ++j) {
                auto c = bhat_closed_form_k1(gs[static_cast<size_t>(j)], s);
                auto l = bhat_linear_solve(gs[static_cast<size_t>(j)].h, s.sys);
                REQUIRE(l.has_value());
                CHECK(l->op == c.op);
            }
        }
}

TEST_CASE("no operator outside the algebra at low order") {
    auto spec = build_system(1, 1, {Rat(1)});
    auto solved = bhat_linear_solve(NPoly::variable(), spec.sys, 2);
    CHECK_FALSE(solved.has_value());
    CHECK_THROWS_AS(bhat_linear_solve(NPoly::variable(), spec.sys, 3), std::invalid_argument);
}

TEST_CASE("eigen verification catches perturbations") {
    auto spec = build_system(1, 1, {Rat(1)});
    auto gens = k1_generators(1, Rat(1));
    auto op = bhat_closed_form_k1(gens[0], spec);
    CHECK(eigen_verify(op.op, gens[0].h, spec.sys, 25).pass);
    DiffOp bad = op.op + DiffOp::from_term(0, XPoly(Rat(1, 7)));
    auto cert = eigen_verify(bad, gens[0].h, spec.sys, 10);
    CHECK_FALSE(cert.pass);
    CHECK(cert.witness == "n=0");
    CHECK(eigen_verify(DiffOp(), NPoly(), spec.sys, 5).pass);
}

TEST_CASE("operators built from the basis satisfy the order law") {
    auto spec = build_system(2, 1, {Rat(1)});
    for (const auto& ep : algebra_basis(spec.tau, spec.tau.degree() + 2)) {
        if (ep.h.degree() <= 0) continue;
        auto solved = bhat_linear_solve(ep.h, spec.sys);
        REQUIRE(solved.has_value());
        CHECK(solved->op.order() == 2 * ep.h.degree());
        CHECK(eigen_verify(solved->op, ep.h, spec.sys, 40).pass);
    }
}

TEST_CASE("commutativity of the operator algebra") {
    auto spec = build_system(2, 1, {Rat(1)});
    auto gens = k1_generators(2, Rat(1));
    std::vector<DiffOp> ops;
    for (long j = 0; j <= 2; ++j)
        ops.push_back(bhat_closed_form_k1(gens[static_cast<size_t>(j)], spec).op);
    CHECK(commutativity_check(ops).pass);
    // an operator commutes with polynomials of itself
    DiffOp poly_of_op = op_substitute(NPoly(std::vector<Rat>{Rat(3), Rat(0), Rat(1)}), ops[0]);
    CHECK(commutativity_check({ops[0], poly_of_op}).pass);
    // eigenvalues multiply under composition
    for (long n = 0; n <= 15; ++n) {
        XPoly f = hat_laguerre(spec.sys, n);
        Rat h0 = gens[0].h.eval(Rat(n)), h1 = gens[1].h.eval(Rat(n));
        CHECK((ops[0] * ops[1]).apply(f) == f * (h0 * h1));
    }
    // order law under composition
    CHECK((ops[0] * ops[1]).order() == 2 * (gens[0].h.degree() + gens[1].h.degree()));
}
