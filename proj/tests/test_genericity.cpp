#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "krall/eigen_algebra.hpp"
#include "krall/genericity.hpp"
#include "krall/serialize.hpp"

using namespace krall;

TEST_CASE("one-step resultant closed form") {
    // symbolic match for alpha = 1..4
    for (long alpha = 1; alpha <= 4; ++alpha)
        CHECK(resultant_criterion_symbolic(alpha, 1) == k1_resultant_closed_form(alpha));
    // concrete spot check: alpha = 2, beta0 = 1 gives 1
    auto spec = build_system(2, 1, {Rat(1)});
    CHECK(resultant_criterion(spec) == Rat(1));
    // alpha = 1: resultant is -beta0
    CHECK(resultant_criterion(build_system(1, 1, {Rat(5)})) == Rat(-5));
}

TEST_CASE("every admissible one-step parameter is generic") {
    // symbolically the resultant is a nonzero multiple of a beta0 power, so
    // it only vanishes at beta0 = 0, which is never admissible
    for (long alpha = 1; alpha <= 4; ++alpha) {
        ParamPoly r = resultant_criterion_symbolic(alpha, 1);
        REQUIRE(r.terms().size() == 1);
        const auto& [mono, coeff] = *r.terms().begin();
        CHECK(mono[0] == 2 * alpha - 1);
        CHECK(mono[1] == 0);
        CHECK_FALSE(coeff.is_zero());
    }
}

TEST_CASE("two-step resultant closed form") {
    for (long alpha = 2; alpha <= 4; ++alpha)
        CHECK(resultant_criterion_symbolic(alpha, 2) == k2_resultant_closed_form(alpha));
}

TEST_CASE("two-step genericity equation") {
    CHECK(k2_genericity_equation(2, Rat(1, 8), Rat(0)).is_zero());
    CHECK(k2_genericity_equation(2, Rat(1), Rat(1)) == Rat(37));
    // u-form equivalence: beta0^4 (9u0^2 + 18u0u1 + 5u1^2 + 32u1) at alpha=2
    Rng rng(51);
    for (int t = 0; t < 20; ++t) {
        Rat b0 = rng.nonzero_rat(), b1 = rng.rat();
        Rat u0 = -(b0 + b1) / (b0 * b0), u1 = Rat(1) / b0;
        Rat uform = Rat(9) * u0 * u0 + Rat(18) * u0 * u1 + Rat(5) * u1 * u1 + Rat(32) * u1;
        CHECK(k2_genericity_equation(2, b0, b1) == pow_rat(b0, 4) * uform);
    }
}

TEST_CASE("generic flag flips exactly on the curve") {
    // alpha = 2: rational points on the curve via beta0 = (1 - s^2)/8,
    // beta1 = 2 beta0 s / 3
    int on_curve = 0;
    for (const Rat& s : {Rat(0), Rat(1, 2), Rat(1, 3), Rat(3), Rat(-2), Rat(5, 2)}) {
        Rat b0 = (Rat(1) - s * s) / Rat(8);
        Rat b1 = Rat(2) * b0 * s / Rat(3);
        if (b0.is_zero()) continue;
        CHECK(k2_genericity_equation(2, b0, b1).is_zero());
        auto spec = build_system(2, 2, {b0, b1});
        if (!admissible(spec).admissible) continue;
        CHECK(resultant_criterion(spec).is_zero());
        ++on_curve;
    }
    CHECK(on_curve >= 3);
    // off-curve samples for alpha in {2, 3}: generic iff the equation is
    // nonzero; checked across a 50-point sample
    Rng rng(52);
    for (long alpha = 2; alpha <= 3; ++alpha) {
        int checked = 0;
        while (checked < 25) {
            Rat b0 = rng.nonzero_rat(9, 3), b1 = rng.rat(9, 3);
            auto spec = build_system(alpha, 2, {b0, b1});
            if (!admissible(spec).admissible) continue;
            CHECK(resultant_criterion(spec).is_zero() ==
                  k2_genericity_equation(alpha, b0, b1).is_zero());
            ++checked;
        }
    }
    // alpha = 3 on-curve family: beta0 = (32t^3 - 18t)/81, beta1 = t beta0
    for (const Rat& t : {Rat(1), Rat(1, 2), Rat(-1), Rat(2)}) {
        Rat b0 = (Rat(32) * t * t * t - Rat(18) * t) / Rat(81);
        if (b0.is_zero()) continue;
        Rat b1 = t * b0;
        CHECK(k2_genericity_equation(3, b0, b1).is_zero());
        auto spec = build_system(3, 2, {b0, b1});
        if (!admissible(spec).admissible) continue;
        CHECK(resultant_criterion(spec).is_zero());
    }
}

TEST_CASE("squared-resultant identity from the relative primality argument") {
    for (long k = 1; k <= 2; ++k)
        for (long alpha = std::max(k, 2L); alpha <= 3; ++alpha) {
            auto spec = build_system(alpha, k, k == 1 ? std::vector<Rat>{Rat(2)}
                                                      : std::vector<Rat>{Rat(1), Rat(1)});
            NPoly hat0 = hat_deriv_at_zero(spec.sys, 0);
            Rat lhs = resultant(spec.tau.shifted(-1), hat0.shifted(-1) * hat0);
            Rat r = resultant_criterion(spec);
            CHECK(lhs == r * r);
        }
}

TEST_CASE("consistency certificate across the alpha range") {
    Rng rng(53);
    CHECK(consistency_vs_closed_form(1, 1, 4, rng, 10).pass);
    CHECK(consistency_vs_closed_form(2, 2, 3, rng, 10).pass);
}

TEST_CASE("desnanot-jacobi identity") {
    Rng rng(54);
    CHECK(desnanot_jacobi_check(rng, 50).pass);
    // two equal functions: both sides vanish
    NPoly f = NPoly::variable() + NPoly(2);
    std::vector<NPoly> fam{f, f, NPoly::variable() * NPoly::variable()};
    auto wr = [&](size_t from, size_t to, long shift) {
        std::vector<NPoly> cols;
        for (size_t i = from; i <= to; ++i) cols.push_back(fam[i].shifted(shift));
        return casorati(cols);
    };
    CHECK((wr(0, 2, 0) * wr(1, 1, -1)).is_zero());
}

TEST_CASE("resultant shift identity") {
    Rng rng(55);
    CHECK(resultant_shift_check(rng, 50).pass);
    // constant family: all four resultants equal 1
    NPoly c1(3), c2(5);
    CHECK(resultant(c1, c2) == resultant(c1.shifted(-1), c2));
}

TEST_CASE("probe at generic one-step parameters") {
    for (long alpha = 1; alpha <= 2; ++alpha) {
        auto spec = build_system(alpha, 1, {Rat(1)});
        auto probe = abar_probe(spec.sys, alpha + 1);
        CHECK(probe.minimal_nonconstant_degree == alpha + 1);  // deg tau + 1
        for (const auto& pd : probe.degrees) {
            CHECK(pd.probed);
            CHECK(pd.dim_found == pd.dim_algebra);
            CHECK_FALSE(pd.extra_found);
        }
    }
}

TEST_CASE("probe at the non-generic two-step point") {
    auto spec = build_system(2, 2, {Rat(1, 8), Rat(0)});
    REQUIRE(admissible(spec).admissible);
    auto probe = abar_probe(spec.sys, 4);
    bool found = false;
    for (const auto& pd : probe.degrees) {
        if (pd.degree < 4) CHECK(pd.dim_found == 1);
        if (pd.degree == 4) {
            CHECK(pd.extra_found);
            CHECK(pd.extra_verified);
            CHECK(pd.operator_order == 8);
            found = true;
        }
    }
    CHECK(found);
    // the explicit degree-4 member and its operator
    NPoly h = NPoly::monomial(4, Rat(1)) + NPoly::monomial(3, Rat(2)) +
              NPoly::monomial(2, Rat(28) * Rat(1, 8) - Rat(1)) +
              NPoly::monomial(1, Rat(28) * Rat(1, 8) - Rat(2));
    CHECK_FALSE(algebra_membership(h, spec.tau).member);
    auto solved = bhat_linear_solve(h, spec.sys, 8);
    REQUIRE(solved.has_value());
    CHECK(solved->op.order() == 8);
    CHECK(eigen_verify(solved->op, h, spec.sys, 30).pass);
}

TEST_CASE("probe at a generic two-step point finds nothing below degree five") {
    auto spec = build_system(2, 2, {Rat(1), Rat(1)});
    auto probe = abar_probe(spec.sys, 4);
    for (const auto& pd : probe.degrees) {
        CHECK(pd.probed);
        CHECK(pd.dim_found == 1);
        CHECK_FALSE(pd.extra_found);
    }
    CHECK(probe.minimal_nonconstant_degree == -1);
}

TEST_CASE("genericity report") {
    auto spec = build_system(2, 1, {Rat(1)});
    auto rep = genericity_report(spec);
    CHECK(rep.generic);
    CHECK(rep.closed_form_checked);
    CHECK(rep.closed_form_match);
    auto nspec = build_system(2, 2, {Rat(1, 8), Rat(0)});
    auto nrep = genericity_report(nspec);
    CHECK_FALSE(nrep.generic);
    CHECK(nrep.closed_form_match);
}
