#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "subordlab/power_series.hpp"
#include "subordlab/psi.hpp"

using namespace subordlab;
using Catch::Approx;

namespace {
const double e = std::numbers::e;
double dist(cplx a, cplx b) { return std::abs(a - b); }
}  // namespace

TEST_CASE("worked-example entries evaluate their closed forms") {
    cplx r{2.0, 1.0}, s{0.5, -0.25}, t{-1.0, 3.0};
    REQUIRE(dist(make_psi("E1").eval(r, s, t), r + (1.0 + 2.0 * e) * s) == 0.0);
    REQUIRE(dist(make_psi("E2").eval(r, s, t),
                 1.0 + (1.0 + std::sqrt(2.0)) * e * s) == 0.0);
    REQUIRE(dist(make_psi("E3a").eval(r, s, t), 1.0 + s) == 0.0);
    REQUIRE(dist(make_psi("E3b").eval(r, s, t),
                 r * r - r + (1.0 + e) * s + 1.0) < 1e-15);
    REQUIRE(dist(make_psi("E3c").eval(r, s, t), 1.0 + s / (r * r)) < 1e-15);
    REQUIRE(dist(make_psi("E4").eval(r, s, t), 1.0 + s / r) < 1e-15);
    REQUIRE(dist(make_psi("E5").eval(r, s, t), 2.0 * s + t) == 0.0);
}

TEST_CASE("spec'd pointwise values") {
    // E3a with p = 1+z at z = 0.3: psi = 1 + zp' = 1 + z
    PowerSeries p =
        PowerSeries::ham({cplx{1.0, 0.0}, cplx{1.0, 0.0}}, 1.0, 1);
    cplx z{0.3, 0.0};
    Jet j = p.jet(z);
    REQUIRE(dist(make_psi("E3a").eval_jet(j, z), cplx{1.3, 0.0}) < 1e-15);

    // E4 with p = truncated e^z at z = 0.5: 1 + zp'/p = 1 + z
    PowerSeries q = PowerSeries::exp_series();
    cplx z2{0.5, 0.0};
    REQUIRE(dist(make_psi("E4").eval_jet(q.jet(z2), z2), cplx{1.5, 0.0}) <
            1e-10);

    // X8 with p identically 1: r^2 + r - 1 + beta s = 1
    PsiParams par;
    par.beta = 7.0;
    REQUIRE(dist(make_psi("X8", par).eval(1.0, 0.0, 0.0), cplx{1.0, 0.0}) ==
            0.0);
}

TEST_CASE("beta/alpha/n parameters are wired correctly") {
    cplx r{1.5, -0.5}, s{0.25, 0.75};
    PsiParams p;
    p.beta = 2.0;
    p.n = 0;
    // J1 with n = 0 has no r division
    REQUIRE(dist(make_psi("J1", p).eval(r, s), 1.0 + p.beta * s) == 0.0);
    p.n = 2;
    REQUIRE(dist(make_psi("J1", p).eval(r, s), 1.0 + p.beta * s / (r * r)) <
            1e-15);
    // J2 and X2 share the statement form 1 + beta s / r^{n+1}
    REQUIRE(dist(make_psi("J2", p).eval(r, s), make_psi("X2", p).eval(r, s)) ==
            0.0);
    REQUIRE(dist(make_psi("J2", p).eval(r, s),
                 1.0 + p.beta * s / (r * r * r)) < 1e-15);
    // J4a == X3a, J4b == X3b
    REQUIRE(dist(make_psi("J4a", p).eval(r, s), make_psi("X3a", p).eval(r, s)) ==
            0.0);
    REQUIRE(dist(make_psi("J4b", p).eval(r, s), make_psi("X3b", p).eval(r, s)) ==
            0.0);

    PsiParams j3;
    j3.beta = 1.5;
    j3.alpha = 0.25;
    REQUIRE(dist(make_psi("J3", j3).eval(r, s),
                 0.75 * r + 0.25 * r * r + 1.5 * s) < 1e-15);

    PsiParams x1;
    x1.beta = 3.0;
    x1.n = 3;
    REQUIRE(dist(make_psi("X1", x1).eval(r, s), 1.0 + 3.0 * s * s * s) < 1e-14);
}

TEST_CASE("only the second-order example uses t") {
    for (const std::string& id : psi_catalog_ids()) {
        PsiParams p;
        p.beta = 1.0;
        p.n = 1;
        REQUIRE(make_psi(id, p).uses_t() == (id == "E5"));
    }
}

TEST_CASE("catalog is closed") {
    REQUIRE_THROWS_AS(make_psi("Z9"), UnknownTheorem);
    REQUIRE(psi_catalog_ids().size() == 27);
    REQUIRE(psi_takes_beta("X6c"));
    REQUIRE_FALSE(psi_takes_beta("E4"));
}

TEST_CASE("division by zero in an expression throws") {
    PsiParams p;
    p.beta = 1.0;
    p.n = 0;
    REQUIRE_THROWS_AS(make_psi("E4").eval(cplx{0.0, 0.0}, cplx{1.0, 0.0}),
                      DivisionByZero);
}

TEST_CASE("jet consistency: eval through a function equals eval of its jet") {
    std::mt19937_64 rng(7);
    auto u = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    PowerSeries f = PowerSeries::exp_series();
    for (int i = 0; i < 50; ++i) {
        cplx z = std::polar(0.9 * u(), 2.0 * std::numbers::pi * u());
        Jet j = f.jet(z);
        for (const std::string& id : {"E1", "E4", "X6b", "J3"}) {
            PsiParams p;
            p.beta = 1.0 + u();
            p.alpha = 0.5 * u();
            p.n = 1;
            PsiExpr psi = make_psi(id, p);
            REQUIRE(dist(psi.eval_jet(j, z),
                         psi.eval(j.value, j.zdp, j.z2ddp, z)) == 0.0);
        }
    }
}

TEST_CASE("entries affine in beta interpolate linearly") {
    cplx r{0.8, 0.6}, s{-0.3, 0.4};
    for (const std::string& id : {"J1", "J3", "X3a", "X5b", "X6c", "X8"}) {
        PsiParams lo, hi, mid;
        lo.beta = 1.0;
        hi.beta = 3.0;
        mid.beta = 2.0;
        lo.n = hi.n = mid.n = 1;
        lo.alpha = hi.alpha = mid.alpha = 0.25;
        cplx vl = make_psi(id, lo).eval(r, s);
        cplx vh = make_psi(id, hi).eval(r, s);
        cplx vm = make_psi(id, mid).eval(r, s);
        REQUIRE(dist(vm, 0.5 * (vl + vh)) < 1e-12);
    }
}
