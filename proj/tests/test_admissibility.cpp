#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "subordlab/admissibility.hpp"
#include "subordlab/theorems.hpp"

using namespace subordlab;
using Catch::Approx;

namespace {
const double e = std::numbers::e;
const double pi = std::numbers::pi;
}  // namespace

TEST_CASE("admissibility point induces r, s, t per the defining relations") {
    AdmissibilityPoint p0{0.0, 2.0, cplx{4.5, 0.0}};
    REQUIRE(std::abs(p0.r() - cplx{e, 0.0}) < 1e-15);
    REQUIRE(std::abs(p0.s() - cplx{2.0 * e, 0.0}) < 1e-15);
    REQUIRE(std::abs(p0.t() - p0.s() * (p0.nu - 1.0)) < 1e-15);

    AdmissibilityPoint ppi{pi, 1.0, cplx{0.0, 0.0}};
    REQUIRE(std::abs(ppi.r() - cplx{1.0 / e, 0.0}) < 1e-15);
    REQUIRE(std::abs(ppi.s() - cplx{-1.0 / e, 0.0}) < 1e-15);
    // Re(1 + t/s) = Re(nu) sits exactly on the constraint m(1+cos theta) = 0
    REQUIRE(std::abs((1.0 + ppi.t() / ppi.s()) - ppi.nu) < 1e-15);
}

TEST_CASE("exclusion margins at pinned points") {
    // |s| - 1/e at theta = pi, m = 1 is exactly zero
    AdmissibilityPoint pt{pi, 1.0, cplx{0.0, 0.0}};
    REQUIRE(exclusion_margin(make_psi("E3a"), Region::disk(1.0, 1.0 / e), pt) ==
            Approx(0.0).margin(1e-14));

    // |s/r| = m for any theta
    AdmissibilityPoint q{0.77, 1.0, cplx{0.0, 0.0}};
    REQUIRE(exclusion_margin(make_psi("E4"), Region::disk(1.0, 1.0), q) ==
            Approx(0.0).margin(1e-14));

    // principal-branch distance of -e from the exp-disk
    PsiParams p;
    p.beta = e * e + 1.0;
    REQUIRE(exclusion_margin(make_psi("X3a", p), Region::expdisk(), pt) ==
            Approx(std::sqrt(1.0 + pi * pi) - 1.0).margin(1e-12));
}

TEST_CASE("evaluation breakdowns surface as the +inf outside sentinel") {
    PsiParams p;
    p.beta = 1.0;
    // s/r^2 with r forced to zero cannot occur on the admissibility set;
    // exercise the sentinel through the raw margin helper instead
    REQUIRE(std::isinf(Region::expdisk().margin(cplx{0.0, 0.0})));
}

TEST_CASE("worked example E1 avoids the disk of radius 2") {
    AdmissibilityReport rep =
        min_exclusion(make_psi("E1"), Region::disk(0.0, 2.0));
    REQUIRE(rep.admissible);
    // e^{-1}((1+2e)m - 1) = 2 exactly at m = 1: the minimum sits on the
    // boundary
    REQUIRE(rep.min_margin >= 0.0);
    REQUIRE(rep.argmin.m == Approx(1.0).margin(1e-3));
}

TEST_CASE("sharp first-order case: minimum exactly on the boundary") {
    PsiParams p;
    p.beta = e + 1.0 / e;
    AdmissibilityReport rep =
        min_exclusion(make_psi("X3b", p), Region::expdisk());
    REQUIRE(rep.admissible);
    REQUIRE(std::abs(rep.min_margin) < 1e-6);
    REQUIRE(rep.argmin.theta == Approx(pi).margin(1e-3));
    REQUIRE(rep.argmin.m == Approx(1.0).margin(1e-3));
}

TEST_CASE("second-order example scans the nu window") {
    AdmissibilityReport rep =
        min_exclusion(make_psi("E5"), Region::disk(0.0, 1.0 / e));
    REQUIRE(rep.admissible);
    REQUIRE(rep.min_margin >= -1e-7);
    REQUIRE(rep.argmin.theta == Approx(pi).margin(1e-2));
    REQUIRE(rep.argmin.m == Approx(1.0).margin(1e-2));
    // the minimizing nu sits on the constraint boundary m(1+cos theta) ~ 0
    REQUIRE(std::abs(rep.argmin.nu) < 1e-2);
}

TEST_CASE("minimization is deterministic and independent of worker count") {
    PsiParams p;
    p.beta = e * e - 1.0;
    GridSpec one;
    one.jobs = 1;
    GridSpec four;
    four.jobs = 4;
    AdmissibilityReport a = min_exclusion(make_psi("X5b", p), Region::expdisk(), one);
    AdmissibilityReport b = min_exclusion(make_psi("X5b", p), Region::expdisk(), four);
    REQUIRE(a.min_margin == b.min_margin);
    REQUIRE(a.argmin.theta == b.argmin.theta);
    REQUIRE(a.argmin.m == b.argmin.m);
}

TEST_CASE("closed-form g at pinned points") {
    PsiParams p;
    p.beta = e * e + 1.0;
    REQUIRE(g_theta("lem5a", pi, 1.0, p) == Approx(1.0).margin(1e-12));

    PsiParams x1;
    x1.beta = e * e * e - e * e;
    x1.n = 2;
    REQUIRE(g_theta("lem1", pi, 1.0, x1) == Approx(1.0).margin(1e-12));

    PsiParams j1;
    j1.beta = 2.0;
    j1.n = 0;
    REQUIRE(g_theta("lem2", pi, 1.0, j1) == Approx(2.0 / e).margin(1e-14));
}

TEST_CASE("g is the proof's lower bound of the principal log distance") {
    std::mt19937_64 rng(11);
    auto u = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    for (const char* id : {"lem5a", "lem7a", "lem8a", "lem9a"}) {
        const TheoremCase& thm = find_theorem(id);
        PsiParams p;
        p.beta = thm.bound(p);
        PsiExpr psi = make_psi(thm.psi_id, p);
        for (int i = 0; i < 500; ++i) {
            double theta = 2.0 * pi * u();
            double m = 1.0 + 31.0 * u();
            AdmissibilityPoint pt{theta, m, cplx{0.0, 0.0}};
            cplx w = psi.eval(pt.r(), pt.s(), pt.t());
            double g = g_theta(thm, theta, m, p);
            double logsq = std::norm(std::log(w));
            REQUIRE(g <= logsq + 1e-9);
            if (w.real() > 1e-9) REQUIRE(g == Approx(logsq).margin(1e-9));
        }
    }
}

TEST_CASE("modulus-type margins are nondecreasing in m at fixed theta") {
    std::mt19937_64 rng(5);
    auto u = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    PsiParams p;
    p.beta = e;
    p.n = 0;
    PsiExpr psi = make_psi("J1", p);
    Region reg = Region::disk(1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        double theta = 2.0 * pi * u();
        double prev = -std::numeric_limits<double>::infinity();
        for (double m = 1.0; m <= 32.0; m += 0.5) {
            AdmissibilityPoint pt{theta, m, cplx{0.0, 0.0}};
            double cur = exclusion_margin(psi, reg, pt);
            REQUIRE(cur >= prev - 1e-12);
            prev = cur;
        }
    }
}

TEST_CASE("proof-method tightness probes") {
    PsiParams none;
    SharpnessResult lem5 = sharpness_probe(find_theorem("lem5a"), none);
    REQUIRE(lem5.boundary_attained);
    REQUIRE(lem5.fails_below);

    PsiParams j1;
    j1.n = 0;
    j1.alpha = 0.0;
    SharpnessResult lem2 = sharpness_probe(find_theorem("lem2"), j1);
    REQUIRE(lem2.boundary_attained);
    REQUIRE(lem2.fails_below);

    // generic probe: the worked example sits exactly on its boundary
    SharpnessResult e4 =
        sharpness_probe(make_psi("E4"), Region::disk(1.0, 1.0));
    REQUIRE(e4.boundary_attained);
}
