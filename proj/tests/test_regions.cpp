#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "subordlab/region.hpp"

using namespace subordlab;
using Catch::Approx;

TEST_CASE("exp-disk margin: center, boundary, singularity") {
    Region d = Region::expdisk();
    REQUIRE(d.margin(cplx{1.0, 0.0}) == Approx(-1.0));
    REQUIRE(d.margin(cplx{std::numbers::e, 0.0}) == Approx(0.0).margin(1e-15));
    REQUIRE(d.margin(cplx{1.0 / std::numbers::e, 0.0}) ==
            Approx(0.0).margin(1e-15));
    REQUIRE(std::isinf(d.margin(cplx{0.0, 0.0})));
    // -e is far outside: |log(-e)| = sqrt(1 + pi^2)
    REQUIRE(d.margin(cplx{-std::numbers::e, 0.0}) ==
            Approx(std::sqrt(1.0 + std::numbers::pi * std::numbers::pi) - 1.0));
    REQUIRE(d.contains(cplx{1.5, 0.3}));
    REQUIRE_FALSE(d.contains(cplx{-1.0, 0.0}));
}

TEST_CASE("disk region via Moebius: margins and pole") {
    Region d = Region::disk(cplx{1.0, 0.0}, 1.0);
    REQUIRE(d.margin(cplx{1.0, 0.0}) == Approx(-1.0));
    REQUIRE(d.margin(cplx{2.0, 0.0}) == Approx(0.0).margin(1e-15));
    REQUIRE(d.margin(cplx{3.0, 0.0}) == Approx(1.0));
    Region m = Region::moebius(1.0, 0.0, 1.0, -1.0, 2.0);  // pole at w = 1
    REQUIRE(std::isinf(m.margin(cplx{1.0, 0.0})));
}

TEST_CASE("half-plane-like Moebius images used as hypotheses") {
    // (2+z)/(2-z): image is |(2w-2)/(w+1)| < 1
    Region r = Region::moebius(2.0, -2.0, 1.0, 1.0, 1.0);
    auto h = [](cplx z) { return (2.0 + z) / (2.0 - z); };
    REQUIRE(r.contains(h(cplx{0.5, 0.3})));
    REQUIRE(r.margin(h(cplx{1.0, 0.0})) == Approx(0.0).margin(1e-12));
    REQUIRE_FALSE(r.contains(cplx{4.0, 0.0}));

    // (2+2z)/(2-z): image is |(w-1)/(w+2)| < 1/2
    Region r2 = Region::moebius(1.0, -1.0, 1.0, 2.0, 0.5);
    auto h2 = [](cplx z) { return (2.0 + 2.0 * z) / (2.0 - z); };
    REQUIRE(r2.contains(h2(cplx{-0.7, 0.2})));
    REQUIRE(r2.margin(h2(std::polar(1.0, 1.0))) == Approx(0.0).margin(1e-12));
}

TEST_CASE("lemniscate margin and two-lobe boundary") {
    Region l = Region::lemniscate();
    REQUIRE(l.margin(cplx{1.0, 0.0}) == Approx(-1.0));
    REQUIRE(l.margin(cplx{std::sqrt(2.0), 0.0}) == Approx(0.0).margin(1e-15));
    REQUIRE_FALSE(l.contains(cplx{0.0, 0.0}));  // |0-1|-1 = 0, boundary
    for (int lobe : {0, 1})
        for (int i = 0; i < 32; ++i) {
            cplx w = l.boundary_point(2.0 * std::numbers::pi * i / 32, lobe);
            REQUIRE(std::abs(l.margin(w)) < 1e-12);
        }
}

TEST_CASE("boundary parameterizations land on margin zero") {
    for (const Region& r :
         {Region::expdisk(), Region::disk(cplx{1.0, 0.0}, 0.5),
          Region::moebius(2.0, -2.0, 1.0, 1.0, 1.0)}) {
        for (int i = 0; i < 64; ++i) {
            cplx w = r.boundary_point(2.0 * std::numbers::pi * i / 64);
            REQUIRE(std::abs(r.margin(w)) < 1e-10);
        }
    }
}

TEST_CASE("open-set semantics: boundary points are not contained") {
    Region d = Region::disk(cplx{0.0, 0.0}, 1.0);
    REQUIRE_FALSE(d.contains(cplx{1.0, 0.0}));
    REQUIRE(d.contains(cplx{1.0 - 1e-12, 0.0}));
}

TEST_CASE("region spec mini-language") {
    Region e = parse_region("expdisk");
    REQUIRE(e.describe() == "expdisk");
    Region l = parse_region("lemniscate");
    REQUIRE(l.describe() == "lemniscate");

    Region d = parse_region("disk:c=1,0,rho=0.5");
    REQUIRE(d.margin(cplx{1.0, 0.0}) == Approx(-0.5));
    Region m = parse_region("moebius:a=2,0,b=-2,0,c=1,0,d=1,0,k=1");
    REQUIRE(m.contains(cplx{1.0, 0.1}));

    REQUIRE_THROWS_AS(parse_region("disk:c=1,0"), ParseError);
    REQUIRE_THROWS_AS(parse_region("disk:c=1,0,rho=-1"), ParseError);
    REQUIRE_THROWS_AS(parse_region("octagon"), ParseError);
}

TEST_CASE("all catalog regions share center value 1") {
    REQUIRE(Region::center_value() == cplx{1.0, 0.0});
    // 1 lies strictly inside each hypothesis region used by the theorems
    REQUIRE(Region::expdisk().contains(cplx{1.0, 0.0}));
    REQUIRE(Region::disk(cplx{1.0, 0.0}, 1.0).contains(cplx{1.0, 0.0}));
    REQUIRE(Region::moebius(2.0, -2.0, 1.0, 1.0, 1.0).contains(cplx{1.0, 0.0}));
    REQUIRE(Region::moebius(1.0, -1.0, 1.0, 2.0, 0.5).contains(cplx{1.0, 0.0}));
    REQUIRE(Region::lemniscate().contains(cplx{1.0, 0.0}));
}
