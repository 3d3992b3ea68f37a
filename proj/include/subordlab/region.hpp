#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <regex>
#include <string>
#include <variant>

#include "subordlab/errors.hpp"
#include "subordlab/power_series.hpp"

namespace subordlab {

/// {w : |log w| < 1} with the principal logarithm. 0 lies outside.
struct ExpDisk {};

/// {w : |(a w + b)/(c w + d)| < k}. Covers every disk and Moebius image
/// used as a hypothesis domain.
struct MoebiusDisk {
    cplx a, b, c, d;
    double k;
};

/// {w : |w^2 - 1| < 1}.
struct Lemniscate {};

class Region {
public:
    using Variant = std::variant<ExpDisk, MoebiusDisk, Lemniscate>;

    static Region expdisk() { return Region(ExpDisk{}); }
    static Region lemniscate() { return Region(Lemniscate{}); }
    static Region moebius(cplx a, cplx b, cplx c, cplx d, double k) {
        return Region(MoebiusDisk{a, b, c, d, k});
    }
    /// |w - center| < rho
    static Region disk(cplx center, double rho) {
        return moebius(1.0, -center, 0.0, 1.0, rho);
    }

    const Variant& variant() const { return v_; }

    /// Signed membership margin: negative strictly inside, zero on the
    /// boundary, positive outside. +inf sentinel for the log singularity
    /// and for Moebius poles.
    double margin(cplx w) const {
        return std::visit([&](const auto& r) { return margin_impl(r, w); }, v_);
    }

    /// Open-set membership: margin < 0. Boundary points are excluded.
    bool contains(cplx w) const { return margin(w) < 0.0; }

    /// A boundary parameterization covering the boundary as t sweeps
    /// [0, 2pi). The lemniscate has two lobes (around +1 and -1); one
    /// call sweeps a single lobe, selected by the flag.
    cplx boundary_point(double t, int lobe = 0) const {
        return std::visit([&](const auto& r) { return boundary_impl(r, t, lobe); },
                          v_);
    }

    /// All superordinates in the catalog fix h(0) = 1.
    static constexpr cplx center_value() { return cplx{1.0, 0.0}; }

    std::string describe() const {
        if (std::holds_alternative<ExpDisk>(v_)) return "expdisk";
        if (std::holds_alternative<Lemniscate>(v_)) return "lemniscate";
        const auto& m = std::get<MoebiusDisk>(v_);
        auto fmt = [](cplx z) {
            return "(" + std::to_string(z.real()) + "," + std::to_string(z.imag()) +
                   ")";
        };
        return "moebius a=" + fmt(m.a) + " b=" + fmt(m.b) + " c=" + fmt(m.c) +
               " d=" + fmt(m.d) + " k=" + std::to_string(m.k);
    }

private:
    explicit Region(Variant v) : v_(v) {}

    static double margin_impl(const ExpDisk&, cplx w) {
        if (w == cplx{0.0, 0.0}) return std::numeric_limits<double>::infinity();
        return std::abs(std::log(w)) - 1.0;
    }
    static double margin_impl(const MoebiusDisk& r, cplx w) {
        cplx den = r.c * w + r.d;
        if (den == cplx{0.0, 0.0})
            return std::numeric_limits<double>::infinity();  // pole hit
        return std::abs((r.a * w + r.b) / den) - r.k;
    }
    static double margin_impl(const Lemniscate&, cplx w) {
        return std::abs(w * w - 1.0) - 1.0;
    }

    static cplx boundary_impl(const ExpDisk&, double t, int) {
        return std::exp(std::polar(1.0, t));
    }
    static cplx boundary_impl(const MoebiusDisk& r, double t, int) {
        cplx u = std::polar(r.k, t);
        cplx den = r.a - r.c * u;
        if (den == cplx{0.0, 0.0})
            throw Error("boundary parameter maps to infinity");
        return (r.d * u - r.b) / den;
    }
    static cplx boundary_impl(const Lemniscate&, double t, int lobe) {
        cplx w = std::sqrt(cplx{1.0, 0.0} + std::polar(1.0, t));
        return lobe == 0 ? w : -w;
    }

    Variant v_;
};

/// Region spec mini-language used by the CLI:
///   expdisk
///   disk:c=<re>,<im>,rho=<r>
///   moebius:a=<re>,<im>,b=<re>,<im>,c=<re>,<im>,d=<re>,<im>,k=<k>
///   lemniscate
inline Region parse_region(const std::string& spec) {
    if (spec == "expdisk") return Region::expdisk();
    if (spec == "lemniscate") return Region::lemniscate();
    auto grab = [&](const std::string& key, int count) {
        std::regex re(key + "=(-?[0-9.eE+-]+)" +
                      (count == 2 ? std::string(",(-?[0-9.eE+-]+)") : std::string()));
        std::smatch m;
        if (!std::regex_search(spec, m, re))
            throw ParseError("region spec missing field '" + key + "': " + spec);
        double re0 = std::stod(m[1]);
        double im0 = count == 2 ? std::stod(m[2]) : 0.0;
        return cplx{re0, im0};
    };
    if (spec.rfind("disk:", 0) == 0) {
        cplx c = grab("c", 2);
        double rho = grab("rho", 1).real();
        if (rho <= 0) throw ParseError("disk radius must be positive");
        return Region::disk(c, rho);
    }
    if (spec.rfind("moebius:", 0) == 0) {
        cplx a = grab("a", 2), b = grab("b", 2), c = grab("c", 2), d = grab("d", 2);
        double k = grab("k", 1).real();
        if (k <= 0) throw ParseError("moebius radius must be positive");
        return Region::moebius(a, b, c, d, k);
    }
    throw ParseError("unrecognized region spec: " + spec);
}

}  // namespace subordlab
