#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

#include "subordlab/errors.hpp"

namespace subordlab {

using cplx = std::complex<double>;

/// Jet of an analytic function at a point: (p(z), z p'(z), z^2 p''(z)).
struct Jet {
    cplx value;
    cplx zdp;
    cplx z2ddp;
};

enum class SeriesClass {
    Ham,          // H[a,n]: a + a_n z^n + ...
    NormalizedH,  // f(0) = 0, f'(0) = 1
};

/// Truncated power series with complex coefficients, immutable after
/// construction. Default truncation order used by generators is 64.
class PowerSeries {
public:
    static constexpr int default_order = 64;
    static constexpr double denominator_floor = 1e-12;

    /// H[a,n] series. Checks a_0 = a and a_1 = ... = a_{n-1} = 0.
    static PowerSeries ham(std::vector<cplx> coeffs, cplx a, int n) {
        if (coeffs.empty()) coeffs.push_back(a);
        if (coeffs[0] != a)
            throw Error("H[a,n] series must have a_0 = a");
        if (n < 1 || static_cast<std::size_t>(n) >= coeffs.size() + 1)
            throw Error("H[a,n] requires N >= n >= 1");
        for (int k = 1; k < n && static_cast<std::size_t>(k) < coeffs.size(); ++k)
            if (coeffs[k] != cplx{0.0, 0.0})
                throw Error("H[a,n] series must have a_1 = ... = a_{n-1} = 0");
        return PowerSeries(std::move(coeffs), SeriesClass::Ham, a, n);
    }

    /// Normalized series: a_0 = 0, a_1 = 1.
    static PowerSeries normalized(std::vector<cplx> coeffs) {
        if (coeffs.size() < 2 || coeffs[0] != cplx{0.0, 0.0} ||
            coeffs[1] != cplx{1.0, 0.0})
            throw Error("normalized series must satisfy f(0)=0, f'(0)=1");
        return PowerSeries(std::move(coeffs), SeriesClass::NormalizedH, 0.0, 1);
    }

    /// Truncated e^z (an H[1,1] member).
    static PowerSeries exp_series(int order = default_order) {
        std::vector<cplx> c(static_cast<std::size_t>(order) + 1);
        double term = 1.0;
        c[0] = 1.0;
        for (int k = 1; k <= order; ++k) {
            term /= k;
            c[static_cast<std::size_t>(k)] = term;
        }
        return ham(std::move(c), 1.0, 1);
    }

    /// Truncated z e^{cz}, normalized.
    static PowerSeries z_exp(double c, int order = default_order) {
        std::vector<cplx> v(static_cast<std::size_t>(order) + 1, 0.0);
        double term = 1.0;
        v[1] = 1.0;
        for (int k = 1; k < order; ++k) {
            term *= c / k;
            v[static_cast<std::size_t>(k) + 1] = term;
        }
        return normalized(std::move(v));
    }

    /// Truncated Koebe function z/(1-z)^2 = sum k z^k.
    static PowerSeries koebe(int order = default_order) {
        std::vector<cplx> v(static_cast<std::size_t>(order) + 1, 0.0);
        for (int k = 1; k <= order; ++k) v[static_cast<std::size_t>(k)] = k;
        return normalized(std::move(v));
    }

    const std::vector<cplx>& coefficients() const { return coeffs_; }
    SeriesClass series_class() const { return cls_; }
    cplx constant() const { return a_; }
    int order_n() const { return n_; }
    int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Horner evaluation of the stored polynomial.
    cplx eval(cplx z) const {
        cplx acc = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * z + *it;
        return acc;
    }

    /// (p(z), z p'(z), z^2 p''(z)) in one pass, consistent with
    /// term-by-term differentiation of the coefficient list.
    Jet jet(cplx z) const {
        cplx p = 0.0, dp = 0.0, ddp = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            ddp = ddp * z + 2.0 * dp;
            dp = dp * z + p;
            p = p * z + *it;
        }
        return {p, z * dp, z * z * ddp};
    }

    PowerSeries truncated(int order) const {
        std::vector<cplx> c(coeffs_.begin(),
                            coeffs_.begin() + std::min<std::size_t>(
                                                  coeffs_.size(),
                                                  static_cast<std::size_t>(order) + 1));
        return PowerSeries(std::move(c), cls_, a_, n_);
    }

private:
    PowerSeries(std::vector<cplx> c, SeriesClass cls, cplx a, int n)
        : coeffs_(std::move(c)), cls_(cls), a_(a), n_(n) {}

    std::vector<cplx> coeffs_;
    SeriesClass cls_;
    cplx a_;
    int n_;
};

/// z f'(z)/f(z) with the removable singularity patched at z = 0.
/// Throws ZeroDenominator when |f(z)| is below the floor.
inline cplx log_quotient(const PowerSeries& f, cplx z,
                         double floor = PowerSeries::denominator_floor) {
    if (f.series_class() != SeriesClass::NormalizedH)
        throw Error("log_quotient requires a normalized series");
    if (z == cplx{0.0, 0.0}) return 1.0;
    Jet j = f.jet(z);
    if (std::abs(j.value) < floor)
        throw ZeroDenominator("f(z) below denominator floor");
    return j.zdp / j.value;
}

// JSON coefficient format: array of [re, im] pairs, index = power.
// Implemented in power_series_io.hpp to keep nlohmann/json out of hot paths.

}  // namespace subordlab
