#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "subordlab/errors.hpp"
#include "subordlab/power_series.hpp"

namespace subordlab {

/// Finite Blaschke-type Schwarz function
///   w(z) = rotation * z * prod_k (z - z_k)/(1 - conj(z_k) z)
/// with w(0) = 0 and |w| < 1 on the open unit disk. Composing any
/// superordinate q with w yields a function subordinate to q by
/// construction.
class SchwarzFunction {
public:
    SchwarzFunction(std::vector<cplx> zeros, cplx rotation)
        : zeros_(std::move(zeros)), rotation_(rotation) {
        for (const cplx& a : zeros_)
            if (std::abs(a) >= 1.0)
                throw InvalidZero("Blaschke zero with modulus >= 1");
        double rmod = std::abs(rotation_);
        if (rmod == 0.0) throw Error("rotation must be unimodular");
        rotation_ /= rmod;
    }

    const std::vector<cplx>& zeros() const { return zeros_; }
    cplx rotation() const { return rotation_; }

    cplx operator()(cplx z) const {
        cplx w = rotation_ * z;
        for (const cplx& a : zeros_) w *= (z - a) / (1.0 - std::conj(a) * z);
        return w;
    }

    /// (w, w', w'') assembled by pairwise product rule over the factors.
    void jet(cplx z, cplx& w, cplx& dw, cplx& ddw) const {
        // start from the factor rotation * z
        w = rotation_ * z;
        dw = rotation_;
        ddw = 0.0;
        for (const cplx& a : zeros_) {
            cplx den = 1.0 - std::conj(a) * z;
            cplx b = (z - a) / den;
            cplx db = (1.0 - std::norm(a)) / (den * den);
            cplx ddb = 2.0 * std::conj(a) * (1.0 - std::norm(a)) / (den * den * den);
            cplx nw = w * b;
            cplx ndw = dw * b + w * db;
            cplx nddw = ddw * b + 2.0 * dw * db + w * ddb;
            w = nw;
            dw = ndw;
            ddw = nddw;
        }
    }

private:
    std::vector<cplx> zeros_;
    cplx rotation_;
};

/// p = exp(c * w(z)) with w a Schwarz function; p is subordinate to e^z
/// whenever |c| <= 1. Provides the full second-order jet.
class ExpComposed {
public:
    ExpComposed(SchwarzFunction w, cplx scale = 1.0)
        : w_(std::move(w)), scale_(scale) {}

    cplx operator()(cplx z) const { return std::exp(scale_ * w_(z)); }

    Jet jet(cplx z) const {
        cplx w, dw, ddw;
        w_.jet(z, w, dw, ddw);
        cplx p = std::exp(scale_ * w);
        cplx dp = scale_ * dw * p;
        cplx ddp = (scale_ * ddw + scale_ * scale_ * dw * dw) * p;
        return {p, z * dp, z * z * ddp};
    }

private:
    SchwarzFunction w_;
    cplx scale_;
};

}  // namespace subordlab
