#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "subordlab/power_series.hpp"
#include "subordlab/schwarz.hpp"

namespace subordlab {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

/// A sampled analytic function: its label plus a second-order jet
/// evaluator (p, z p', z^2 p'').
struct CorpusFunction {
    std::string label;
    std::function<Jet(cplx)> jet;

    cplx operator()(cplx z) const { return jet(z).value; }
};

namespace detail {

/// Uniform double in [0, 1) from the top 53 bits; identical across
/// platforms for a given seed, unlike std::uniform_real_distribution.
inline double u01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform point of the closed disk of the given radius.
inline cplx disk_point(std::mt19937_64& rng, double radius) {
    double r = radius * std::sqrt(u01(rng));
    double a = 2.0 * std::numbers::pi * u01(rng);
    return std::polar(r, a);
}

}  // namespace detail

/// count exponentials e^{c w(z)} with w a random Blaschke-type Schwarz
/// function (at most max_zeros zeros) and |c| <= 1, so every member is
/// subordinate to e^z by construction.
inline std::vector<CorpusFunction> schwarz_corpus(int count,
                                                  std::uint64_t seed = kDefaultSeed,
                                                  int max_zeros = 3) {
    std::mt19937_64 rng(seed);
    std::vector<CorpusFunction> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        int k = static_cast<int>(detail::u01(rng) * (max_zeros + 1));
        if (k > max_zeros) k = max_zeros;
        std::vector<cplx> zeros;
        for (int j = 0; j < k; ++j)
            zeros.push_back(detail::disk_point(rng, 0.9));
        cplx rot = std::polar(1.0, 2.0 * std::numbers::pi * detail::u01(rng));
        cplx scale = detail::disk_point(rng, 1.0);
        ExpComposed f(SchwarzFunction(std::move(zeros), rot), scale);
        out.push_back({"schwarz#" + std::to_string(i),
                       [f](cplx z) { return f.jet(z); }});
    }
    return out;
}

/// count random truncated series 1 + sum a_k z^k with the coefficient
/// envelope |a_k| <= envelope^k. Unconstrained: members need not be
/// subordinate to anything.
inline std::vector<CorpusFunction> series_corpus(int count,
                                                 std::uint64_t seed = kDefaultSeed,
                                                 double envelope = 0.5,
                                                 int order = PowerSeries::default_order) {
    std::mt19937_64 rng(seed ^ 0x9E3779B97F4A7C15ull);
    std::vector<CorpusFunction> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        std::vector<cplx> coeffs(static_cast<std::size_t>(order) + 1);
        coeffs[0] = 1.0;
        double env = 1.0;
        for (int k = 1; k <= order; ++k) {
            env *= envelope;
            coeffs[static_cast<std::size_t>(k)] = detail::disk_point(rng, env);
        }
        PowerSeries p = PowerSeries::ham(std::move(coeffs), 1.0, 1);
        out.push_back({"series#" + std::to_string(i),
                       [p](cplx z) { return p.jet(z); }});
    }
    return out;
}

/// The standard mixed corpus: 500 subordinate-by-construction
/// exponentials plus 500 unconstrained random series.
inline std::vector<CorpusFunction> standard_corpus(std::uint64_t seed = kDefaultSeed) {
    std::vector<CorpusFunction> out = schwarz_corpus(500, seed);
    std::vector<CorpusFunction> tail = series_corpus(500, seed);
    out.insert(out.end(), std::make_move_iterator(tail.begin()),
               std::make_move_iterator(tail.end()));
    return out;
}

/// Exponential family p_c(z) = e^{cz} over a real parameter grid; used
/// by the below-bound counterexample scan.
inline std::vector<CorpusFunction> exp_family(double c_lo, double c_hi,
                                              int count) {
    std::vector<CorpusFunction> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        double c = count == 1 ? c_lo : c_lo + (c_hi - c_lo) * i / (count - 1);
        out.push_back({"exp(c=" + std::to_string(c) + ")", [c](cplx z) {
                           cplx p = std::exp(c * z);
                           return Jet{p, c * z * p, c * c * z * z * p};
                       }});
    }
    return out;
}

}  // namespace subordlab
