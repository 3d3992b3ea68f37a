#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <future>
#include <limits>
#include <numbers>
#include <thread>
#include <tuple>
#include <vector>

#include "subordlab/psi.hpp"
#include "subordlab/region.hpp"

namespace subordlab {

/// A point of the admissibility set for q = e^z:
///   r = e^{e^{i theta}},  s = m e^{i theta} r,  t = s (nu - 1)
/// with theta in [0, 2pi), m >= 1 and Re(nu) >= m(1 + cos theta), so
/// that Re(1 + t/s) = Re(nu) meets the admissibility constraint.
struct AdmissibilityPoint {
    double theta = 0.0;
    double m = 1.0;
    cplx nu = 0.0;

    cplx r() const { return std::exp(std::polar(1.0, theta)); }
    cplx s() const { return m * std::polar(1.0, theta) * r(); }
    cplx t() const { return s() * (nu - 1.0); }
};

struct GridSpec {
    int theta_points = 4096;
    int m_points = 64;
    double m_max = 32.0;
    // nu window for t-dependent expressions:
    //   Re(nu) in [m(1+cos theta), m(1+cos theta)+nu_re_span]
    //   Im(nu) in [-nu_im_span, nu_im_span]
    double nu_re_span = 50.0;
    double nu_im_span = 50.0;
    int nu_points = 17;  // per axis; odd so Im = 0 lands on the grid
    // t-dependent scans use a reduced theta x m grid to keep the
    // four-dimensional sweep tractable.
    int theta_points_t = 1024;
    int m_points_t = 32;
    double refine_tol = 1e-9;
    double admissible_tol = 1e-7;
    int jobs = 0;  // 0 = hardware concurrency
};

struct AdmissibilityReport {
    bool admissible = false;
    double min_margin = 0.0;
    AdmissibilityPoint argmin;
    GridSpec grid_spec;
    long long samples = 0;
};

/// Region margin of psi at an admissibility point, with evaluation
/// errors (poles, division by zero) mapped to the +inf "outside"
/// sentinel. This is the principal-branch margin.
inline double exclusion_margin(const PsiExpr& psi, const Region& region,
                               const AdmissibilityPoint& pt) {
    try {
        return region.margin(psi.eval(pt.r(), pt.s(), pt.t()));
    } catch (const DivisionByZero&) {
        return std::numeric_limits<double>::infinity();
    }
}

namespace detail {

/// Exclusion metric used by the minimizer. For Moebius/lemniscate
/// targets this is the plain region margin. For the exp-disk it is the
/// proof-form lower bound
///   sqrt(ln^2|w| + atan^2(Im w / Re w)) - 1
/// which bounds |log w| - 1 from below (the atan drops quadrant
/// information). When the lower bound is negative it is inconclusive,
/// and the principal-branch distance is used instead; the sign of the
/// result therefore still decides membership exactly.
inline double proof_margin(const Region& region, cplx w) {
    if (!std::holds_alternative<ExpDisk>(region.variant()))
        return region.margin(w);
    if (w == cplx{0.0, 0.0}) return std::numeric_limits<double>::infinity();
    double lg = std::log(std::abs(w));
    double a = w.real() == 0.0 ? std::numbers::pi / 2
                               : std::atan(w.imag() / w.real());
    double lower = std::sqrt(lg * lg + a * a) - 1.0;
    if (lower >= 0.0) return lower;
    return std::abs(std::log(w)) - 1.0;
}

inline double proof_margin_at(const PsiExpr& psi, const Region& region,
                              const AdmissibilityPoint& pt) {
    try {
        return proof_margin(region, psi.eval(pt.r(), pt.s(), pt.t()));
    } catch (const DivisionByZero&) {
        return std::numeric_limits<double>::infinity();
    }
}

struct Best {
    double margin = std::numeric_limits<double>::infinity();
    AdmissibilityPoint pt;

    // deterministic lexicographic order: margin, then theta, then m
    bool better(double mg, const AdmissibilityPoint& p) const {
        if (mg != margin) return mg < margin;
        if (p.theta != pt.theta) return p.theta < pt.theta;
        return p.m < pt.m;
    }
    void consider(double mg, const AdmissibilityPoint& p) {
        if (better(mg, p)) {
            margin = mg;
            pt = p;
        }
    }
    void merge(const Best& o) { consider(o.margin, o.pt); }
};

/// Golden-section minimization of a 1-d slice on [lo, hi].
template <typename F>
double golden_min(F&& f, double lo, double hi, double tol) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return fc < fd ? c : d;
}

}  // namespace detail

/// Global scan for the minimum exclusion margin of psi over the
/// admissibility set: coarse theta x m (x nu) grid followed by
/// coordinate-wise golden-section refinement. Deterministic regardless
/// of worker count.
inline AdmissibilityReport min_exclusion(const PsiExpr& psi, const Region& region,
                                         const GridSpec& grid = {}) {
    const bool with_t = psi.uses_t();
    const int nth = with_t ? grid.theta_points_t : grid.theta_points;
    const int nm = with_t ? grid.m_points_t : grid.m_points;
    const double two_pi = 2.0 * std::numbers::pi;
    const double dtheta = two_pi / nth;
    const double log_mmax = std::log(grid.m_max);

    std::vector<double> ms(static_cast<std::size_t>(nm));
    for (int i = 0; i < nm; ++i)
        ms[static_cast<std::size_t>(i)] =
            std::exp(log_mmax * i / std::max(1, nm - 1));

    auto eval_point = [&](const AdmissibilityPoint& pt) {
        return detail::proof_margin_at(psi, region, pt);
    };

    auto scan_chunk = [&](int begin, int end) {
        detail::Best best;
        for (int it = begin; it < end; ++it) {
            double theta = it * dtheta;
            for (double m : ms) {
                if (!with_t) {
                    AdmissibilityPoint pt{theta, m, cplx{0.0, 0.0}};
                    best.consider(eval_point(pt), pt);
                    continue;
                }
                double re0 = m * (1.0 + std::cos(theta));
                for (int i = 0; i < grid.nu_points; ++i) {
                    double re = re0 + grid.nu_re_span * i / (grid.nu_points - 1);
                    for (int jj = 0; jj < grid.nu_points; ++jj) {
                        double im = -grid.nu_im_span +
                                    2.0 * grid.nu_im_span * jj / (grid.nu_points - 1);
                        AdmissibilityPoint pt{theta, m, cplx{re, im}};
                        best.consider(eval_point(pt), pt);
                    }
                }
            }
        }
        return best;
    };

    int jobs = grid.jobs > 0
                   ? grid.jobs
                   : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min(jobs, nth);
    detail::Best best;
    if (jobs <= 1) {
        best = scan_chunk(0, nth);
    } else {
        std::vector<std::future<detail::Best>> parts;
        int chunk = (nth + jobs - 1) / jobs;
        for (int b = 0; b < nth; b += chunk)
            parts.push_back(std::async(std::launch::async, scan_chunk, b,
                                       std::min(nth, b + chunk)));
        for (auto& f : parts) best.merge(f.get());
    }

    // Coordinate-wise golden-section refinement around the grid argmin.
    AdmissibilityPoint pt = best.pt;
    double dm = pt.m * (std::exp(log_mmax / std::max(1, nm - 1)) - 1.0);
    for (int round = 0; round < 6; ++round) {
        double th = detail::golden_min(
            [&](double x) {
                AdmissibilityPoint q = pt;
                q.theta = x;
                if (with_t)
                    q.nu += cplx{q.m * (1.0 + std::cos(x)) -
                                     pt.m * (1.0 + std::cos(pt.theta)),
                                 0.0};
                return eval_point(q);
            },
            pt.theta - 2.0 * dtheta, pt.theta + 2.0 * dtheta, grid.refine_tol);
        pt.theta = th;
        double mlo = std::max(1.0, pt.m - 2.0 * dm);
        double mhi = std::min(grid.m_max, pt.m + 2.0 * dm);
        if (mhi > mlo) {
            double mmin = detail::golden_min(
                [&](double x) {
                    AdmissibilityPoint q = pt;
                    q.m = x;
                    if (with_t)
                        q.nu += cplx{x * (1.0 + std::cos(pt.theta)) -
                                         pt.m * (1.0 + std::cos(pt.theta)),
                                     0.0};
                    return eval_point(q);
                },
                mlo, mhi, grid.refine_tol);
            pt.m = mmin;
        }
        if (with_t) {
            double base = pt.m * (1.0 + std::cos(pt.theta));
            double step_re = grid.nu_re_span / (grid.nu_points - 1);
            double re = detail::golden_min(
                [&](double x) {
                    AdmissibilityPoint q = pt;
                    q.nu = cplx{x, pt.nu.imag()};
                    return eval_point(q);
                },
                std::max(base, pt.nu.real() - 2.0 * step_re),
                std::min(base + grid.nu_re_span, pt.nu.real() + 2.0 * step_re),
                grid.refine_tol);
            pt.nu = cplx{re, pt.nu.imag()};
            double step_im = 2.0 * grid.nu_im_span / (grid.nu_points - 1);
            double im = detail::golden_min(
                [&](double x) {
                    AdmissibilityPoint q = pt;
                    q.nu = cplx{pt.nu.real(), x};
                    return eval_point(q);
                },
                std::max(-grid.nu_im_span, pt.nu.imag() - 2.0 * step_im),
                std::min(grid.nu_im_span, pt.nu.imag() + 2.0 * step_im),
                grid.refine_tol);
            pt.nu = cplx{pt.nu.real(), im};
        }
    }
    // Keep theta in [0, 2pi) and snap back to the grid winner if
    // refinement wandered upward.
    if (pt.theta < 0.0) pt.theta += two_pi;
    if (pt.theta >= two_pi) pt.theta -= two_pi;
    double refined = eval_point(pt);
    if (refined > best.margin) {
        pt = best.pt;
        refined = best.margin;
    }

    AdmissibilityReport report;
    report.min_margin = refined;
    report.argmin = pt;
    report.grid_spec = grid;
    report.admissible = refined >= -grid.admissible_tol;
    report.samples = static_cast<long long>(nth) * nm *
                     (with_t ? static_cast<long long>(grid.nu_points) *
                                   grid.nu_points
                             : 1);
    return report;
}

}  // namespace subordlab
