#pragma once

#include <cmath>
#include <future>
#include <optional>
#include <thread>
#include <vector>

#include "subordlab/corpus.hpp"
#include "subordlab/power_series.hpp"
#include "subordlab/psi.hpp"
#include "subordlab/region.hpp"

namespace subordlab {

enum class Status { holds, fails, inconclusive };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::holds: return "holds";
        case Status::fails: return "fails";
        default: return "inconclusive";
    }
}

struct Witness {
    cplx z;
    cplx value;
    double margin;
};

struct Verdict {
    Status status = Status::inconclusive;
    std::optional<Witness> witness;
    long long samples_checked = 0;
};

struct SubGrid {
    std::vector<double> radii = {0.9, 0.99, 0.999};
    int theta_points = 4096;
    double tol = 1e-9;
    int jobs = 0;  // 0 = hardware concurrency (corpus-level parallelism)
};

/// Numerical subordination test against a univalent superordinate's
/// image region: p(0) must match the region's center value and every
/// boundary-circle sample must land strictly inside with margin < -tol.
/// Fails with the first witness at margin >= 0; violations confined to
/// (-tol, 0) — or evaluation breakdowns — yield "inconclusive".
template <typename F>
Verdict is_subordinate_numeric(F&& p, const Region& region,
                               const SubGrid& grid = {}) {
    Verdict v;
    auto value_at = [&](cplx z, bool& ok) -> cplx {
        try {
            ok = true;
            return p(z);
        } catch (const Error&) {
            ok = false;
            return {};
        }
    };

    bool ok = false;
    cplx center = value_at(cplx{0.0, 0.0}, ok);
    ++v.samples_checked;
    if (!ok) {
        v.status = Status::inconclusive;
        return v;
    }
    if (std::abs(center - Region::center_value()) > grid.tol) {
        v.status = Status::fails;
        v.witness = Witness{0.0, center, region.margin(center)};
        return v;
    }

    bool grazing = false;
    for (double r : grid.radii) {
        for (int i = 0; i < grid.theta_points; ++i) {
            double th = 2.0 * std::numbers::pi * i / grid.theta_points;
            cplx z = std::polar(r, th);
            cplx w = value_at(z, ok);
            ++v.samples_checked;
            if (!ok) {
                grazing = true;
                continue;
            }
            double m = region.margin(w);
            if (m >= 0.0) {
                v.status = Status::fails;
                v.witness = Witness{z, w, m};
                return v;
            }
            if (m > -grid.tol) grazing = true;
        }
    }
    v.status = grazing ? Status::inconclusive : Status::holds;
    return v;
}

/// p evaluated through psi: z -> psi(p(z), z p'(z), z^2 p''(z); z).
inline auto psi_values(const PsiExpr& psi, const CorpusFunction& f) {
    return [&psi, jet = f.jet](cplx z) { return psi.eval_jet(jet(z), z); };
}

struct ImplicationRecord {
    int functions = 0;
    int hypothesis_holders = 0;
    int violations = 0;
    std::vector<int> violation_indices;
};

/// Corroborates "psi-values in hypothesis ==> p subordinate to the
/// conclusion" over a corpus. Parallel over functions; aggregation is by
/// corpus index, so results are independent of worker count.
inline ImplicationRecord implication_test(const PsiExpr& psi,
                                          const Region& hypothesis,
                                          const Region& conclusion,
                                          const std::vector<CorpusFunction>& corpus,
                                          const SubGrid& grid = {}) {
    ImplicationRecord rec;
    rec.functions = static_cast<int>(corpus.size());
    if (corpus.empty()) return rec;

    enum class Outcome { skipped, held, violated };
    std::vector<Outcome> outcome(corpus.size(), Outcome::skipped);

    auto run_one = [&](std::size_t i) {
        const CorpusFunction& f = corpus[i];
        Verdict hyp = is_subordinate_numeric(psi_values(psi, f), hypothesis, grid);
        if (hyp.status != Status::holds) return;
        Verdict con = is_subordinate_numeric(f, conclusion, grid);
        outcome[i] = con.status == Status::fails ? Outcome::violated : Outcome::held;
    };

    int jobs = grid.jobs > 0 ? grid.jobs
                             : static_cast<int>(
                                   std::max(1u, std::thread::hardware_concurrency()));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < corpus.size(); ++i) run_one(i);
    } else {
        std::vector<std::future<void>> parts;
        std::size_t chunk =
            (corpus.size() + static_cast<std::size_t>(jobs) - 1) /
            static_cast<std::size_t>(jobs);
        for (std::size_t b = 0; b < corpus.size(); b += chunk)
            parts.push_back(std::async(std::launch::async, [&, b] {
                for (std::size_t i = b; i < std::min(corpus.size(), b + chunk); ++i)
                    run_one(i);
            }));
        for (auto& f : parts) f.get();
    }

    for (std::size_t i = 0; i < outcome.size(); ++i) {
        if (outcome[i] == Outcome::skipped) continue;
        ++rec.hypothesis_holders;
        if (outcome[i] == Outcome::violated) {
            ++rec.violations;
            rec.violation_indices.push_back(static_cast<int>(i));
        }
    }
    return rec;
}

/// Is f in the exp-starlike class: z f'(z)/f(z) subordinate to e^z.
/// Denominator breakdowns surface as inconclusive samples.
inline Verdict starlike_e_membership(const PowerSeries& f,
                                     const SubGrid& grid = {}) {
    return is_subordinate_numeric(
        [&f](cplx z) { return log_quotient(f, z); }, Region::expdisk(), grid);
}

/// Scans a family for a function where the hypothesis holds but the
/// conclusion fails; used below the bounds, where the theorems are
/// silent. Returns the first such index within budget, or nothing.
inline std::optional<int> counterexample_search(
    const PsiExpr& psi, const Region& hypothesis, const Region& conclusion,
    const std::vector<CorpusFunction>& family, int budget,
    const SubGrid& grid = {}) {
    int limit = std::min<int>(budget, static_cast<int>(family.size()));
    for (int i = 0; i < limit; ++i) {
        Verdict hyp = is_subordinate_numeric(psi_values(psi, family[static_cast<std::size_t>(i)]),
                                             hypothesis, grid);
        if (hyp.status != Status::holds) continue;
        Verdict con = is_subordinate_numeric(family[static_cast<std::size_t>(i)],
                                             conclusion, grid);
        if (con.status == Status::fails) return i;
    }
    return std::nullopt;
}

}  // namespace subordlab
