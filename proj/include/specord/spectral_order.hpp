#pragma once

// The spectral order on Hermitian operators:
//   A <=_s B  iff  E^A(r) >= E^B(r) for every r
// decided on the merged jump grid (families are constant between jumps, so
// the finitely many grid points are sufficient).  Meets and joins come from
// the pointwise lattice operations on families: a *larger* family means a
// *smaller* operator, so the meet takes pointwise joins of the families and
// the join takes pointwise meets.  Both searches in here exist to exhibit
// the standard failures of the linear order against the spectral one:
// squaring does not preserve the linear order, and translation does not
// preserve the spectral one.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "specord/hermitian.hpp"
#include "specord/qobservable.hpp"
#include "specord/random.hpp"
#include "specord/spectral_family.hpp"

namespace specord {

struct OrderWitness {
    double r;
    Projection family_a;  // E^A(r)
    Projection family_b;  // E^B(r)
};

struct OrderVerdict {
    bool leq_s = false;
    bool leq_linear = false;
    std::vector<OrderWitness> witnesses;  // grid points where E^A(r) >= E^B(r) fails
};

namespace detail {

// Jump values from several families, merged and then clustered: values that
// agree up to the cluster gap count as one level, represented by the cluster
// maximum so every family has completed its jumps there.  Families are step
// functions, so checking these levels checks everywhere.
inline std::vector<double> merged_jump_grid(std::span<const SpectralFamily> fams, double gap) {
    std::vector<double> grid;
    for (const auto& f : fams)
        for (double r : f.jump_points()) grid.push_back(r);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    std::vector<double> levels;
    for (auto [start, count] : cluster_ascending(grid, gap))
        levels.push_back(grid[static_cast<size_t>(start + count - 1)]);
    return levels;
}

inline double joint_scale(std::span<const HermitianOperator> ops) {
    double s = 0.0;
    for (const auto& op : ops) s = std::max(s, op.matrix().max_abs());
    return s;
}

}  // namespace detail

inline OrderVerdict spectral_leq(const HermitianOperator& a, const HermitianOperator& b) {
    check_same_dim(a.matrix(), b.matrix(), "spectral_leq");
    const Tolerance& tol = a.tolerance();

    OrderVerdict v;
    const auto ea = SpectralFamily::from_operator(a, Continuity::Right);
    const auto eb = SpectralFamily::from_operator(b, Continuity::Right);
    std::vector<SpectralFamily> fams = {ea, eb};
    const double gap = tol.cluster_gap(std::max(a.matrix().max_abs(), b.matrix().max_abs()));
    v.leq_s = true;
    for (double r : detail::merged_jump_grid(fams, gap)) {
        Projection pa = ea.evaluate(r);
        Projection pb = eb.evaluate(r);
        if (!proj_leq(pb, pa, tol)) {
            v.leq_s = false;
            v.witnesses.push_back({r, pa, pb});
        }
    }
    v.leq_linear = is_psd(HermitianOperator((b.matrix() - a.matrix()).hermitian_part(), tol));
    return v;
}

inline HermitianOperator spectral_meet(std::span<const HermitianOperator> ops) {
    if (ops.empty()) throw Error("spectral_meet: empty input");
    const Tolerance& tol = ops.front().tolerance();
    std::vector<SpectralFamily> fams;
    for (const auto& op : ops) {
        check_same_dim(op.matrix(), ops.front().matrix(), "spectral_meet");
        fams.push_back(SpectralFamily::from_operator(op, Continuity::Right));
    }

    std::vector<SpectralJump> jumps;
    for (double r : detail::merged_jump_grid(fams, tol.cluster_gap(detail::joint_scale(ops)))) {
        std::vector<Projection> at_r;
        at_r.reserve(fams.size());
        for (const auto& f : fams) at_r.push_back(f.evaluate(r));
        Projection g = join_many(at_r, tol);
        if (!jumps.empty() && !proj_leq(jumps.back().proj, g, tol))
            throw InternalInvariantViolation("spectral_meet: pointwise joins lost monotonicity");
        if (g.is_zero()) continue;
        if (!jumps.empty() && proj_equal(jumps.back().proj, g, tol)) continue;
        jumps.push_back({r, Projection::clean(g.matrix(), tol)});
    }
    if (jumps.empty() || !jumps.back().proj.is_identity())
        throw InternalInvariantViolation("spectral_meet: family does not reach the identity");
    return SpectralFamily(Continuity::Right, std::move(jumps), tol).to_operator();
}

inline HermitianOperator spectral_join(std::span<const HermitianOperator> ops) {
    if (ops.empty()) throw Error("spectral_join: empty input");
    const Tolerance& tol = ops.front().tolerance();
    std::vector<SpectralFamily> fams;
    for (const auto& op : ops) {
        check_same_dim(op.matrix(), ops.front().matrix(), "spectral_join");
        fams.push_back(SpectralFamily::from_operator(op, Continuity::Right));
    }

    std::vector<SpectralJump> jumps;
    for (double r : detail::merged_jump_grid(fams, tol.cluster_gap(detail::joint_scale(ops)))) {
        std::vector<Projection> at_r;
        at_r.reserve(fams.size());
        for (const auto& f : fams) at_r.push_back(f.evaluate(r));
        Projection h = meet_many(at_r, tol);
        if (!jumps.empty() && !proj_leq(jumps.back().proj, h, tol))
            throw InternalInvariantViolation("spectral_join: pointwise meets lost monotonicity");
        if (h.is_zero()) continue;
        if (!jumps.empty() && proj_equal(jumps.back().proj, h, tol)) continue;
        jumps.push_back({r, Projection::clean(h.matrix(), tol)});
    }
    if (jumps.empty() || !jumps.back().proj.is_identity())
        throw InternalInvariantViolation("spectral_join: family does not reach the identity");
    return SpectralFamily(Continuity::Right, std::move(jumps), tol).to_operator();
}

inline HermitianOperator spectral_meet(const std::vector<HermitianOperator>& ops) {
    return spectral_meet(std::span<const HermitianOperator>(ops));
}
inline HermitianOperator spectral_join(const std::vector<HermitianOperator>& ops) {
    return spectral_join(std::span<const HermitianOperator>(ops));
}

// Probe: does A^n <= B^n linearly for all n up to n_max?  A consistency
// check against the power characterisation of the spectral order, never a
// decision procedure for it (n is unbounded in the real statement).
inline bool power_order_check(const HermitianOperator& a, const HermitianOperator& b, int n_max) {
    check_same_dim(a.matrix(), b.matrix(), "power_order_check");
    if (n_max < 1) throw Error("power_order_check: n_max must be >= 1");
    if (!is_psd(a) || !is_psd(b))
        throw NotPSD("power_order_check: operators must be positive semidefinite");
    const Tolerance& tol = a.tolerance();
    ComplexMatrix pa = a.matrix();
    ComplexMatrix pb = b.matrix();
    for (int n = 1; n <= n_max; ++n) {
        if (n > 1) {
            pa = (pa * a.matrix()).hermitian_part();
            pb = (pb * b.matrix()).hermitian_part();
        }
        if (!is_psd(HermitianOperator((pb - pa).hermitian_part(), tol))) return false;
    }
    return true;
}

struct LinearNotSpectralPair {
    HermitianOperator a;
    HermitianOperator b;
    int power_fail_n = 0;  // first n with A^n <= B^n failing linearly
};

// Randomized search for a PSD pair with A <= B linearly but A not <=_s B,
// where the failure also shows up in a small power (kept with the witness).
inline std::optional<LinearNotSpectralPair> linear_not_spectral_witness(
    int dim, uint64_t seed, int max_trials = 100000,
    const Tolerance& tol = default_tolerance()) {
    if (dim < 2) return std::nullopt;
    Rng rng(seed);
    for (int trial = 0; trial < max_trials; ++trial) {
        ComplexMatrix g1 = random_hermitian(rng, dim, 1.0);
        ComplexMatrix g2 = random_hermitian(rng, dim, 1.0);
        ComplexMatrix base = (g1 * g1).hermitian_part();   // PSD
        ComplexMatrix step = (g2 * g2).hermitian_part();   // PSD
        HermitianOperator a(base, tol);
        HermitianOperator b((base + step).hermitian_part(), tol);
        auto v = spectral_leq(a, b);
        if (!v.leq_linear || v.leq_s) continue;
        for (int n = 2; n <= 6; ++n) {
            if (!power_order_check(a, b, n)) {
                return LinearNotSpectralPair{a, b, n};
            }
        }
    }
    return std::nullopt;
}

struct SpectralTranslationTriple {
    HermitianOperator a;
    HermitianOperator b;
    HermitianOperator c;
};

// Randomized search for A <=_s B and a C with A + C not <=_s B + C: the
// spectral order is not translation-invariant (not a vector lattice) unless
// everything commutes, so dim >= 2 finds a triple quickly and dim = 1 never
// does.
inline std::optional<SpectralTranslationTriple> vector_lattice_counterexample(
    int dim, uint64_t seed, int max_trials = 100000,
    const Tolerance& tol = default_tolerance()) {
    Rng rng(seed);
    for (int trial = 0; trial < max_trials; ++trial) {
        HermitianOperator a(random_hermitian(rng, dim, 1.0), tol);
        HermitianOperator r(random_hermitian(rng, dim, 1.0), tol);
        std::vector<HermitianOperator> pair = {a, r};
        HermitianOperator b = spectral_join(pair);
        if (spectral_leq(b, a).leq_s) continue;  // want a strict pair
        HermitianOperator c(random_hermitian(rng, dim, 1.0), tol);
        HermitianOperator ac((a.matrix() + c.matrix()).hermitian_part(), tol);
        HermitianOperator bc((b.matrix() + c.matrix()).hermitian_part(), tol);
        if (!spectral_leq(a, b).leq_s)
            throw InternalInvariantViolation(
                "vector_lattice_counterexample: join is not above its argument");
        if (!spectral_leq(ac, bc).leq_s) return SpectralTranslationTriple{a, b, c};
    }
    return std::nullopt;
}

}  // namespace specord
