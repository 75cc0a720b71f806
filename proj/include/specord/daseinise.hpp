#pragma once

// Approximating a Hermitian operator from inside a small commutative context:
// the outer approximation pushes each level of the right-continuous family
// down into the context (shrinking the family enlarges the operator), the
// inner approximation pushes each level of the left-continuous family up
// (enlarging the family shrinks the operator).  Both results commute with
// every context atom, sandwich the original in the spectral order, and keep
// their spectra inside the original spectrum.

#include <utility>
#include <vector>

#include "specord/hermitian.hpp"
#include "specord/qobservable.hpp"
#include "specord/spectral_family.hpp"

namespace specord {

namespace detail {

enum class DasMode { PushDown, PushUp };

inline HermitianOperator das_transform(const SpectralFamily& fam, const AbelianContext& ctx,
                                       DasMode mode, const Tolerance& tol) {
    std::vector<SpectralJump> jumps;
    for (const auto& j : fam.jumps()) {
        Projection q = (mode == DasMode::PushDown) ? inner_daseinisation(j.proj, ctx)
                                                   : outer_daseinisation(j.proj, ctx);
        if (q.is_zero()) continue;
        if (!jumps.empty()) {
            if (!proj_leq(jumps.back().proj, q, tol))
                throw InternalInvariantViolation("das_transform: approximation lost monotonicity");
            if (proj_equal(jumps.back().proj, q, tol)) continue;
        }
        jumps.push_back({j.at, std::move(q)});
    }
    if (jumps.empty() || !jumps.back().proj.is_identity())
        throw InternalInvariantViolation("das_transform: family does not reach the identity");
    return SpectralFamily(fam.continuity(), std::move(jumps), tol).to_operator();
}

}  // namespace detail

inline HermitianOperator das_outer(const HermitianOperator& a, const AbelianContext& ctx) {
    if (a.matrix().dim() != ctx.dim())
        throw DimMismatch("das_outer: operator and context dimensions differ");
    return detail::das_transform(SpectralFamily::from_operator(a, Continuity::Right), ctx,
                                 detail::DasMode::PushDown, a.tolerance());
}

inline HermitianOperator das_inner(const HermitianOperator& a, const AbelianContext& ctx) {
    if (a.matrix().dim() != ctx.dim())
        throw DimMismatch("das_inner: operator and context dimensions differ");
    return detail::das_transform(SpectralFamily::from_operator(a, Continuity::Left), ctx,
                                 detail::DasMode::PushUp, a.tolerance());
}

struct DaseinisedPair {
    HermitianOperator outer;
    HermitianOperator inner;
};

inline DaseinisedPair daseinise(const HermitianOperator& a, const AbelianContext& ctx) {
    return DaseinisedPair{das_outer(a, ctx), das_inner(a, ctx)};
}

// The outer approximation does not change observable values on projections
// that already live in the context.
inline bool restriction_check_outer(const HermitianOperator& a, const AbelianContext& ctx,
                                    double slack) {
    HermitianOperator outer = das_outer(a, ctx);
    QObservable oa(a), oo(outer);
    for (const auto& p : ctx.lattice())
        if (!ext_close(oo.value(p), oa.value(p), slack)) return false;
    return true;
}

// The inner approximation preserves both the right-adjoint values and the
// antonymous values on context projections.
inline bool restriction_check_inner(const HermitianOperator& a, const AbelianContext& ctx,
                                    double slack) {
    HermitianOperator inner = das_inner(a, ctx);
    for (const auto& p : ctx.lattice()) {
        if (!ext_close(right_adjoint_value(inner, p), right_adjoint_value(a, p), slack))
            return false;
        if (!ext_close(antonymous_value(inner, p), antonymous_value(a, p), slack)) return false;
    }
    return true;
}

// For an operator commuting with the context, evaluating its observable
// function on an arbitrary projection equals evaluating it on that
// projection's outer approximation into the context.  Equality is exact
// because both evaluations read the same spectral family.
inline bool domain_extension_check(const HermitianOperator& a, const AbelianContext& ctx,
                                   std::span<const Projection> sample) {
    const double scale = std::max(1.0, a.matrix().max_abs());
    for (const auto& q : ctx.atoms()) {
        ComplexMatrix comm = a.matrix() * q.matrix() - q.matrix() * a.matrix();
        if (comm.max_abs() > a.tolerance().proj * scale)
            throw NotInContext("domain_extension_check: operator does not commute with context");
    }
    QObservable oa(a);
    for (const auto& p : sample) {
        if (!(oa.value(p) == oa.value(outer_daseinisation(p, ctx)))) return false;
    }
    return true;
}

inline bool domain_extension_check(const HermitianOperator& a, const AbelianContext& ctx,
                                   const std::vector<Projection>& sample) {
    return domain_extension_check(a, ctx, std::span<const Projection>(sample));
}

}  // namespace specord
