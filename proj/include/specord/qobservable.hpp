#pragma once

// Observable and antonymous functions of a Hermitian operator, viewed
// through its spectral family.
//
// For the right-continuous family E and a projection P:
//   observable_value(P)    = min { r : P <= E(r) }      (-inf at P = 0)
// i.e. the left adjoint of E as a map from the extended reals into the
// projection lattice.  For the left-continuous family F:
//   right_adjoint_value(P) = sup { r : F(r) <= P }      (+inf at P = 1)
//   antonymous_value(P)    = right_adjoint_value(1 - P)
// With finitely many jumps both extrema are attained at jump values, so
// evaluation is a scan over the jump list and results are exact doubles
// from that list.
//
// family_from_observable reverses the direction: given sampled values of a
// candidate observable function on a finite sublattice it rebuilds the jump
// list E(r) = join { P : value(P) <= r } and cross-checks the sample, which
// is exactly what makes the function "abstractly" an observable one:
// join preservation plus finiteness off the bottom (a) and at the top (b).

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "specord/extreal.hpp"
#include "specord/hermitian.hpp"
#include "specord/projection.hpp"
#include "specord/spectral_family.hpp"

namespace specord {

// min { r : P <= E(r) } over the jump list of a right-continuous family.
inline ExtendedReal left_adjoint_value(const SpectralFamily& fam, const Projection& p) {
    if (fam.continuity() != Continuity::Right)
        throw Error("left_adjoint_value: family must be right-continuous");
    if (p.dim() != fam.dim())
        throw DimMismatch("left_adjoint_value: projection dimension mismatch");
    if (p.is_zero()) return ExtendedReal::neg_inf();
    const Tolerance& tol = fam.tolerance();
    for (const auto& j : fam.jumps())
        if (proj_leq(p, j.proj, tol)) return ExtendedReal::finite(j.at);
    throw InternalInvariantViolation(
        "left_adjoint_value: projection not below the top of the family");
}

// sup { r : F(r) <= P } over the jump list of a left-continuous family.
inline ExtendedReal right_adjoint_value(const SpectralFamily& fam, const Projection& p) {
    if (fam.continuity() != Continuity::Left)
        throw Error("right_adjoint_value: family must be left-continuous");
    if (p.dim() != fam.dim())
        throw DimMismatch("right_adjoint_value: projection dimension mismatch");
    if (p.is_identity()) return ExtendedReal::pos_inf();
    const Tolerance& tol = fam.tolerance();
    const auto& jumps = fam.jumps();
    // F(r) <= P holds up to and including the first jump value whose
    // cumulative projection escapes P.
    for (size_t k = 0; k < jumps.size(); ++k)
        if (!proj_leq(jumps[k].proj, p, tol)) return ExtendedReal::finite(jumps[k].at);
    throw InternalInvariantViolation(
        "right_adjoint_value: identity projection slipped past the rank check");
}

class QObservable {
public:
    explicit QObservable(const HermitianOperator& a)
        : fam_(SpectralFamily::from_operator(a, Continuity::Right)) {}

    explicit QObservable(SpectralFamily fam) : fam_(std::move(fam)) {
        if (fam_.continuity() != Continuity::Right)
            throw Error("QObservable: family must be right-continuous");
    }

    const SpectralFamily& family() const { return fam_; }
    int dim() const { return fam_.dim(); }

    ExtendedReal value(const Projection& p) const { return left_adjoint_value(fam_, p); }
    ExtendedReal operator()(const Projection& p) const { return value(p); }

private:
    SpectralFamily fam_;
};

class QAntonymous {
public:
    explicit QAntonymous(const HermitianOperator& a)
        : fam_(SpectralFamily::from_operator(a, Continuity::Left)) {}

    explicit QAntonymous(SpectralFamily fam) : fam_(std::move(fam)) {
        if (fam_.continuity() != Continuity::Left)
            throw Error("QAntonymous: family must be left-continuous");
    }

    const SpectralFamily& family() const { return fam_; }
    int dim() const { return fam_.dim(); }

    ExtendedReal value(const Projection& p) const {
        return right_adjoint_value(fam_, complement(p));
    }
    ExtendedReal operator()(const Projection& p) const { return value(p); }

private:
    SpectralFamily fam_;
};

inline ExtendedReal observable_value(const HermitianOperator& a, const Projection& p) {
    return left_adjoint_value(SpectralFamily::from_operator(a, Continuity::Right), p);
}

inline ExtendedReal right_adjoint_value(const HermitianOperator& a, const Projection& p) {
    return right_adjoint_value(SpectralFamily::from_operator(a, Continuity::Left), p);
}

inline ExtendedReal antonymous_value(const HermitianOperator& a, const Projection& p) {
    return right_adjoint_value(SpectralFamily::from_operator(a, Continuity::Left),
                               complement(p));
}

// Distinct observable values over the nonzero projections of a sample,
// ascending.  On a rich enough sample this is the spectrum at cluster
// resolution: values are always drawn from the jump list.
inline std::vector<ExtendedReal> image_on_nonzero(const QObservable& o,
                                                  std::span<const Projection> sample) {
    std::vector<ExtendedReal> out;
    for (const auto& p : sample) {
        if (p.is_zero()) continue;
        const ExtendedReal v = o.value(p);
        bool seen = false;
        for (const auto& w : out) seen = seen || (w == v);
        if (!seen) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<ExtendedReal> image_on_nonzero(const HermitianOperator& a,
                                                  std::span<const Projection> sample) {
    return image_on_nonzero(QObservable(a), sample);
}

// One sampled point of a candidate observable function.
struct ObservableSample {
    Projection proj;
    ExtendedReal value;
};

// Rebuild a right-continuous spectral family from sampled function values,
// validating the defining conditions along the way.  The sample must contain
// the identity projection (otherwise condition (b), finiteness at the top,
// cannot be witnessed) and is cross-checked against the rebuilt family.
inline SpectralFamily family_from_observable(std::span<const ObservableSample> data, int dim,
                                             const Tolerance& tol = default_tolerance()) {
    using NAQ = NotAbstractQObservable;
    if (data.empty())
        throw NAQ(NAQ::Condition::ConditionB, "family_from_observable: empty sample");

    bool has_top = false;
    for (const auto& s : data) {
        if (s.proj.dim() != dim)
            throw DimMismatch("family_from_observable: projection dimension mismatch");
        if (s.proj.is_zero()) {
            if (s.value != ExtendedReal::neg_inf())
                throw NAQ(NAQ::Condition::JoinPreservation,
                          "family_from_observable: value at the zero projection must be -inf "
                          "(empty join)");
            continue;
        }
        if (s.value == ExtendedReal::neg_inf())
            throw NAQ(NAQ::Condition::ConditionA,
                      "family_from_observable: -inf at a nonzero projection");
        if (s.value.is_pos_inf() && s.proj.is_identity())
            throw NAQ(NAQ::Condition::ConditionB,
                      "family_from_observable: +inf at the identity projection");
        if (s.proj.is_identity()) has_top = true;
    }
    if (!has_top)
        throw NAQ(NAQ::Condition::ConditionB,
                  "family_from_observable: sample does not contain the identity projection");

    // Monotonicity on comparable sampled pairs comes first; a violation here
    // can produce a jump list that validates yet contradicts the data.
    for (const auto& a : data)
        for (const auto& b : data)
            if (proj_leq(a.proj, b.proj, tol) && !(a.value <= b.value))
                throw NAQ(NAQ::Condition::JoinPreservation,
                          "family_from_observable: sample is not monotone");

    std::vector<double> levels;
    for (const auto& s : data)
        if (s.value.is_finite()) levels.push_back(s.value.value());
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    if (levels.empty())
        throw NAQ(NAQ::Condition::ConditionB, "family_from_observable: no finite values");

    std::vector<SpectralJump> jumps;
    for (double r : levels) {
        std::vector<Projection> below;
        for (const auto& s : data)
            if (s.value <= ExtendedReal::finite(r)) below.push_back(s.proj);
        Projection e = below.empty() ? Projection::zero(dim) : join_many(below, tol);
        if (e.is_zero()) continue;
        if (!jumps.empty() && proj_equal(jumps.back().proj, e, tol)) continue;
        if (!jumps.empty() && !proj_leq(jumps.back().proj, e, tol))
            throw InternalInvariantViolation("family_from_observable: joins not monotone");
        jumps.push_back({r, e});
    }
    if (jumps.empty() || !jumps.back().proj.is_identity())
        throw NAQ(NAQ::Condition::JoinPreservation,
                  "family_from_observable: sampled joins never reach the identity");

    SpectralFamily fam(Continuity::Right, std::move(jumps), tol);

    // Round trip: the rebuilt family must reproduce every sampled value.
    // Failure means the sample was not join-preserving.
    for (const auto& s : data) {
        const ExtendedReal back = left_adjoint_value(fam, s.proj);
        if (back != s.value)
            throw NAQ(NAQ::Condition::JoinPreservation,
                      "family_from_observable: rebuilt family disagrees with the sample at a "
                      "projection (not join-preserving)");
    }
    return fam;
}

inline SpectralFamily family_from_observable(const std::vector<ObservableSample>& data, int dim,
                                             const Tolerance& tol = default_tolerance()) {
    return family_from_observable(std::span<const ObservableSample>(data), dim, tol);
}

// Pointwise comparison of observable values over a sample; with a sample
// containing both operators' jump projections this decides the spectral
// order (see spectral_order.hpp for the family-side decision).  The slack
// absorbs sub-cluster differences in jump values between independently
// decomposed operators; zero keeps the comparison exact.
inline bool order_compare_via_observable(const HermitianOperator& a, const HermitianOperator& b,
                                         std::span<const Projection> sample, double slack = 0.0) {
    QObservable oa(a), ob(b);
    for (const auto& p : sample) {
        ExtendedReal va = oa.value(p);
        ExtendedReal vb = ob.value(p);
        if (va.is_neg_inf() || vb.is_pos_inf()) continue;
        if (va.is_pos_inf() || vb.is_neg_inf()) return false;
        if (!(va.raw() <= vb.raw() + slack)) return false;
    }
    return true;
}

}  // namespace specord
