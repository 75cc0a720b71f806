#pragma once

// Monotone piecewise-linear functions on the extended reals and their action
// on Hermitian operators.
//
//   breakpoints (x_1,y_1) <= ... <= (x_m,y_m), slopes s_l, s_r >= 0
//   two breakpoints sharing an x encode a jump: the value AT x is the first
//   y, values just after x start from the second, so the function is left
//   continuous and preserves suprema; -inf maps to -inf, +inf maps to the
//   terminal plateau value when the right slope vanishes and to +inf
//   otherwise.
//
// Sup-preserving monotone functions are exactly the ones with a right
// adjoint g(r) = sup{x : f(x) <= r}, computed here in closed form per
// segment.  Applying f to an operator rewrites each spectral level, which
// shifts the spectral family by g in the level parameter and composes f
// with the observable-value function.

#include <algorithm>
#include <cmath>
#include <span>
#include <utility>
#include <vector>

#include "specord/extreal.hpp"
#include "specord/hermitian.hpp"
#include "specord/qobservable.hpp"
#include "specord/spectral_family.hpp"

namespace specord {

struct FunctionNode {
    double x;
    double y_at;     // value at x
    double y_after;  // limit from the right
};

class MonotoneExtFunction {
public:
    MonotoneExtFunction(std::vector<std::pair<double, double>> breakpoints, double left_slope,
                        double right_slope)
        : sl_(left_slope), sr_(right_slope) {
        if (!std::isfinite(sl_) || !std::isfinite(sr_))
            throw NonFiniteValue("monotone function: slopes must be finite");
        if (sl_ < 0 || sr_ < 0) throw NotMonotone("monotone function: slopes must be nonnegative");
        for (const auto& [x, y] : breakpoints)
            if (!std::isfinite(x) || !std::isfinite(y))
                throw NonFiniteValue("monotone function: breakpoints must be finite");
        breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());
        if (breakpoints.empty()) throw Error("monotone function: needs at least one breakpoint");
        for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
            if (breakpoints[i].first > breakpoints[i + 1].first)
                throw NotMonotone("monotone function: breakpoints must be ascending in x");
            if (breakpoints[i].second > breakpoints[i + 1].second)
                throw NotMonotone("monotone function: breakpoints must be ascending in y");
        }
        for (size_t i = 0; i < breakpoints.size();) {
            size_t j = i;
            while (j < breakpoints.size() && breakpoints[j].first == breakpoints[i].first) ++j;
            if (j - i > 2)
                throw NotMonotone("monotone function: more than two breakpoints share an x");
            nodes_.push_back({breakpoints[i].first, breakpoints[i].second,
                              breakpoints[j - 1].second});
            i = j;
        }
    }

    static MonotoneExtFunction shift(double t) { return MonotoneExtFunction({{0.0, t}}, 1.0, 1.0); }

    static MonotoneExtFunction scale(double s) {
        if (!(s > 0)) throw Error("monotone function: scale factor must be positive");
        return MonotoneExtFunction({{0.0, 0.0}}, s, s);
    }

    static MonotoneExtFunction identity() { return shift(0.0); }

    const std::vector<FunctionNode>& nodes() const { return nodes_; }
    double left_slope() const { return sl_; }
    double right_slope() const { return sr_; }

    double apply(double x) const {
        const auto& first = nodes_.front();
        const auto& last = nodes_.back();
        if (x <= first.x) return first.y_at + sl_ * (x - first.x);
        if (x > last.x) return last.y_after + sr_ * (x - last.x);
        auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x,
                                   [](double v, const FunctionNode& n) { return v < n.x; });
        const FunctionNode& hi = *it;
        const FunctionNode& lo = *(it - 1);
        if (x == lo.x) return lo.y_at;
        if (hi.x == lo.x) return hi.y_at;
        double t = (x - lo.x) / (hi.x - lo.x);
        return lo.y_after + t * (hi.y_at - lo.y_after);
    }

    ExtendedReal apply_ext(const ExtendedReal& x) const {
        if (x.is_neg_inf()) return ExtendedReal::neg_inf();
        if (x.is_pos_inf())
            return sr_ == 0.0 ? ExtendedReal::finite(nodes_.back().y_after)
                              : ExtendedReal::pos_inf();
        return ExtendedReal::finite(apply(x.value()));
    }

private:
    std::vector<FunctionNode> nodes_;
    double sl_, sr_;
};

// Right adjoint of a sup-preserving function: g(r) = sup{x : f(x) <= r},
// the sup being attained whenever it is finite.
class RightAdjointFn {
public:
    explicit RightAdjointFn(MonotoneExtFunction f) : f_(std::move(f)) {}

    const MonotoneExtFunction& function() const { return f_; }

    ExtendedReal apply_ext(const ExtendedReal& r) const {
        if (r.is_pos_inf()) return ExtendedReal::pos_inf();
        if (r.is_neg_inf()) return ExtendedReal::neg_inf();
        return apply(r.value());
    }

    ExtendedReal apply(double r) const {
        const auto& nodes = f_.nodes();
        const auto& first = nodes.front();
        const auto& last = nodes.back();
        if (r < first.y_at) {
            if (f_.left_slope() == 0.0) return ExtendedReal::neg_inf();
            return ExtendedReal::finite(first.x + (r - first.y_at) / f_.left_slope());
        }
        if (r >= last.y_after) {
            if (f_.right_slope() == 0.0) return ExtendedReal::pos_inf();
            return ExtendedReal::finite(last.x + (r - last.y_after) / f_.right_slope());
        }
        // rightmost node whose value at x is within r
        auto it = std::upper_bound(nodes.begin(), nodes.end(), r,
                                   [](double v, const FunctionNode& n) { return v < n.y_at; });
        const FunctionNode& lo = *(it - 1);
        if (lo.y_after > r) return ExtendedReal::finite(lo.x);  // jump clears r at lo.x
        const FunctionNode& hi = *it;  // exists: r < last.y_after rules out lo == last
        double t = (r - lo.y_after) / (hi.y_at - lo.y_after);   // rising segment, no division by 0
        return ExtendedReal::finite(lo.x + t * (hi.x - lo.x));
    }

private:
    MonotoneExtFunction f_;
};

// Rewrite each spectral level of the operator through the function.
inline HermitianOperator apply_to_operator(const MonotoneExtFunction& f,
                                           const HermitianOperator& a) {
    ComplexMatrix acc = ComplexMatrix::zero(a.matrix().dim());
    for (const auto& c : a.eig().clusters) {
        double fv = f.apply(c.value);
        if (!std::isfinite(fv)) throw NonFiniteValue("apply_to_operator: non-finite image value");
        acc = acc + fv * c.projection.matrix();
    }
    return HermitianOperator(acc.hermitian_part(), a.tolerance());
}

// Canonical probe levels for family comparisons: every jump of the
// transformed operator plus midpoints and points beyond both ends.
inline std::vector<double> family_shift_grid(const HermitianOperator& fa) {
    SpectralFamily fam = SpectralFamily::from_operator(fa, Continuity::Right);
    std::vector<double> rs = fam.jump_points();
    std::vector<double> grid = rs;
    for (size_t i = 0; i + 1 < rs.size(); ++i) grid.push_back(0.5 * (rs[i] + rs[i + 1]));
    grid.push_back(rs.front() - 1.0);
    grid.push_back(rs.back() + 1.0);
    std::sort(grid.begin(), grid.end());
    return grid;
}

// The spectral family of f(A) evaluated at r equals the family of A
// evaluated at the adjoint level g(r).  Both levels are nudged up by half
// the relevant cluster gap before evaluation: reconstruction of f(A) can
// move jump values by a few ulps, g is discontinuous exactly at plateau
// images, and cluster separation guarantees a half-gap nudge never reaches
// the next genuine jump.
inline bool check_family_shift(const HermitianOperator& a, const MonotoneExtFunction& f,
                               std::span<const double> rs) {
    HermitianOperator fa = apply_to_operator(f, a);
    SpectralFamily ea = SpectralFamily::from_operator(a, Continuity::Right);
    SpectralFamily efa = SpectralFamily::from_operator(fa, Continuity::Right);
    RightAdjointFn g(f);
    const double in_nudge = 0.5 * a.tolerance().cluster_gap(fa.matrix().max_abs());
    const double out_nudge = 0.5 * a.tolerance().cluster_gap(a.matrix().max_abs());
    for (double r : rs) {
        ExtendedReal level = g.apply(r + in_nudge);
        if (level.is_finite()) level = ExtendedReal::finite(level.value() + out_nudge);
        if (!proj_equal(efa.evaluate(r + in_nudge), ea.evaluate(level), a.tolerance()))
            return false;
    }
    return true;
}

inline bool check_family_shift(const HermitianOperator& a, const MonotoneExtFunction& f) {
    HermitianOperator fa = apply_to_operator(f, a);
    std::vector<double> grid = family_shift_grid(fa);
    return check_family_shift(a, f, grid);
}

// The observable value of f(A) on a projection is f of the observable value
// of A, up to the cluster resolution of the transformed operator.
inline bool check_observable_composition(const HermitianOperator& a, const MonotoneExtFunction& f,
                                         std::span<const Projection> sample) {
    HermitianOperator fa = apply_to_operator(f, a);
    double slack = a.tolerance().cluster_gap(fa.matrix().max_abs());
    QObservable oa(a), ofa(fa);
    for (const auto& p : sample) {
        if (!ext_close(ofa.value(p), f.apply_ext(oa.value(p)), slack)) return false;
    }
    return true;
}

inline bool check_observable_composition(const HermitianOperator& a, const MonotoneExtFunction& f,
                                         const std::vector<Projection>& sample) {
    return check_observable_composition(a, f, std::span<const Projection>(sample));
}

}  // namespace specord
