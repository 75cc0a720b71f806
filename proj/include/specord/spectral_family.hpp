#pragma once

// Spectral families at finite dimension: finitely many jumps, each recording
// the cumulative projection from the smallest eigenvalue up.  One jump list
// serves both continuity conventions; only evaluation differs.
//
//   Right:  E(r) = sum of eigenprojections with eigenvalue <= r
//   Left:   F(r) = sum of eigenprojections with eigenvalue <  r
//
// The right-continuous version extends to r = -inf with 0 and r = +inf with
// 1; the left-continuous one is the completion from below of the same data
// (its value jumps just *after* each listed point).  Validity of a jump list
// means: strictly ascending finite jump values, strictly increasing
// projections, top projection equal to the identity.

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "specord/errors.hpp"
#include "specord/extreal.hpp"
#include "specord/hermitian.hpp"
#include "specord/projection.hpp"
#include "specord/tolerance.hpp"

namespace specord {

enum class Continuity { Right, Left };

struct SpectralJump {
    double at;
    Projection proj;  // cumulative
};

// Diagnostic validation of raw jump data; returns human-readable violations,
// empty when the data is a well-formed family for dimension `dim`.
inline std::vector<std::string> validate_family(std::span<const SpectralJump> jumps, int dim,
                                                const Tolerance& tol = default_tolerance()) {
    std::vector<std::string> out;
    if (jumps.empty()) {
        out.push_back("family has no jumps");
        return out;
    }
    for (size_t k = 0; k < jumps.size(); ++k) {
        const auto& j = jumps[k];
        if (!std::isfinite(j.at))
            out.push_back("jump " + std::to_string(k) + ": non-finite jump value");
        if (j.proj.dim() != dim)
            out.push_back("jump " + std::to_string(k) + ": projection dimension != " +
                          std::to_string(dim));
    }
    if (!out.empty()) return out;
    for (size_t k = 1; k < jumps.size(); ++k) {
        if (!(jumps[k - 1].at < jumps[k].at))
            out.push_back("jump values not strictly ascending at index " + std::to_string(k));
        if (!proj_leq(jumps[k - 1].proj, jumps[k].proj, tol))
            out.push_back("projections not increasing at index " + std::to_string(k));
        else if (proj_equal(jumps[k - 1].proj, jumps[k].proj, tol))
            out.push_back("projection does not grow at index " + std::to_string(k) +
                          " (redundant jump)");
    }
    const auto& top = jumps.back().proj;
    if (top.rank() != dim || !proj_equal(top, Projection::identity(dim), tol))
        out.push_back("top projection is not the identity");
    return out;
}

inline std::vector<std::string> validate_family(const std::vector<SpectralJump>& jumps, int dim,
                                                const Tolerance& tol = default_tolerance()) {
    return validate_family(std::span<const SpectralJump>(jumps), dim, tol);
}

class SpectralFamily {
public:
    SpectralFamily(Continuity cont, std::vector<SpectralJump> jumps,
                   const Tolerance& tol = default_tolerance())
        : cont_(cont), jumps_(std::move(jumps)), tol_(tol) {
        if (jumps_.empty()) throw InvalidFamily("SpectralFamily: no jumps");
        const int n = jumps_.front().proj.dim();
        auto violations = validate_family(jumps_, n, tol_);
        if (!violations.empty())
            throw InvalidFamily("SpectralFamily: " + violations.front());
        dim_ = n;
    }

    // The family of a Hermitian operator: cumulative sums of its cluster
    // projections, one jump per distinct (clustered) eigenvalue.
    static SpectralFamily from_operator(const HermitianOperator& a, Continuity cont) {
        std::vector<SpectralJump> jumps;
        ComplexMatrix acc = ComplexMatrix::zero(a.dim());
        int rank = 0;
        for (const auto& c : a.eig().clusters) {
            acc = acc + c.projection.matrix();
            rank += c.projection.rank();
            jumps.push_back({c.value, Projection::unchecked(acc, rank)});
        }
        return SpectralFamily(cont, std::move(jumps), a.tolerance());
    }

    Continuity continuity() const { return cont_; }
    int dim() const { return dim_; }
    const std::vector<SpectralJump>& jumps() const { return jumps_; }
    const Tolerance& tolerance() const { return tol_; }

    std::vector<double> jump_points() const {
        std::vector<double> out;
        out.reserve(jumps_.size());
        for (const auto& j : jumps_) out.push_back(j.at);
        return out;
    }

    // Family value at r, honouring the continuity convention at the jumps.
    Projection evaluate(const ExtendedReal& r) const {
        if (r.is_neg_inf()) return Projection::zero(dim_);
        if (r.is_pos_inf()) return jumps_.back().proj;
        const double x = r.value();
        // Number of jumps at or before x (Right) / strictly before x (Left).
        size_t k;
        if (cont_ == Continuity::Right) {
            k = static_cast<size_t>(std::upper_bound(jumps_.begin(), jumps_.end(), x,
                                                     [](double v, const SpectralJump& j) {
                                                         return v < j.at;
                                                     }) -
                                    jumps_.begin());
        } else {
            k = static_cast<size_t>(std::lower_bound(jumps_.begin(), jumps_.end(), x,
                                                     [](const SpectralJump& j, double v) {
                                                         return j.at < v;
                                                     }) -
                                    jumps_.begin());
        }
        if (k == 0) return Projection::zero(dim_);
        return jumps_[k - 1].proj;
    }

    Projection evaluate(double r) const { return evaluate(ExtendedReal::finite(r)); }

    // Reassemble the operator: sum of jump value times eigenspace increment.
    HermitianOperator to_operator() const {
        ComplexMatrix m = ComplexMatrix::zero(dim_);
        ComplexMatrix prev = ComplexMatrix::zero(dim_);
        for (const auto& j : jumps_) {
            m = m + j.at * (j.proj.matrix() - prev);
            prev = j.proj.matrix();
        }
        return HermitianOperator(m.hermitian_part(), tol_);
    }

    // Same jump data under the other convention.
    SpectralFamily with_continuity(Continuity cont) const {
        if (cont == cont_) return *this;
        return SpectralFamily(cont, jumps_, tol_);
    }

private:
    Continuity cont_;
    std::vector<SpectralJump> jumps_;
    Tolerance tol_;
    int dim_ = 0;
};

}  // namespace specord
