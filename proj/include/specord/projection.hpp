#pragma once

// Orthogonal projections and the lattice operations on them.
//
// The order is P <= Q  iff  QP = P (Q acts as identity on ran P), decided
// numerically as ||QP - P||_max <= proj_tol.  Meet and join of possibly
// non-commuting projections go through kernels:
//   meet(P, Q) = projection onto ker((1-P) + (1-Q))
//   join(P, Q) = 1 - meet(1-P, 1-Q)
// since x is in ran P  n  ran Q  exactly when the PSD operator
// (1-P) + (1-Q) annihilates x.  Every computed projection is cleaned by
// re-diagonalising and snapping eigenvalues to {0,1}, so tolerance drift
// does not compound across chained lattice operations.

#include <cmath>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "specord/eigen.hpp"
#include "specord/errors.hpp"
#include "specord/matrix.hpp"
#include "specord/tolerance.hpp"

namespace specord {

class Projection {
public:
    // Validating constructor: Hermitian, idempotent, near-integral trace.
    explicit Projection(ComplexMatrix m, const Tolerance& tol = default_tolerance())
        : m_(std::move(m)), rank_(0) {
        if (!m_.is_hermitian(tol.herm))
            throw InvalidProjection("Projection: matrix is not Hermitian");
        m_ = m_.hermitian_part();
        if (max_abs_diff(m_ * m_, m_) > tol.proj)
            throw InvalidProjection("Projection: matrix is not idempotent");
        const double tr = m_.trace().real();
        rank_ = static_cast<int>(std::lround(tr));
        if (std::abs(tr - rank_) > tol.proj * m_.dim() || rank_ < 0 || rank_ > m_.dim())
            throw InvalidProjection("Projection: trace is not a valid rank");
    }

    static Projection zero(int n) { return unchecked(ComplexMatrix::zero(n), 0); }
    static Projection identity(int n) { return unchecked(ComplexMatrix::identity(n), n); }

    // Rank-one projection onto the span of v (need not be normalised).
    static Projection onto_vector(const std::vector<Complex>& v) {
        const int n = static_cast<int>(v.size());
        double nrm2 = 0.0;
        for (const auto& z : v) nrm2 += std::norm(z);
        if (nrm2 <= 0.0) throw InvalidProjection("Projection::onto_vector: zero vector");
        ComplexMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m.at(i, j) = v[static_cast<size_t>(i)] * std::conj(v[static_cast<size_t>(j)]) / nrm2;
        return unchecked(m.hermitian_part(), 1);
    }

    // Projection onto the span of selected orthonormal columns of u.
    static Projection from_columns(const ComplexMatrix& u, const std::vector<int>& cols) {
        const int n = u.dim();
        ComplexMatrix m(n);
        for (int c : cols)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    m.at(i, j) += u.at(i, c) * std::conj(u.at(j, c));
        return unchecked(m.hermitian_part(), static_cast<int>(cols.size()));
    }

    // Re-diagonalise an approximate projection and snap eigenvalues to {0,1}.
    // Rejects anything with an eigenvalue far from both.
    static Projection clean(const ComplexMatrix& approx, const Tolerance& tol = default_tolerance()) {
        RawEigen e = jacobi_eigh(approx, tol.herm);
        std::vector<int> keep;
        for (int k = 0; k < approx.dim(); ++k) {
            const double v = e.values[static_cast<size_t>(k)];
            if (std::abs(v - 1.0) <= 0.1) keep.push_back(k);
            else if (std::abs(v) > 0.1)
                throw InvalidProjection("Projection::clean: eigenvalue far from {0,1}");
        }
        return from_columns(e.vectors, keep);
    }

    int dim() const { return m_.dim(); }
    int rank() const { return rank_; }
    const ComplexMatrix& matrix() const { return m_; }

    bool is_zero() const { return rank_ == 0; }
    bool is_identity() const { return rank_ == m_.dim(); }

    // Trusted constructor for matrices that are projections by construction
    // (sums of orthogonal projections, selected eigenvector columns).  Keeps
    // the O(n^3) validation out of hot enumeration loops.
    static Projection unchecked(ComplexMatrix m, int rank) {
        return Projection(Private{}, std::move(m), rank);
    }

private:
    struct Private {};
    Projection(Private, ComplexMatrix m, int rank) : m_(std::move(m)), rank_(rank) {}

    ComplexMatrix m_;
    int rank_;
};

inline bool proj_equal(const Projection& p, const Projection& q,
                       const Tolerance& tol = default_tolerance()) {
    check_same_dim(p.matrix(), q.matrix(), "proj_equal");
    return max_abs_diff(p.matrix(), q.matrix()) <= tol.proj;
}

// P <= Q in the projection order: Q fixes ran P.
inline bool proj_leq(const Projection& p, const Projection& q,
                     const Tolerance& tol = default_tolerance()) {
    check_same_dim(p.matrix(), q.matrix(), "proj_leq");
    if (p.rank() > q.rank()) return false;
    return max_abs_diff(q.matrix() * p.matrix(), p.matrix()) <= tol.proj;
}

inline Projection complement(const Projection& p) {
    return Projection::unchecked(ComplexMatrix::identity(p.dim()) - p.matrix(),
                                 p.dim() - p.rank());
}

// Projection onto the kernel of a PSD matrix: the span of eigenvectors with
// eigenvalue <= kernel_tol.  The caller vouches for positivity; eigenvalues
// below -kernel_tol trip the invariant check.
inline Projection kernel_projection_of_matrix(const ComplexMatrix& psd,
                                              const Tolerance& tol = default_tolerance()) {
    RawEigen e = jacobi_eigh(psd, tol.herm);
    std::vector<int> keep;
    for (int k = 0; k < psd.dim(); ++k) {
        const double v = e.values[static_cast<size_t>(k)];
        if (v < -tol.kernel)
            throw InternalInvariantViolation(
                "kernel_projection_of_matrix: negative eigenvalue in PSD input");
        if (v <= tol.kernel) keep.push_back(k);
    }
    return Projection::from_columns(e.vectors, keep);
}

inline Projection meet(const Projection& p, const Projection& q,
                       const Tolerance& tol = default_tolerance()) {
    check_same_dim(p.matrix(), q.matrix(), "meet");
    if (proj_leq(p, q, tol)) return p;
    if (proj_leq(q, p, tol)) return q;
    const ComplexMatrix gap = complement(p).matrix() + complement(q).matrix();
    return kernel_projection_of_matrix(gap, tol);
}

inline Projection join(const Projection& p, const Projection& q,
                       const Tolerance& tol = default_tolerance()) {
    check_same_dim(p.matrix(), q.matrix(), "join");
    if (proj_leq(p, q, tol)) return q;
    if (proj_leq(q, p, tol)) return p;
    return complement(meet(complement(p), complement(q), tol));
}

inline Projection meet_many(std::span<const Projection> ps,
                            const Tolerance& tol = default_tolerance()) {
    if (ps.empty()) throw Error("meet_many: empty input (dimension unknown)");
    // Kernel of the summed complements handles the whole set in one shot.
    ComplexMatrix gap = ComplexMatrix::zero(ps.front().dim());
    bool all_identity = true;
    for (const auto& p : ps) {
        check_same_dim(p.matrix(), ps.front().matrix(), "meet_many");
        if (!p.is_identity()) all_identity = false;
        gap = gap + complement(p).matrix();
    }
    if (all_identity) return ps.front();
    return kernel_projection_of_matrix(gap, tol);
}

inline Projection join_many(std::span<const Projection> ps,
                            const Tolerance& tol = default_tolerance()) {
    if (ps.empty()) throw Error("join_many: empty input (dimension unknown)");
    std::vector<Projection> comps;
    comps.reserve(ps.size());
    for (const auto& p : ps) comps.push_back(complement(p));
    return complement(meet_many(comps, tol));
}

inline Projection meet_many(const std::vector<Projection>& ps,
                            const Tolerance& tol = default_tolerance()) {
    return meet_many(std::span<const Projection>(ps), tol);
}
inline Projection join_many(const std::vector<Projection>& ps,
                            const Tolerance& tol = default_tolerance()) {
    return join_many(std::span<const Projection>(ps), tol);
}

// A maximal abelian subalgebra presented by its atoms: pairwise orthogonal
// nonzero projections summing to the identity.  The projection lattice it
// generates is Boolean with one element per atom subset; `element(mask)`
// addresses it by bitmask without materialising the whole lattice, and
// `lattice()` enumerates all 2^k elements in mask order (capped at k = 16).
class AbelianContext {
public:
    explicit AbelianContext(std::vector<Projection> atoms,
                            const Tolerance& tol = default_tolerance())
        : d_(std::make_shared<Data>()), tol_(tol) {
        if (atoms.empty()) throw InvalidProjection("AbelianContext: no atoms");
        const int n = atoms.front().dim();
        ComplexMatrix sum = ComplexMatrix::zero(n);
        for (size_t i = 0; i < atoms.size(); ++i) {
            check_same_dim(atoms[i].matrix(), atoms.front().matrix(), "AbelianContext");
            if (atoms[i].is_zero())
                throw InvalidProjection("AbelianContext: zero atom");
            for (size_t j = i + 1; j < atoms.size(); ++j)
                if ((atoms[i].matrix() * atoms[j].matrix()).max_abs() > tol.proj)
                    throw InvalidProjection("AbelianContext: atoms are not orthogonal");
            sum = sum + atoms[i].matrix();
        }
        if (max_abs_diff(sum, ComplexMatrix::identity(n)) > tol.proj)
            throw InvalidProjection("AbelianContext: atoms do not sum to the identity");
        d_->atoms = std::move(atoms);
    }

    int dim() const { return d_->atoms.front().dim(); }
    int atom_count() const { return static_cast<int>(d_->atoms.size()); }
    const std::vector<Projection>& atoms() const { return d_->atoms; }
    const Tolerance& tolerance() const { return tol_; }

    // Sum of the atoms selected by mask bits.  Exact: orthogonal summands.
    Projection element(uint32_t mask) const {
        const int k = atom_count();
        if (mask >= (uint32_t{1} << k))
            throw Error("AbelianContext::element: mask out of range");
        ComplexMatrix m = ComplexMatrix::zero(dim());
        int rank = 0;
        for (int i = 0; i < k; ++i) {
            if (mask & (uint32_t{1} << i)) {
                m = m + d_->atoms[static_cast<size_t>(i)].matrix();
                rank += d_->atoms[static_cast<size_t>(i)].rank();
            }
        }
        return Projection::unchecked(std::move(m), rank);
    }

    // All 2^k lattice elements in mask order; cached after the first call.
    const std::vector<Projection>& lattice() const {
        const int k = atom_count();
        if (k > 16)
            throw TooManyAtoms("AbelianContext::lattice: " + std::to_string(k) +
                               " atoms (limit 16, 2^k elements)");
        std::call_once(d_->lattice_once, [this, k] {
            const uint32_t count = uint32_t{1} << k;
            d_->lattice.reserve(count);
            for (uint32_t mask = 0; mask < count; ++mask)
                d_->lattice.push_back(element(mask));
        });
        return d_->lattice;
    }

private:
    struct Data {
        std::vector<Projection> atoms;
        std::once_flag lattice_once;
        std::vector<Projection> lattice;
    };
    std::shared_ptr<Data> d_;
    Tolerance tol_;
};

inline std::vector<Projection> enumerate_lattice(const AbelianContext& ctx) {
    return ctx.lattice();
}

// Smallest context element above P: the sum of atoms that do not annihilate
// P.  Left adjoint of the lattice inclusion.
inline Projection outer_daseinisation(const Projection& p, const AbelianContext& ctx) {
    check_same_dim(p.matrix(), ctx.atoms().front().matrix(), "outer_daseinisation");
    const Tolerance& tol = ctx.tolerance();
    uint32_t mask = 0;
    for (int i = 0; i < ctx.atom_count(); ++i)
        if ((ctx.atoms()[static_cast<size_t>(i)].matrix() * p.matrix()).max_abs() > tol.proj)
            mask |= uint32_t{1} << i;
    return ctx.element(mask);
}

// Largest context element below P: the sum of atoms contained in ran P.
// Right adjoint of the lattice inclusion.
inline Projection inner_daseinisation(const Projection& p, const AbelianContext& ctx) {
    check_same_dim(p.matrix(), ctx.atoms().front().matrix(), "inner_daseinisation");
    const Tolerance& tol = ctx.tolerance();
    uint32_t mask = 0;
    for (int i = 0; i < ctx.atom_count(); ++i)
        if (proj_leq(ctx.atoms()[static_cast<size_t>(i)], p, tol))
            mask |= uint32_t{1} << i;
    return ctx.element(mask);
}

}  // namespace specord
