#pragma once

// Independent reference implementations used only by tests.  Everything here
// is deliberately written by a different route than the library (column-space
// ranks via Gram-Schmidt, closed-form 2x2 eigenvalues, linear-scan step
// evaluation) so agreement actually means something.

#include <algorithm>
#include <cmath>
#include <vector>

#include "specord/extreal.hpp"
#include "specord/matrix.hpp"
#include "specord/projection.hpp"
#include "specord/spectral_family.hpp"

namespace oracles {

using specord::Complex;
using specord::ComplexMatrix;
using specord::ExtendedReal;
using specord::Projection;

// Rank of the column space of a list of vectors, by modified Gram-Schmidt
// with a drop tolerance.
inline int span_rank(std::vector<std::vector<Complex>> vecs, double tol = 1e-8) {
    int rank = 0;
    std::vector<std::vector<Complex>> basis;
    for (auto& v : vecs) {
        for (const auto& b : basis) {
            Complex dot = 0.0;
            for (size_t i = 0; i < v.size(); ++i) dot += std::conj(b[i]) * v[i];
            for (size_t i = 0; i < v.size(); ++i) v[i] -= dot * b[i];
        }
        double nrm = 0.0;
        for (const auto& z : v) nrm += std::norm(z);
        nrm = std::sqrt(nrm);
        if (nrm > tol) {
            for (auto& z : v) z /= nrm;
            basis.push_back(v);
            ++rank;
        }
    }
    return rank;
}

inline std::vector<std::vector<Complex>> columns_of(const ComplexMatrix& m) {
    std::vector<std::vector<Complex>> out;
    for (int j = 0; j < m.dim(); ++j) {
        std::vector<Complex> col(static_cast<size_t>(m.dim()));
        for (int i = 0; i < m.dim(); ++i) col[static_cast<size_t>(i)] = m.at(i, j);
        out.push_back(std::move(col));
    }
    return out;
}

// dim(ran P + ran Q), the expected rank of the join.
inline int join_rank(const ComplexMatrix& p, const ComplexMatrix& q) {
    auto cols = columns_of(p);
    for (auto& c : columns_of(q)) cols.push_back(c);
    return span_rank(std::move(cols));
}

// dim(ran P n ran Q) = rank P + rank Q - dim(ran P + ran Q).
inline int meet_rank(const ComplexMatrix& p, const ComplexMatrix& q) {
    const int rp = span_rank(columns_of(p));
    const int rq = span_rank(columns_of(q));
    return rp + rq - join_rank(p, q);
}

// Closed-form eigenvalues of a 2x2 Hermitian [[a, g], [conj g, b]].
inline std::pair<double, double> eig2x2(const ComplexMatrix& m) {
    const double a = m.at(0, 0).real();
    const double b = m.at(1, 1).real();
    const double g = std::abs(m.at(0, 1));
    const double mid = 0.5 * (a + b);
    const double rad = std::sqrt(0.25 * (a - b) * (a - b) + g * g);
    return {mid - rad, mid + rad};
}

// Rank-one projection onto (cos t, e^{i ph} sin t) in C^2.
inline Projection tilt2(double t, double ph = 0.0) {
    return Projection::onto_vector(
        {Complex(std::cos(t), 0.0), std::polar(std::sin(t), ph)});
}

// Step-function evaluation of a jump list by linear scan, no binary search.
inline Projection step_eval(const std::vector<specord::SpectralJump>& jumps, int dim, double r,
                            bool right_continuous) {
    Projection cur = Projection::zero(dim);
    for (const auto& j : jumps) {
        const bool counts = right_continuous ? (j.at <= r) : (j.at < r);
        if (counts) cur = j.proj;
    }
    return cur;
}

// Observable value on a diagonal operator against a diagonal 0/1 projection,
// computed combinatorially: the largest diagonal entry of the operator over
// the support of the projection.
inline ExtendedReal diag_observable(const std::vector<double>& diag,
                                    const std::vector<int>& support) {
    if (support.empty()) return ExtendedReal::neg_inf();
    double best = -1e300;
    for (int i : support) best = std::max(best, diag[static_cast<size_t>(i)]);
    return ExtendedReal::finite(best);
}

// Antonymous value for the same diagonal situation: smallest diagonal entry
// over the support.
inline ExtendedReal diag_antonymous(const std::vector<double>& diag,
                                    const std::vector<int>& support) {
    if (support.empty()) return ExtendedReal::pos_inf();
    double best = 1e300;
    for (int i : support) best = std::min(best, diag[static_cast<size_t>(i)]);
    return ExtendedReal::finite(best);
}

}  // namespace oracles
