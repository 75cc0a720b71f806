#pragma once

#include <utility>
#include <vector>

#include "specord/eigen.hpp"
#include "specord/matrix.hpp"
#include "specord/projection.hpp"
#include "specord/tolerance.hpp"

namespace specord {

// One spectral cluster: a representative eigenvalue (mean of the grouped raw
// eigenvalues), the projection onto the summed eigenspaces, and how many raw
// eigenvalues were grouped.
struct EigenCluster {
    double value;
    Projection projection;
    int multiplicity;
};

struct Eigendecomposition {
    std::vector<EigenCluster> clusters;  // ascending by value
};

// A Hermitian operator with its eigendecomposition computed eagerly at
// construction and kept alongside the matrix.  Clustering groups raw
// eigenvalues by single linkage with gap cluster_tol * max(1, ||M||_max);
// the raw (unclustered) values and vectors stay available because positivity
// and kernel questions need them at full resolution.
class HermitianOperator {
public:
    explicit HermitianOperator(ComplexMatrix m, const Tolerance& tol = default_tolerance())
        : m_(std::move(m)), tol_(tol), raw_(compute(m_, tol)) {
        const double gap = tol.cluster_gap(m_.max_abs());
        for (const auto& [start, count] : cluster_ascending(raw_.values, gap)) {
            double mean = 0.0;
            std::vector<int> cols;
            for (int j = start; j < start + count; ++j) {
                mean += raw_.values[static_cast<size_t>(j)];
                cols.push_back(j);
            }
            mean /= count;
            eig_.clusters.push_back({mean, Projection::from_columns(raw_.vectors, cols), count});
        }
        validate_decomposition();
    }

    int dim() const { return m_.dim(); }
    const ComplexMatrix& matrix() const { return m_; }
    const Tolerance& tolerance() const { return tol_; }
    const Eigendecomposition& eig() const { return eig_; }
    const std::vector<double>& raw_eigenvalues() const { return raw_.values; }
    const ComplexMatrix& raw_eigenvectors() const { return raw_.vectors; }

    double min_eigenvalue() const { return raw_.values.front(); }
    double max_eigenvalue() const { return raw_.values.back(); }

    // Distinct spectrum at cluster resolution.
    std::vector<double> spectrum() const {
        std::vector<double> out;
        out.reserve(eig_.clusters.size());
        for (const auto& c : eig_.clusters) out.push_back(c.value);
        return out;
    }

private:
    static RawEigen compute(const ComplexMatrix& m, const Tolerance& tol) {
        if (!m.is_hermitian(tol.herm))
            throw NotHermitian("HermitianOperator: matrix is not Hermitian within tolerance");
        return jacobi_eigh(m, tol.herm);
    }

    // Construction-time sanity: the clusters must tile the identity,
    // be mutually orthogonal, and reconstruct the matrix.
    void validate_decomposition() const {
        const int n = m_.dim();
        const double scale = std::max(1.0, m_.max_abs());
        ComplexMatrix sum = ComplexMatrix::zero(n);
        ComplexMatrix recon = ComplexMatrix::zero(n);
        int total_mult = 0;
        for (size_t i = 0; i < eig_.clusters.size(); ++i) {
            const auto& ci = eig_.clusters[i];
            total_mult += ci.multiplicity;
            sum = sum + ci.projection.matrix();
            recon = recon + ci.value * ci.projection.matrix();
            for (size_t j = i + 1; j < eig_.clusters.size(); ++j)
                if ((ci.projection.matrix() * eig_.clusters[j].projection.matrix()).max_abs() >
                    tol_.proj)
                    throw InternalInvariantViolation(
                        "HermitianOperator: cluster projections not orthogonal");
        }
        if (total_mult != n)
            throw InternalInvariantViolation("HermitianOperator: multiplicities do not sum to dim");
        if (max_abs_diff(sum, ComplexMatrix::identity(n)) > tol_.proj)
            throw InternalInvariantViolation("HermitianOperator: projections do not resolve identity");
        if (max_abs_diff(recon, m_) > tol_.recon * scale + tol_.cluster_gap(m_.max_abs()))
            throw InternalInvariantViolation("HermitianOperator: spectral reconstruction off");
    }

    ComplexMatrix m_;
    Tolerance tol_;
    RawEigen raw_;
    Eigendecomposition eig_;
};

// Positive semidefinite within psd_tol, judged on raw eigenvalues so the
// verdict is independent of how values were grouped into clusters.
inline bool is_psd(const HermitianOperator& a) {
    return a.min_eigenvalue() >= -a.tolerance().psd;
}

// Projection onto the kernel (eigenvalues <= kernel_tol).  Requires a PSD
// operator; a genuinely negative eigenvalue means the question is ill-posed.
inline Projection kernel_projection(const HermitianOperator& a) {
    if (!is_psd(a))
        throw NotPSD("kernel_projection: operator has eigenvalue below -psd_tol");
    std::vector<int> keep;
    for (int k = 0; k < a.dim(); ++k)
        if (a.raw_eigenvalues()[static_cast<size_t>(k)] <= a.tolerance().kernel)
            keep.push_back(k);
    return Projection::from_columns(a.raw_eigenvectors(), keep);
}

}  // namespace specord
