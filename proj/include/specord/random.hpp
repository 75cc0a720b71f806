#pragma once

// Seeded generation of matrices, projections and contexts.  The engine is
// mt19937_64 (bit-exact sequence guaranteed by the standard); the transforms
// to uniform/normal are written out here instead of using std distributions,
// which are allowed to differ between standard library implementations.
// Same seed, same bytes, everywhere.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "specord/hermitian.hpp"
#include "specord/matrix.hpp"
#include "specord/projection.hpp"

namespace specord {

class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1) with 53 bits of mantissa.
    double uniform() { return (gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(gen_() % span);
    }

    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    Complex normal_complex() { return Complex(normal(), normal()) * 0.7071067811865475244; }

private:
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

inline ComplexMatrix random_hermitian(Rng& rng, int n, double scale = 1.0) {
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) {
        m.at(i, i) = scale * rng.normal();
        for (int j = i + 1; j < n; ++j) {
            const Complex z = scale * rng.normal_complex();
            m.at(i, j) = z;
            m.at(j, i) = std::conj(z);
        }
    }
    return m;
}

// Haar-ish unitary: modified Gram-Schmidt on a complex Gaussian matrix.
// Distributional fine points do not matter here, determinism does.
inline ComplexMatrix random_unitary(Rng& rng, int n) {
    ComplexMatrix g(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.at(i, j) = rng.normal_complex();
    for (int c = 0; c < n; ++c) {
        for (int prev = 0; prev < c; ++prev) {
            Complex dot = 0.0;
            for (int i = 0; i < n; ++i) dot += std::conj(g.at(i, prev)) * g.at(i, c);
            for (int i = 0; i < n; ++i) g.at(i, c) -= dot * g.at(i, prev);
        }
        double nrm = 0.0;
        for (int i = 0; i < n; ++i) nrm += std::norm(g.at(i, c));
        nrm = std::sqrt(nrm);
        if (nrm < 1e-12) {  // essentially impossible; restart the column
            for (int i = 0; i < n; ++i) g.at(i, c) = rng.normal_complex();
            --c;
            continue;
        }
        for (int i = 0; i < n; ++i) g.at(i, c) /= nrm;
    }
    return g;
}

inline Projection random_projection(Rng& rng, int n, int rank) {
    if (rank < 0 || rank > n) throw Error("random_projection: rank out of range");
    if (rank == 0) return Projection::zero(n);
    if (rank == n) return Projection::identity(n);
    ComplexMatrix u = random_unitary(rng, n);
    std::vector<int> cols;
    for (int c = 0; c < rank; ++c) cols.push_back(c);
    return Projection::from_columns(u, cols);
}

// U diag(values) U* for a random U; exact control over the spectrum.
inline HermitianOperator random_with_spectrum(Rng& rng, const std::vector<double>& values,
                                              const Tolerance& tol = default_tolerance()) {
    const int n = static_cast<int>(values.size());
    ComplexMatrix u = random_unitary(rng, n);
    ComplexMatrix m = u * ComplexMatrix::diagonal(values) * u.adjoint();
    return HermitianOperator(m.hermitian_part(), tol);
}

// Random context with `atoms` atoms: a random orthonormal basis partitioned
// into that many nonempty blocks.
inline AbelianContext random_context(Rng& rng, int n, int atoms,
                                     const Tolerance& tol = default_tolerance()) {
    if (atoms < 1 || atoms > n) throw Error("random_context: atom count out of range");
    ComplexMatrix u = random_unitary(rng, n);
    // Random composition of n into `atoms` parts: pick distinct cut points.
    std::vector<int> cuts;
    while (static_cast<int>(cuts.size()) < atoms - 1) {
        const int c = rng.uniform_int(1, n - 1);
        bool seen = false;
        for (int x : cuts) seen = seen || (x == c);
        if (!seen) cuts.push_back(c);
    }
    cuts.push_back(0);
    cuts.push_back(n);
    std::sort(cuts.begin(), cuts.end());
    std::vector<Projection> parts;
    for (size_t b = 0; b + 1 < cuts.size(); ++b) {
        std::vector<int> cols;
        for (int c = cuts[b]; c < cuts[b + 1]; ++c) cols.push_back(c);
        parts.push_back(Projection::from_columns(u, cols));
    }
    return AbelianContext(std::move(parts), tol);
}

}  // namespace specord
