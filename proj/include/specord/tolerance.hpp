#pragma once

namespace specord {

// One tolerance record threaded through every numeric decision so a change in
// policy happens in exactly one place.  Order decisions on projections use
// `proj`, eigenvalue grouping uses `cluster` scaled by the operator's entry
// norm, and `herm`/`recon`/`psd`/`kernel` gate input validation, spectral
// reconstruction, positivity and kernel membership respectively.
struct Tolerance {
    double herm = 1e-10;
    double cluster = 1e-8;
    double proj = 1e-9;
    double recon = 1e-9;
    double psd = 1e-9;
    double kernel = 1e-9;

    // Gap used when grouping eigenvalues of a matrix whose largest entry
    // magnitude is `scale`.  Relative above 1, absolute below.
    double cluster_gap(double scale) const {
        return cluster * (scale > 1.0 ? scale : 1.0);
    }
};

inline const Tolerance& default_tolerance() {
    static const Tolerance tol{};
    return tol;
}

}  // namespace specord
