#pragma once

#include <cmath>
#include <vector>

#include "entrobound/core.hpp"
#include "entrobound/state.hpp"

namespace entrobound {

// Spectrum of a density matrix with the clamping rule: values in
// (-1e-10, 0) become 0; anything more negative means the state is corrupt.
inline std::vector<double> clamped_spectrum(const DensityMatrix& rho) {
    auto ev = eigvals_hermitian(rho.elements());
    for (auto& v : ev) {
        if (v < 0.0) {
            if (v < tol::eigenvalue_floor)
                throw NumericalError("spectrum: eigenvalue below -1e-10, state is corrupt");
            v = 0.0;
        }
    }
    return ev;
}

// Von Neumann entropy in bits.
inline double vn_entropy(const DensityMatrix& rho) {
    double s = 0.0;
    for (double v : clamped_spectrum(rho)) s -= xlog2x(v);
    return s;
}

// S(target|rest) = S(target u rest) - S(rest), in bits.
inline double conditional_vn_entropy(const DensityMatrix& rho, std::size_t target,
                                     const std::vector<std::size_t>& rest) {
    rho.signature().require_valid_parties({target});
    rho.signature().require_valid_parties(rest);
    for (auto r : rest)
        if (r == target) throw ValidationError("conditional entropy: overlapping party sets");
    if (rest.empty()) return vn_entropy(partial_trace(rho, {target}));

    std::vector<std::size_t> joint = rest;
    joint.push_back(target);
    std::sort(joint.begin(), joint.end());

    const double s_joint = (joint.size() == rho.signature().parties())
                               ? vn_entropy(rho)
                               : vn_entropy(partial_trace(rho, joint));
    const double s_rest = vn_entropy(partial_trace(rho, rest));
    return s_joint - s_rest;
}

// S_L = 2(1 - Tr[rho^2]), dimensionless.
inline double linear_entropy(const DensityMatrix& rho) {
    return 2.0 * (1.0 - rho.purity());
}

// S_C = -log2 Tr[rho^2], bits. Satisfies S_C = -log2(1 - S_L/2).
inline double collision_entropy(const DensityMatrix& rho) {
    return -std::log2(rho.purity());
}

}  // namespace entrobound
