#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "entrobound/core.hpp"
#include "entrobound/state.hpp"

namespace entrobound {

// (1/sqrt(d)) sum_k e^{i phi_k} |k>^{(x)n}; phases has d-1 entries applying to
// the k>=1 terms, all zero when omitted.
inline PureState ghz(std::size_t n, std::size_t d = 2, const std::vector<double>& phases = {}) {
    if (n < 2) throw ValidationError("ghz: need at least 2 parties");
    if (d < 2) throw ValidationError("ghz: local dimension must be at least 2");
    if (!phases.empty() && phases.size() != d - 1)
        throw ValidationError("ghz: phase list must have d-1 entries");

    const SubsystemSignature sig(std::vector<std::size_t>(n, d));
    std::vector<cdouble> amps(sig.total_dim(), 0.0);
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t k = 0; k < d; ++k) {
        const double phi = (k == 0 || phases.empty()) ? 0.0 : phases[k - 1];
        const std::size_t idx = sig.flatten(std::vector<std::size_t>(n, k));
        amps[idx] = norm * cdouble(std::cos(phi), std::sin(phi));
    }
    return PureState(sig, std::move(amps));
}

// (1/sqrt(3)) (|0,0,1> + |0,1,0> + |1,0,0>)
inline PureState w3() {
    const SubsystemSignature sig({2, 2, 2});
    std::vector<cdouble> amps(8, 0.0);
    const double a = 1.0 / std::sqrt(3.0);
    amps[1] = a;  // |0,0,1>
    amps[2] = a;  // |0,1,0>
    amps[4] = a;  // |1,0,0>
    return PureState(sig, std::move(amps));
}

inline DensityMatrix maximally_mixed(const SubsystemSignature& sig) {
    const std::size_t d = sig.total_dim();
    Matrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0 / static_cast<double>(d);
    return DensityMatrix(sig, std::move(m));
}

// p |pure><pure| + (1-p) rho_MM
inline DensityMatrix werner(const PureState& pure, double p) {
    if (p < 0.0 || p > 1.0) throw ValidationError("werner: mixing fraction outside [0,1]");
    Matrix m = pure.projector();
    m *= cdouble(p);
    const double off = (1.0 - p) / static_cast<double>(pure.dim());
    for (std::size_t i = 0; i < pure.dim(); ++i) m(i, i) += off;
    return DensityMatrix(pure.signature(), std::move(m));
}

// Equal three-way mixture of Bell pairs with the remaining party in |0>:
// fully inseparable yet carrying no genuine tripartite entanglement.
inline DensityMatrix rho_insep() {
    const PureState bell = ghz(2, 2);
    std::vector<cdouble> zero_amp = {1.0, 0.0};
    const PureState zero(SubsystemSignature({2}), zero_amp);

    const DensityMatrix ab_c = tensor_product(DensityMatrix::from_pure(bell),
                                              DensityMatrix::from_pure(zero));
    // built as (B,C,A) then relabeled to (A,B,C)
    const DensityMatrix bc_a = permute_parties(ab_c, {2, 0, 1});
    // built as (A,C,B)
    const DensityMatrix ac_b = permute_parties(ab_c, {0, 2, 1});

    Matrix m(8, 8);
    for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c)
            m(r, c) = (ab_c.elements()(r, c) + bc_a.elements()(r, c) + ac_b.elements()(r, c)) / 3.0;
    return DensityMatrix(SubsystemSignature({2, 2, 2}), std::move(m));
}

}  // namespace entrobound
