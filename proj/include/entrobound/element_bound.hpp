#pragma once

#include <cmath>

#include "entrobound/core.hpp"
#include "entrobound/state.hpp"

namespace entrobound {

struct ElementBoundReport {
    double b_full = 0.0;
    double b_corner = 0.0;
    double enf_lower_bits = 0.0;  // from b_full, the tighter of the two
};

namespace detail {

inline void require_all_qubits(const DensityMatrix& rho, const char* where) {
    for (auto d : rho.signature().dims())
        if (d != 2) throw ValidationError(std::string(where) + ": all parties must be qubits");
}

}  // namespace detail

// GHZ-adapted bound: B = 2|<0..0|rho|1..1>| - sum_q sqrt(<q|rho|q><q~|rho|q~>)
// with q~ the bitwise complement; q runs over all non-corner diagonal indices.
// Positive B certifies genuine N-partite entanglement.
inline double bound_b_full(const DensityMatrix& rho) {
    detail::require_all_qubits(rho, "bound_b_full");
    const std::size_t dim = rho.dim();
    double b = 2.0 * std::abs(rho.elements()(0, dim - 1));
    for (std::size_t q = 1; q + 1 < dim; ++q) {
        const double dq = rho.elements()(q, q).real();
        const double dqc = rho.elements()(dim - 1 - q, dim - 1 - q).real();
        b -= std::sqrt(std::max(dq, 0.0) * std::max(dqc, 0.0));
    }
    return b;
}

// Cauchy-Schwarz relaxation using only the four corner elements:
// 2|rho_{0,D-1}| + rho_00 + rho_{D-1,D-1} - 1 <= B.
inline double bound_b_corner(const DensityMatrix& rho) {
    detail::require_all_qubits(rho, "bound_b_corner");
    const std::size_t dim = rho.dim();
    return 2.0 * std::abs(rho.elements()(0, dim - 1)) + rho.elements()(0, 0).real() +
           rho.elements()(dim - 1, dim - 1).real() - 1.0;
}

// -log2(1 - b^2/2) in bits, zero when b gives no certificate. b beyond sqrt(2)
// cannot come from a physical state.
inline double enf_lower_from_b(double b) {
    if (b > std::sqrt(2.0) + 1e-12)
        throw NumericalError("enf_lower_from_b: bound exceeds sqrt(2), input state is corrupt");
    if (b <= 0.0) return 0.0;
    return -std::log2(1.0 - b * b / 2.0);
}

inline ElementBoundReport element_bound_report(const DensityMatrix& rho) {
    ElementBoundReport rep;
    rep.b_full = bound_b_full(rho);
    rep.b_corner = bound_b_corner(rho);
    rep.enf_lower_bits = enf_lower_from_b(rep.b_full);
    return rep;
}

}  // namespace entrobound
