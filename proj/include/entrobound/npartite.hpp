#pragma once

#include <cmath>
#include <vector>

#include "entrobound/core.hpp"
#include "entrobound/measurement.hpp"

namespace entrobound {

struct CyclicWitnessReport {
    std::size_t n = 0;
    double lhs_bits = 0.0;
    double rhs_bits = 0.0;  // 2 log2(Omega)
    bool violated = false;
};

// Cyclic N-party witness: sum_i [H(Q_i|Q_{i+1}) + H(R_i|R_{i+1},...,R_{i+N-1})]
// >= 2 log2(Omega) for every biseparably derived state; the index wraps around
// N to 1, and the R-conditioning set is the full other N-1 parties.
inline CyclicWitnessReport cyclic_witness(const JointDistribution& dist_q,
                                          const JointDistribution& dist_r,
                                          const MeasurementPair& pair) {
    const std::size_t n = dist_q.parties();
    if (n < 3) throw ValidationError("cyclic_witness: need at least 3 parties");
    if (dist_q.dims() != dist_r.dims())
        throw ValidationError("cyclic_witness: Q and R distributions have different shapes");
    for (auto d : dist_q.dims())
        if (d != pair.dim())
            throw ValidationError(
                "cyclic_witness: requires uniform local dimension matching the basis pair");

    double lhs = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        lhs += shannon_conditional(dist_q, i, {(i + 1) % n});
        std::vector<std::size_t> rest;
        for (std::size_t k = 1; k < n; ++k) rest.push_back((i + k) % n);
        lhs += shannon_conditional(dist_r, i, rest);
    }

    CyclicWitnessReport rep;
    rep.n = n;
    rep.lhs_bits = lhs;
    rep.rhs_bits = 2.0 * std::log2(omega(pair));
    rep.violated = rep.lhs_bits < rep.rhs_bits - 1e-9;
    return rep;
}

// H(Q_1..Q_{N-1}|Q_N) + H(R_1..R_{N-1}|R_N) - (N-2) log2(d). Nonnegative for
// every physical state when the pair is maximally conjugate (Omega = d): with
// three or more parties, conjugate observables cannot both be near-perfectly
// correlated.
inline double conjugate_correlation_defect(const JointDistribution& dist_q,
                                           const JointDistribution& dist_r,
                                           std::size_t d) {
    const std::size_t n = dist_q.parties();
    if (n < 2) throw ValidationError("conjugate_correlation_defect: need at least 2 parties");
    if (dist_q.dims() != dist_r.dims())
        throw ValidationError("conjugate_correlation_defect: distribution shapes differ");
    for (auto dd : dist_q.dims())
        if (dd != d)
            throw ValidationError("conjugate_correlation_defect: requires uniform dimension d");

    std::vector<std::size_t> firsts;
    for (std::size_t p = 0; p + 1 < n; ++p) firsts.push_back(p);
    const std::vector<std::size_t> last = {n - 1};
    const double lhs = shannon_conditional(dist_q, firsts, last) +
                       shannon_conditional(dist_r, firsts, last);
    return lhs - static_cast<double>(n - 2) * std::log2(static_cast<double>(d));
}

// Same, validating that the pair really is maximally conjugate.
inline double conjugate_correlation_defect(const JointDistribution& dist_q,
                                           const JointDistribution& dist_r,
                                           const MeasurementPair& pair) {
    const std::size_t d = pair.dim();
    if (omega(pair) < static_cast<double>(d) - 1e-9)
        throw ValidationError("conjugate_correlation_defect: bases are not maximally conjugate");
    return conjugate_correlation_defect(dist_q, dist_r, d);
}

}  // namespace entrobound
