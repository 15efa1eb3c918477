#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "entrobound/core.hpp"
#include "entrobound/entropy.hpp"
#include "entrobound/measurement.hpp"
#include "entrobound/state.hpp"

namespace entrobound {

enum class WitnessMethod { exact_quantum, measured, pure_min };

inline std::string to_string(WitnessMethod m) {
    switch (m) {
        case WitnessMethod::exact_quantum: return "exact-quantum";
        case WitnessMethod::measured: return "measured";
        case WitnessMethod::pure_min: return "pure-min";
    }
    return "?";
}

struct WitnessReport {
    WitnessMethod method = WitnessMethod::exact_quantum;
    std::size_t d_max = 0;
    // exact-quantum: conditional entropies S(X|rest);
    // measured: per-party lower bounds on -S(X|rest).
    std::vector<double> per_party_terms_bits;
    std::vector<double> omegas;  // measured path only
    double v_bound_bits = 0.0;
    double e3f_lower_bits = 0.0;
    std::vector<std::string> warnings;
};

namespace detail {

inline std::vector<std::size_t> other_parties(std::size_t n, std::size_t target) {
    std::vector<std::size_t> rest;
    for (std::size_t p = 0; p < n; ++p)
        if (p != target) rest.push_back(p);
    return rest;
}

}  // namespace detail

// V = -S(A|BC) - S(B|AC) - S(C|AB) - 2 log2(D_max); positive V lower-bounds E3F.
inline WitnessReport quantum_witness_v(const DensityMatrix& rho) {
    if (rho.signature().parties() != 3)
        throw ValidationError("quantum_witness_v: state must have exactly 3 parties");
    WitnessReport rep;
    rep.method = WitnessMethod::exact_quantum;
    rep.d_max = rho.signature().max_dim();
    double v = -2.0 * std::log2(static_cast<double>(rep.d_max));
    for (std::size_t party = 0; party < 3; ++party) {
        const double s = conditional_vn_entropy(rho, party, detail::other_parties(3, party));
        rep.per_party_terms_bits.push_back(s);
        v -= s;
    }
    rep.v_bound_bits = v;
    rep.e3f_lower_bits = std::max(v, 0.0);
    return rep;
}

// log2(Omega) - H(Q_t|Q_rest) - H(R_t|R_rest): a lower bound on -S(t|rest).
inline double measured_neg_cond_bound(const JointDistribution& dist_q,
                                      const JointDistribution& dist_r,
                                      const MeasurementPair& pair, std::size_t target) {
    if (dist_q.dims() != dist_r.dims())
        throw ValidationError("measured bound: Q and R distributions have different shapes");
    for (auto d : dist_q.dims())
        if (d != pair.dim())
            throw ValidationError("measured bound: outcome counts do not match the basis pair");
    const auto rest = detail::other_parties(dist_q.parties(), target);
    return std::log2(omega(pair)) - shannon_conditional(dist_q, target, rest) -
           shannon_conditional(dist_r, target, rest);
}

inline WitnessReport measured_witness_v(const JointDistribution& dist_q,
                                        const JointDistribution& dist_r,
                                        const MeasurementPair& pair) {
    if (dist_q.parties() != 3)
        throw ValidationError("measured_witness_v: distributions must cover exactly 3 parties");
    if (dist_q.dims() != dist_r.dims())
        throw ValidationError("measured_witness_v: Q and R distributions have different shapes");
    WitnessReport rep;
    rep.method = WitnessMethod::measured;
    rep.d_max = *std::max_element(dist_q.dims().begin(), dist_q.dims().end());
    const double om = omega(pair);
    double v = -2.0 * std::log2(static_cast<double>(rep.d_max));
    for (std::size_t party = 0; party < 3; ++party) {
        const double b = measured_neg_cond_bound(dist_q, dist_r, pair, party);
        rep.per_party_terms_bits.push_back(b);
        rep.omegas.push_back(om);
        v += b;
    }
    rep.v_bound_bits = v;
    rep.e3f_lower_bits = std::max(v, 0.0);
    return rep;
}

// Pure states only: if every per-party bound is positive, their minimum
// already lower-bounds E3F. Not applicable otherwise.
inline std::optional<double> pure_min_bound(const JointDistribution& dist_q,
                                            const JointDistribution& dist_r,
                                            const MeasurementPair& pair) {
    if (dist_q.parties() != 3)
        throw ValidationError("pure_min_bound: distributions must cover exactly 3 parties");
    double min_bound = std::numeric_limits<double>::infinity();
    for (std::size_t party = 0; party < 3; ++party) {
        const double b = measured_neg_cond_bound(dist_q, dist_r, pair, party);
        if (b <= 0.0) return std::nullopt;
        min_bound = std::min(min_bound, b);
    }
    return min_bound;
}

// Convenience: quantum state measured in the same pair on every party.
inline JointDistribution distribution_in_basis(const DensityMatrix& rho,
                                               const ObservableBasis& basis) {
    return measurement_distribution(
        rho, std::vector<ObservableBasis>(rho.signature().parties(), basis));
}

}  // namespace entrobound
