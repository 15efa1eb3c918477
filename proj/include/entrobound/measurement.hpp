#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "entrobound/core.hpp"
#include "entrobound/matrix.hpp"
#include "entrobound/state.hpp"

namespace entrobound {

// Orthonormal eigenbasis of a single-party observable; column k of `vectors`
// is the eigenstate for outcome k.
class ObservableBasis {
  public:
    ObservableBasis(Matrix vectors, std::vector<std::string> labels = {})
        : vectors_(std::move(vectors)), labels_(std::move(labels)) {
        if (vectors_.rows() != vectors_.cols())
            throw ValidationError("basis: need d vectors of dimension d");
        if (labels_.empty())
            for (std::size_t k = 0; k < vectors_.cols(); ++k)
                labels_.push_back(std::to_string(k));
        if (labels_.size() != vectors_.cols())
            throw ValidationError("basis: label count does not match dimension");
        const Matrix gram = vectors_.dagger() * vectors_;
        for (std::size_t r = 0; r < gram.rows(); ++r)
            for (std::size_t c = 0; c < gram.cols(); ++c) {
                const cdouble expect = (r == c) ? cdouble(1.0) : cdouble(0.0);
                if (std::abs(gram(r, c) - expect) > 1e-12)
                    throw ValidationError("basis: vectors are not orthonormal within 1e-12");
            }
    }

    std::size_t dim() const { return vectors_.rows(); }
    const Matrix& vectors() const { return vectors_; }
    const std::vector<std::string>& labels() const { return labels_; }

    cdouble component(std::size_t row, std::size_t outcome) const {
        return vectors_(row, outcome);
    }

  private:
    Matrix vectors_;
    std::vector<std::string> labels_;
};

// Pauli eigenbases by name: "z" computational, "x" and "y" the usual
// mutually unbiased partners.
inline ObservableBasis pauli_basis(const std::string& name) {
    Matrix m(2, 2);
    const double r = 1.0 / std::sqrt(2.0);
    if (name == "z") {
        m(0, 0) = 1.0;
        m(1, 1) = 1.0;
        return ObservableBasis(std::move(m), {"0", "1"});
    }
    if (name == "x") {
        m(0, 0) = r;
        m(1, 0) = r;
        m(0, 1) = r;
        m(1, 1) = -r;
        return ObservableBasis(std::move(m), {"+", "-"});
    }
    if (name == "y") {
        m(0, 0) = r;
        m(1, 0) = cdouble(0.0, r);
        m(0, 1) = r;
        m(1, 1) = cdouble(0.0, -r);
        return ObservableBasis(std::move(m), {"+i", "-i"});
    }
    throw ValidationError("unknown Pauli basis name: " + name);
}

// Discrete-Fourier conjugate of the computational basis; maximally unbiased,
// so omega against "z" equals d.
inline ObservableBasis fourier_basis(std::size_t d) {
    Matrix m(d, d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
            const double ang = 2.0 * std::numbers::pi * static_cast<double>(j * k) / d;
            m(j, k) = norm * cdouble(std::cos(ang), std::sin(ang));
        }
    return ObservableBasis(std::move(m));
}

struct MeasurementPair {
    ObservableBasis q;
    ObservableBasis r;

    MeasurementPair(ObservableBasis q_basis, ObservableBasis r_basis)
        : q(std::move(q_basis)), r(std::move(r_basis)) {
        if (q.dim() != r.dim())
            throw ValidationError("measurement pair: basis dimensions differ");
    }

    std::size_t dim() const { return q.dim(); }
};

// Incompatibility factor: Omega = min_{i,j} 1/|<q_i|r_j>|^2, in [1, d].
inline double omega(const MeasurementPair& pair) {
    double max_sq = 0.0;
    for (std::size_t i = 0; i < pair.dim(); ++i)
        for (std::size_t j = 0; j < pair.dim(); ++j) {
            cdouble ov = 0.0;
            for (std::size_t k = 0; k < pair.dim(); ++k)
                ov += std::conj(pair.q.component(k, i)) * pair.r.component(k, j);
            max_sq = std::max(max_sq, std::norm(ov));
        }
    const double om = 1.0 / max_sq;
    return std::clamp(om, 1.0, static_cast<double>(pair.dim()));
}

// Probability table over outcome tuples of N parties, row-major with party 0
// as the most significant digit.
class JointDistribution {
  public:
    JointDistribution(std::vector<std::size_t> dims, std::vector<double> probs)
        : sig_(std::move(dims)), probs_(std::move(probs)) {
        if (probs_.size() != sig_.total_dim())
            throw ValidationError("distribution: table size does not match dims");
        double sum = 0.0;
        for (auto& p : probs_) {
            if (p < 0.0) {
                if (p < -1e-12) throw ValidationError("distribution: negative probability");
                p = 0.0;
            }
            sum += p;
        }
        if (std::abs(sum - 1.0) > 1e-10)
            throw ValidationError("distribution: probabilities do not sum to 1 within 1e-10");
    }

    std::size_t parties() const { return sig_.parties(); }
    const std::vector<std::size_t>& dims() const { return sig_.dims(); }
    const std::vector<double>& probs() const { return probs_; }

    double prob(const std::vector<std::size_t>& outcome) const {
        return probs_[sig_.flatten(outcome)];
    }

    // Marginal over `parties`, in the order given (callers pass unique indices).
    JointDistribution marginal(const std::vector<std::size_t>& parties) const {
        sig_.require_valid_parties(parties);
        if (parties.empty()) throw ValidationError("marginal: empty party set");
        std::vector<std::size_t> out_dims;
        for (auto p : parties) out_dims.push_back(sig_.dim(p));
        const SubsystemSignature out_sig(out_dims);
        std::vector<double> out(out_sig.total_dim(), 0.0);
        for (std::size_t idx = 0; idx < probs_.size(); ++idx) {
            const auto digits = sig_.unflatten(idx);
            std::vector<std::size_t> sub(parties.size());
            for (std::size_t i = 0; i < parties.size(); ++i) sub[i] = digits[parties[i]];
            out[out_sig.flatten(sub)] += probs_[idx];
        }
        return JointDistribution(out_dims, std::move(out));
    }

    JointDistribution permuted(const std::vector<std::size_t>& perm) const {
        SubsystemSignature out_sig;
        const auto map = detail::permuted_index_map(sig_, perm, out_sig);
        std::vector<double> out(map.size());
        for (std::size_t i = 0; i < map.size(); ++i) out[i] = probs_[map[i]];
        return JointDistribution(out_sig.dims(), std::move(out));
    }

  private:
    SubsystemSignature sig_;
    std::vector<double> probs_;
};

// Shannon entropy of the full table, bits.
inline double shannon_entropy(const JointDistribution& dist) {
    double h = 0.0;
    for (double p : dist.probs()) h -= xlog2x(p);
    return h;
}

inline double shannon_entropy_of(const JointDistribution& dist,
                                 std::vector<std::size_t> parties) {
    std::sort(parties.begin(), parties.end());
    if (parties.size() == dist.parties()) return shannon_entropy(dist);
    return shannon_entropy(dist.marginal(parties));
}

// H(targets | given) = H(targets u given) - H(given), bits.
inline double shannon_conditional(const JointDistribution& dist,
                                  const std::vector<std::size_t>& targets,
                                  const std::vector<std::size_t>& given) {
    std::set<std::size_t> overlap_check(targets.begin(), targets.end());
    for (auto g : given)
        if (overlap_check.count(g))
            throw ValidationError("shannon_conditional: overlapping party sets");
    std::vector<std::size_t> joint = targets;
    joint.insert(joint.end(), given.begin(), given.end());
    const double h_joint = shannon_entropy_of(dist, joint);
    if (given.empty()) return h_joint;
    return h_joint - shannon_entropy_of(dist, given);
}

inline double shannon_conditional(const JointDistribution& dist, std::size_t target,
                                  const std::vector<std::size_t>& given) {
    return shannon_conditional(dist, std::vector<std::size_t>{target}, given);
}

// Outcome probabilities of projective product measurements, one basis per
// party: p(i,j,...) = Tr[rho (P_i x P_j x ...)].
inline JointDistribution measurement_distribution(const DensityMatrix& rho,
                                                  const std::vector<ObservableBasis>& bases) {
    const auto& dims = rho.signature().dims();
    if (bases.size() != dims.size())
        throw ValidationError("measurement: need one basis per party");
    for (std::size_t p = 0; p < dims.size(); ++p)
        if (bases[p].dim() != dims[p])
            throw ValidationError("measurement: basis dimension does not match party dimension");

    const std::size_t total = rho.dim();
    std::vector<double> probs(total);
    std::vector<cdouble> vec(total);
    for (std::size_t out = 0; out < total; ++out) {
        const auto outcome = rho.signature().unflatten(out);
        // product eigenvector for this outcome tuple
        for (std::size_t row = 0; row < total; ++row) {
            const auto digits = rho.signature().unflatten(row);
            cdouble amp = 1.0;
            for (std::size_t p = 0; p < dims.size(); ++p)
                amp *= bases[p].component(digits[p], outcome[p]);
            vec[row] = amp;
        }
        cdouble val = 0.0;
        for (std::size_t r = 0; r < total; ++r) {
            cdouble rowsum = 0.0;
            for (std::size_t c = 0; c < total; ++c) rowsum += rho.elements()(r, c) * vec[c];
            val += std::conj(vec[r]) * rowsum;
        }
        probs[out] = val.real();
    }
    return JointDistribution(dims, std::move(probs));
}

}  // namespace entrobound
