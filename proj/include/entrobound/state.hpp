#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "entrobound/core.hpp"
#include "entrobound/matrix.hpp"

namespace entrobound {

// Ordered local dimensions (D_A, D_B, ...). Party 0 owns the most significant
// digit of a row-major composite index.
class SubsystemSignature {
  public:
    SubsystemSignature() = default;
    explicit SubsystemSignature(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
        if (dims_.empty()) throw ValidationError("signature: no parties");
        for (auto d : dims_)
            if (d < 1) throw ValidationError("signature: dimensions must be positive");
    }

    std::size_t parties() const { return dims_.size(); }
    std::size_t dim(std::size_t party) const { return dims_.at(party); }
    const std::vector<std::size_t>& dims() const { return dims_; }

    std::size_t total_dim() const {
        std::size_t d = 1;
        for (auto x : dims_) d *= x;
        return d;
    }

    std::size_t max_dim() const {
        std::size_t d = 0;
        for (auto x : dims_) d = std::max(d, x);
        return d;
    }

    bool operator==(const SubsystemSignature& o) const { return dims_ == o.dims_; }

    SubsystemSignature concatenated(const SubsystemSignature& o) const {
        std::vector<std::size_t> d = dims_;
        d.insert(d.end(), o.dims_.begin(), o.dims_.end());
        return SubsystemSignature(d);
    }

    // Flat index from per-party digits.
    std::size_t flatten(const std::vector<std::size_t>& digits) const {
        std::size_t idx = 0;
        for (std::size_t p = 0; p < dims_.size(); ++p) idx = idx * dims_[p] + digits[p];
        return idx;
    }

    std::vector<std::size_t> unflatten(std::size_t idx) const {
        std::vector<std::size_t> digits(dims_.size());
        for (std::size_t p = dims_.size(); p-- > 0;) {
            digits[p] = idx % dims_[p];
            idx /= dims_[p];
        }
        return digits;
    }

    void require_valid_parties(const std::vector<std::size_t>& parties) const {
        for (auto p : parties)
            if (p >= dims_.size()) throw ValidationError("party index out of range");
    }

  private:
    std::vector<std::size_t> dims_;
};

class PureState {
  public:
    PureState(SubsystemSignature signature, std::vector<cdouble> amplitudes)
        : signature_(std::move(signature)), amplitudes_(std::move(amplitudes)) {
        if (amplitudes_.size() != signature_.total_dim())
            throw ValidationError("pure state: amplitude count does not match signature");
        double n2 = 0.0;
        for (const auto& a : amplitudes_) n2 += std::norm(a);
        if (std::abs(n2 - 1.0) > tol::unit_norm)
            throw ValidationError("pure state: squared norm differs from 1");
    }

    const SubsystemSignature& signature() const { return signature_; }
    const std::vector<cdouble>& amplitudes() const { return amplitudes_; }
    std::size_t dim() const { return amplitudes_.size(); }

    cdouble inner(const PureState& o) const {
        if (o.dim() != dim()) throw ValidationError("inner product: dimension mismatch");
        cdouble s = 0.0;
        for (std::size_t i = 0; i < amplitudes_.size(); ++i)
            s += std::conj(amplitudes_[i]) * o.amplitudes_[i];
        return s;
    }

    Matrix projector() const {
        Matrix m(dim(), dim());
        for (std::size_t r = 0; r < dim(); ++r)
            for (std::size_t c = 0; c < dim(); ++c)
                m(r, c) = amplitudes_[r] * std::conj(amplitudes_[c]);
        return m;
    }

    // Same amplitudes read under a coarser/finer party grouping.
    PureState with_signature(SubsystemSignature sig) const {
        if (sig.total_dim() != dim())
            throw ValidationError("with_signature: total dimension changed");
        return PureState(std::move(sig), amplitudes_);
    }

  private:
    SubsystemSignature signature_;
    std::vector<cdouble> amplitudes_;
};

class DensityMatrix {
  public:
    DensityMatrix(SubsystemSignature signature, Matrix elements)
        : signature_(std::move(signature)), elements_(std::move(elements)) {
        validate();
    }

    static DensityMatrix from_pure(const PureState& psi) {
        return DensityMatrix(psi.signature(), psi.projector());
    }

    const SubsystemSignature& signature() const { return signature_; }
    const Matrix& elements() const { return elements_; }
    std::size_t dim() const { return elements_.rows(); }

    double purity() const { return elements_.frobenius_sq(); }

    DensityMatrix with_signature(SubsystemSignature sig) const {
        if (sig.total_dim() != dim())
            throw ValidationError("with_signature: total dimension changed");
        return DensityMatrix(std::move(sig), elements_);
    }

    // Name of the first violated invariant, empty when the state is valid.
    static std::string check_invariants(const SubsystemSignature& sig, const Matrix& m) {
        if (m.rows() != m.cols()) return "matrix is not square";
        if (sig.total_dim() != m.rows())
            return "product of dims does not equal the matrix dimension";
        if (m.max_hermiticity_defect() > tol::hermitian)
            return "matrix is not Hermitian within 1e-12";
        if (std::abs(m.trace().real() - 1.0) > tol::trace_one ||
            std::abs(m.trace().imag()) > tol::trace_one)
            return "trace differs from 1 beyond tolerance";
        const auto ev = eigvals_hermitian(m);
        if (!ev.empty() && ev.back() < tol::eigenvalue_floor)
            return "matrix has an eigenvalue below -1e-10 (not positive semidefinite)";
        return {};
    }

  private:
    void validate() const {
        const std::string violated = check_invariants(signature_, elements_);
        if (!violated.empty()) throw ValidationError("density matrix: " + violated);
    }

    SubsystemSignature signature_;
    Matrix elements_;
};

inline PureState tensor_product(const PureState& a, const PureState& b) {
    std::vector<cdouble> amps(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            amps[i * b.dim() + j] = a.amplitudes()[i] * b.amplitudes()[j];
    return PureState(a.signature().concatenated(b.signature()), std::move(amps));
}

inline DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
    return DensityMatrix(a.signature().concatenated(b.signature()),
                         kron(a.elements(), b.elements()));
}

// Reduced state over `keep` (kept in original order, duplicates rejected).
inline DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::size_t>& keep) {
    if (keep.empty()) throw ValidationError("partial_trace: empty keep set");
    rho.signature().require_valid_parties(keep);
    const std::set<std::size_t> keep_set(keep.begin(), keep.end());
    if (keep_set.size() != keep.size())
        throw ValidationError("partial_trace: duplicate party index");

    const auto& dims = rho.signature().dims();
    std::vector<std::size_t> kept, traced;
    for (std::size_t p = 0; p < dims.size(); ++p)
        (keep_set.count(p) ? kept : traced).push_back(p);

    std::vector<std::size_t> kept_dims, traced_dims;
    for (auto p : kept) kept_dims.push_back(dims[p]);
    for (auto p : traced) traced_dims.push_back(dims[p]);
    const SubsystemSignature out_sig(kept_dims);
    const std::size_t kd = out_sig.total_dim();
    std::size_t td = 1;
    for (auto d : traced_dims) td *= d;

    const SubsystemSignature full = rho.signature();
    Matrix out(kd, kd);
    std::vector<std::size_t> digits(dims.size());
    for (std::size_t i = 0; i < kd; ++i) {
        const auto di = out_sig.unflatten(i);
        for (std::size_t j = 0; j < kd; ++j) {
            const auto dj = out_sig.unflatten(j);
            cdouble sum = 0.0;
            for (std::size_t t = 0; t < td; ++t) {
                std::size_t tt = t;
                std::vector<std::size_t> dt(traced.size());
                for (std::size_t p = traced.size(); p-- > 0;) {
                    dt[p] = tt % traced_dims[p];
                    tt /= traced_dims[p];
                }
                for (std::size_t p = 0; p < kept.size(); ++p) digits[kept[p]] = di[p];
                for (std::size_t p = 0; p < traced.size(); ++p) digits[traced[p]] = dt[p];
                const std::size_t row = full.flatten(digits);
                for (std::size_t p = 0; p < kept.size(); ++p) digits[kept[p]] = dj[p];
                const std::size_t col = full.flatten(digits);
                sum += rho.elements()(row, col);
            }
            out(i, j) = sum;
        }
    }
    return DensityMatrix(out_sig, std::move(out));
}

namespace detail {

inline void require_permutation(const std::vector<std::size_t>& perm, std::size_t n) {
    if (perm.size() != n) throw ValidationError("permutation length differs from party count");
    std::vector<bool> seen(n, false);
    for (auto p : perm) {
        if (p >= n || seen[p]) throw ValidationError("invalid permutation of party indices");
        seen[p] = true;
    }
}

// Index map: entry i of the result is the flat source index whose digits are
// rearranged so that new party i carries old party perm[i].
inline std::vector<std::size_t> permuted_index_map(const SubsystemSignature& sig,
                                                   const std::vector<std::size_t>& perm,
                                                   SubsystemSignature& out_sig) {
    require_permutation(perm, sig.parties());
    std::vector<std::size_t> new_dims(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) new_dims[i] = sig.dim(perm[i]);
    out_sig = SubsystemSignature(new_dims);

    std::vector<std::size_t> map(sig.total_dim());
    std::vector<std::size_t> old_digits(sig.parties());
    for (std::size_t idx = 0; idx < map.size(); ++idx) {
        const auto new_digits = out_sig.unflatten(idx);
        for (std::size_t i = 0; i < perm.size(); ++i) old_digits[perm[i]] = new_digits[i];
        map[idx] = sig.flatten(old_digits);
    }
    return map;
}

}  // namespace detail

// New party i is old party perm[i].
inline PureState permute_parties(const PureState& psi, const std::vector<std::size_t>& perm) {
    SubsystemSignature out_sig;
    const auto map = detail::permuted_index_map(psi.signature(), perm, out_sig);
    std::vector<cdouble> amps(map.size());
    for (std::size_t i = 0; i < map.size(); ++i) amps[i] = psi.amplitudes()[map[i]];
    return PureState(std::move(out_sig), std::move(amps));
}

inline DensityMatrix permute_parties(const DensityMatrix& rho,
                                     const std::vector<std::size_t>& perm) {
    SubsystemSignature out_sig;
    const auto map = detail::permuted_index_map(rho.signature(), perm, out_sig);
    Matrix out(map.size(), map.size());
    for (std::size_t r = 0; r < map.size(); ++r)
        for (std::size_t c = 0; c < map.size(); ++c) out(r, c) = rho.elements()(map[r], map[c]);
    return DensityMatrix(std::move(out_sig), std::move(out));
}

// <target| rho |target>
inline double fidelity_pure(const DensityMatrix& rho, const PureState& target) {
    if (rho.dim() != target.dim()) throw ValidationError("fidelity: dimension mismatch");
    cdouble f = 0.0;
    for (std::size_t r = 0; r < rho.dim(); ++r) {
        cdouble row = 0.0;
        for (std::size_t c = 0; c < rho.dim(); ++c)
            row += rho.elements()(r, c) * target.amplitudes()[c];
        f += std::conj(target.amplitudes()[r]) * row;
    }
    return f.real();
}

}  // namespace entrobound
