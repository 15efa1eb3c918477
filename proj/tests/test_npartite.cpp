#include <doctest.h>

#include "entrobound/entrobound.hpp"
#include "test_util.hpp"

using namespace entrobound;

namespace {

const MeasurementPair zx_pair() {
    return MeasurementPair(pauli_basis("z"), pauli_basis("x"));
}

struct Dists {
    JointDistribution q, r;
};

Dists zx_dists(const DensityMatrix& rho) {
    return {distribution_in_basis(rho, pauli_basis("z")),
            distribution_in_basis(rho, pauli_basis("x"))};
}

}  // namespace

TEST_CASE("cyclic witness is maximally violated by GHZ states") {
    for (std::size_t n : {3u, 4u, 5u, 6u}) {
        const auto d = zx_dists(DensityMatrix::from_pure(ghz(n, 2)));
        const auto rep = cyclic_witness(d.q, d.r, zx_pair());
        CHECK(rep.n == n);
        CHECK(std::abs(rep.lhs_bits) < 1e-12);
        CHECK(rep.rhs_bits == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(rep.violated);
    }
}

TEST_CASE("maximally mixed states satisfy the cyclic bound with 2N bits") {
    for (std::size_t n : {3u, 4u, 5u}) {
        const auto mm = maximally_mixed(SubsystemSignature(std::vector<std::size_t>(n, 2)));
        const auto d = zx_dists(mm);
        const auto rep = cyclic_witness(d.q, d.r, zx_pair());
        CHECK(rep.lhs_bits == doctest::Approx(2.0 * static_cast<double>(n)).epsilon(1e-12));
        CHECK_FALSE(rep.violated);
    }
}

TEST_CASE("biseparably-derived states never violate the cyclic witness") {
    auto rng = test_util::make_rng(41);
    for (std::size_t n : {3u, 4u, 5u}) {
        const std::vector<std::size_t> dims(n, 2);
        for (int trial = 0; trial < 50; ++trial) {
            const auto rho = test_util::random_biseparably_derived(dims, rng);
            const auto d = zx_dists(rho);
            const auto rep = cyclic_witness(d.q, d.r, zx_pair());
            CHECK(rep.lhs_bits >= rep.rhs_bits - 1e-9);
            CHECK_FALSE(rep.violated);
        }
    }
}

TEST_CASE("cyclic witness is invariant under cyclic relabeling") {
    auto rng = test_util::make_rng(42);
    const std::size_t n = 4;
    const auto rho = test_util::random_density(SubsystemSignature({2, 2, 2, 2}), rng);
    const auto d = zx_dists(rho);
    const double base = cyclic_witness(d.q, d.r, zx_pair()).lhs_bits;
    std::vector<std::size_t> shift = {1, 2, 3, 0};
    CHECK(cyclic_witness(d.q.permuted(shift), d.r.permuted(shift), zx_pair()).lhs_bits ==
          doctest::Approx(base).epsilon(1e-12));
    std::vector<std::size_t> shift2 = {2, 3, 0, 1};
    CHECK(cyclic_witness(d.q.permuted(shift2), d.r.permuted(shift2), zx_pair()).lhs_bits ==
          doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("cyclic witness argument validation") {
    const auto d2 = zx_dists(maximally_mixed(SubsystemSignature({2, 2})));
    CHECK_THROWS_AS(cyclic_witness(d2.q, d2.r, zx_pair()), ValidationError);
    const auto d3 = zx_dists(maximally_mixed(SubsystemSignature({2, 2, 2})));
    CHECK_THROWS_AS(cyclic_witness(d3.q, d2.r, zx_pair()), ValidationError);
}

TEST_CASE("conjugate correlation defect") {
    SUBCASE("GHZ_N is tight: defect = 0") {
        for (std::size_t n : {3u, 4u, 5u}) {
            const auto d = zx_dists(DensityMatrix::from_pure(ghz(n, 2)));
            CHECK(conjugate_correlation_defect(d.q, d.r, zx_pair()) ==
                  doctest::Approx(0.0).epsilon(1e-12));
        }
    }
    SUBCASE("maximally mixed leaves N bits") {
        for (std::size_t n : {3u, 4u}) {
            const auto mm = maximally_mixed(SubsystemSignature(std::vector<std::size_t>(n, 2)));
            const auto d = zx_dists(mm);
            CHECK(conjugate_correlation_defect(d.q, d.r, zx_pair()) ==
                  doctest::Approx(static_cast<double>(n)).epsilon(1e-12));
        }
    }
    SUBCASE("two parties may be perfectly conjugate-correlated") {
        const auto d = zx_dists(DensityMatrix::from_pure(ghz(2, 2)));
        CHECK(shannon_conditional(d.q, std::vector<std::size_t>{0}, {1}) ==
              doctest::Approx(0.0).epsilon(1e-12));
        CHECK(shannon_conditional(d.r, std::vector<std::size_t>{0}, {1}) ==
              doctest::Approx(0.0).epsilon(1e-12));
        CHECK(conjugate_correlation_defect(d.q, d.r, zx_pair()) ==
              doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("defect never goes negative on random states") {
        auto rng = test_util::make_rng(43);
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t n = 3 + trial % 2;
            const auto rho =
                test_util::random_density(SubsystemSignature(std::vector<std::size_t>(n, 2)), rng);
            const auto d = zx_dists(rho);
            CHECK(conjugate_correlation_defect(d.q, d.r, zx_pair()) >= -1e-9);
        }
    }
    SUBCASE("non-conjugate pair rejected") {
        const auto d = zx_dists(DensityMatrix::from_pure(ghz(3, 2)));
        CHECK_THROWS_AS(conjugate_correlation_defect(
                            d.q, d.r, MeasurementPair(pauli_basis("z"), pauli_basis("z"))),
                        ValidationError);
    }
}
