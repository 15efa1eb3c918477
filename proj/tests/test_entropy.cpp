#include <doctest.h>

#include "entrobound/entrobound.hpp"
#include "test_util.hpp"

using namespace entrobound;

TEST_CASE("von Neumann entropy of named states") {
    SUBCASE("pure state has zero entropy") {
        CHECK(vn_entropy(DensityMatrix::from_pure(ghz(3, 2))) ==
              doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("three-qubit maximally mixed has 3 bits") {
        CHECK(vn_entropy(maximally_mixed(SubsystemSignature({2, 2, 2}))) ==
              doctest::Approx(3.0).epsilon(1e-12));
    }
    SUBCASE("mixed-dimension maximally mixed has sum of log2 dims") {
        CHECK(vn_entropy(maximally_mixed(SubsystemSignature({2, 3, 4}))) ==
              doctest::Approx(std::log2(2.0) + std::log2(3.0) + std::log2(4.0)).epsilon(1e-12));
    }
    SUBCASE("GHZ-Werner at p = 1/2") {
        const auto rho = werner(ghz(3, 2), 0.5);
        const auto ev = clamped_spectrum(rho);
        // diagonal in the basis containing |GHZ>: p + (1-p)/8 once, (1-p)/8 seven times
        CHECK(ev[0] == doctest::Approx(0.5625).epsilon(1e-13));
        for (std::size_t k = 1; k < 8; ++k) CHECK(ev[k] == doctest::Approx(0.0625).epsilon(1e-12));
        const double expected = -(0.5625 * std::log2(0.5625) + 7.0 * 0.0625 * std::log2(0.0625));
        CHECK(expected == doctest::Approx(2.2169171866886992).epsilon(1e-12));
        CHECK(vn_entropy(rho) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("conditional von Neumann entropy") {
    SUBCASE("GHZ: S(A|BC) = -1") {
        const auto rho = DensityMatrix::from_pure(ghz(3, 2));
        CHECK(conditional_vn_entropy(rho, 0, {1, 2}) == doctest::Approx(-1.0).epsilon(1e-12));
    }
    SUBCASE("W state: S(A|BC) = -S(A)") {
        const auto rho = DensityMatrix::from_pure(w3());
        CHECK(conditional_vn_entropy(rho, 0, {1, 2}) ==
              doctest::Approx(-0.9182958340544896).epsilon(1e-12));
    }
    SUBCASE("product state: S(A|BC) = S(A) >= 0") {
        auto rng = test_util::make_rng(11);
        for (int trial = 0; trial < 25; ++trial) {
            const auto a = test_util::random_density(SubsystemSignature({2}), rng);
            const auto bc = test_util::random_density(SubsystemSignature({2, 2}), rng);
            const auto rho = tensor_product(a, bc);
            const double s = conditional_vn_entropy(rho, 0, {1, 2});
            CHECK(s == doctest::Approx(vn_entropy(a)).epsilon(1e-10));
            CHECK(s >= -1e-10);
        }
    }
    SUBCASE("overlapping sets rejected") {
        const auto rho = maximally_mixed(SubsystemSignature({2, 2, 2}));
        CHECK_THROWS_AS(conditional_vn_entropy(rho, 0, {0, 1}), ValidationError);
    }
}

TEST_CASE("conditional entropy stays above -log2 D_target") {
    auto rng = test_util::make_rng(12);
    const std::vector<std::vector<std::size_t>> signatures = {{2, 2, 2}, {3, 2, 2}, {2, 3, 3}};
    int checked = 0;
    for (const auto& dims : signatures) {
        for (int trial = 0; trial < 340; ++trial) {
            const auto rho = test_util::random_density(SubsystemSignature(dims), rng);
            const double s = conditional_vn_entropy(rho, 0, {1, 2});
            CHECK(s >= -std::log2(static_cast<double>(dims[0])) - 1e-9);
            CHECK(s <= std::log2(static_cast<double>(dims[0])) + 1e-9);
            ++checked;
        }
    }
    CHECK(checked >= 1000);
}

TEST_CASE("entropy concavity (plain and conditional)") {
    auto rng = test_util::make_rng(13);
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    for (int trial = 0; trial < 60; ++trial) {
        const SubsystemSignature sig({2, 2, 2});
        const auto rho = test_util::random_density(sig, rng);
        const auto sigma = test_util::random_density(sig, rng);
        const double lambda = ud(rng);
        Matrix mixed = rho.elements();
        mixed *= cdouble(lambda);
        Matrix other = sigma.elements();
        other *= cdouble(1.0 - lambda);
        mixed += other;
        const DensityMatrix mix(sig, mixed.hermitized());

        CHECK(vn_entropy(mix) >= lambda * vn_entropy(rho) + (1.0 - lambda) * vn_entropy(sigma) -
                                     1e-9);
        const double cond_mix = conditional_vn_entropy(mix, 0, {1, 2});
        const double cond_parts = lambda * conditional_vn_entropy(rho, 0, {1, 2}) +
                                  (1.0 - lambda) * conditional_vn_entropy(sigma, 0, {1, 2});
        CHECK(cond_mix >= cond_parts - 1e-9);
    }
}

TEST_CASE("linear and collision entropy") {
    SUBCASE("pure state") {
        const auto rho = DensityMatrix::from_pure(w3());
        CHECK(linear_entropy(rho) == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(collision_entropy(rho) == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("qubit maximally mixed") {
        const auto rho = maximally_mixed(SubsystemSignature({2}));
        CHECK(linear_entropy(rho) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(collision_entropy(rho) == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("identity S_C = -log2(1 - S_L/2) and S_C <= S_vN") {
        auto rng = test_util::make_rng(14);
        for (int trial = 0; trial < 1000; ++trial) {
            const auto rho = test_util::random_density(SubsystemSignature({2, 2}), rng,
                                                       1 + trial % 4);
            const double sl = linear_entropy(rho);
            const double sc = collision_entropy(rho);
            CHECK(sc == doctest::Approx(-std::log2(1.0 - sl / 2.0)).epsilon(1e-12));
            CHECK(sc <= vn_entropy(rho) + 1e-9);
        }
    }
}

TEST_CASE("diagonal-state entropies match the hand oracle") {
    SUBCASE("two qubits") {
        const std::vector<double> probs = {0.5, 0.25, 0.125, 0.125};
        const auto rho = test_util::diagonal_state(SubsystemSignature({2, 2}), probs);
        // by hand: 1/2*1 + 1/4*2 + 2*(1/8*3) = 1.75
        CHECK(test_util::shannon_bits(probs) == doctest::Approx(1.75).epsilon(1e-15));
        CHECK(vn_entropy(rho) == doctest::Approx(1.75).epsilon(1e-12));
    }
    SUBCASE("three qubits with marginals") {
        const std::vector<double> probs = {0.4, 0.1, 0.1, 0.0, 0.2, 0.0, 0.1, 0.1};
        const auto rho = test_util::diagonal_state(SubsystemSignature({2, 2, 2}), probs);
        CHECK(vn_entropy(rho) ==
              doctest::Approx(test_util::shannon_bits(probs)).epsilon(1e-12));
        // S(BC) from the summed diagonal blocks
        std::vector<double> bc(4, 0.0);
        for (std::size_t i = 0; i < 8; ++i) bc[i % 4] += probs[i];
        CHECK(vn_entropy(partial_trace(rho, {1, 2})) ==
              doctest::Approx(test_util::shannon_bits(bc)).epsilon(1e-12));
        CHECK(conditional_vn_entropy(rho, 0, {1, 2}) ==
              doctest::Approx(test_util::shannon_bits(probs) - test_util::shannon_bits(bc))
                  .epsilon(1e-12));
    }
}

TEST_CASE("slightly negative eigenvalues clamp to zero") {
    Matrix m(2, 2);
    m(0, 0) = 1.0 + 5e-11;
    m(1, 1) = -5e-11;
    const DensityMatrix rho(SubsystemSignature({2}), std::move(m));
    CHECK(vn_entropy(rho) == doctest::Approx(0.0).epsilon(1e-9));
}
