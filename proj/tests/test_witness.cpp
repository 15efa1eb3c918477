#include <doctest.h>

#include "entrobound/entrobound.hpp"
#include "test_util.hpp"

using namespace entrobound;

namespace {

const MeasurementPair xz_pair() {
    return MeasurementPair(pauli_basis("x"), pauli_basis("z"));
}

WitnessReport measured_for(const DensityMatrix& rho, const MeasurementPair& pair) {
    return measured_witness_v(distribution_in_basis(rho, pair.q),
                              distribution_in_basis(rho, pair.r), pair);
}

}  // namespace

TEST_CASE("exact quantum witness on named states") {
    SUBCASE("GHZ reaches one full gebit") {
        const auto rep = quantum_witness_v(DensityMatrix::from_pure(ghz(3, 2)));
        CHECK(rep.v_bound_bits == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(rep.e3f_lower_bits == doctest::Approx(1.0).epsilon(1e-12));
        for (double term : rep.per_party_terms_bits)
            CHECK(term == doctest::Approx(-1.0).epsilon(1e-12));
    }
    SUBCASE("maximally mixed sits at -5") {
        const auto rep = quantum_witness_v(maximally_mixed(SubsystemSignature({2, 2, 2})));
        CHECK(rep.v_bound_bits == doctest::Approx(-5.0).epsilon(1e-12));
        CHECK(rep.e3f_lower_bits == 0.0);
    }
    SUBCASE("pure W state gives 3 S(A) - 2") {
        const auto rep = quantum_witness_v(DensityMatrix::from_pure(w3()));
        CHECK(rep.v_bound_bits == doctest::Approx(0.7548875021634688).epsilon(1e-12));
    }
    SUBCASE("party count enforced") {
        CHECK_THROWS_AS(quantum_witness_v(maximally_mixed(SubsystemSignature({2, 2}))),
                        ValidationError);
    }
}

TEST_CASE("measured per-party bounds") {
    const auto pair = xz_pair();
    SUBCASE("GHZ with x/z is tight at 1 bit per party") {
        const auto g = DensityMatrix::from_pure(ghz(3, 2));
        const auto dq = distribution_in_basis(g, pair.q);
        const auto dr = distribution_in_basis(g, pair.r);
        for (std::size_t party = 0; party < 3; ++party)
            CHECK(measured_neg_cond_bound(dq, dr, pair, party) ==
                  doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("maximally mixed gives -1") {
        const auto mm = maximally_mixed(SubsystemSignature({2, 2, 2}));
        const auto dq = distribution_in_basis(mm, pair.q);
        const auto dr = distribution_in_basis(mm, pair.r);
        CHECK(measured_neg_cond_bound(dq, dr, pair, 0) == doctest::Approx(-1.0).epsilon(1e-12));
    }
}

TEST_CASE("measured witness on Werner families") {
    const auto pair = xz_pair();
    SUBCASE("GHZ-Werner crosses zero near p = 0.9406") {
        auto v_at = [&](double p) { return measured_for(werner(ghz(3, 2), p), pair).v_bound_bits; };
        CHECK(v_at(1.0) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(v_at(0.93) < 0.0);
        CHECK(v_at(0.95) > 0.0);
        const auto root = bisect(v_at, 0.5, 1.0, 1e-7);
        REQUIRE(root.has_value());
        CHECK(*root == doctest::Approx(0.9406).epsilon(5e-4));
    }
    SUBCASE("W-Werner never fires under x/z") {
        for (double p : {0.0, 0.25, 0.5, 0.75, 0.9, 1.0}) {
            CHECK(measured_for(werner(w3(), p), pair).v_bound_bits <= 1e-12);
        }
    }
    SUBCASE("report invariants") {
        const auto rep = measured_for(werner(ghz(3, 2), 0.8), pair);
        CHECK(rep.method == WitnessMethod::measured);
        CHECK(rep.omegas.size() == 3);
        CHECK(rep.e3f_lower_bits == std::max(rep.v_bound_bits, 0.0));
    }
}

TEST_CASE("pure-state minimum bound") {
    const auto pair = xz_pair();
    SUBCASE("GHZ") {
        const auto g = DensityMatrix::from_pure(ghz(3, 2));
        const auto pm = pure_min_bound(distribution_in_basis(g, pair.q),
                                       distribution_in_basis(g, pair.r), pair);
        REQUIRE(pm.has_value());
        CHECK(*pm == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("not applicable once a per-party bound dies") {
        const auto mm = maximally_mixed(SubsystemSignature({2, 2, 2}));
        CHECK_FALSE(pure_min_bound(distribution_in_basis(mm, pair.q),
                                   distribution_in_basis(mm, pair.r), pair)
                        .has_value());
    }
    SUBCASE("W state value stays below the exact E3F") {
        const auto w = DensityMatrix::from_pure(w3());
        const auto pm = pure_min_bound(distribution_in_basis(w, pair.q),
                                       distribution_in_basis(w, pair.r), pair);
        if (pm.has_value()) {
            CHECK(*pm > 0.0);
            CHECK(*pm <= 0.9182958340544896 + 1e-12);
        }
    }
}

TEST_CASE("qudit witness paths") {
    SUBCASE("ghz(3,3) reaches log2(3) exactly and the Fourier pair is tight") {
        const auto g = DensityMatrix::from_pure(ghz(3, 3));
        const double expect = std::log2(3.0);
        CHECK(quantum_witness_v(g).v_bound_bits == doctest::Approx(expect).epsilon(1e-12));

        const MeasurementPair pair(ObservableBasis(Matrix::identity(3)), fourier_basis(3));
        const auto rep = measured_witness_v(distribution_in_basis(g, pair.q),
                                            distribution_in_basis(g, pair.r), pair);
        CHECK(rep.v_bound_bits == doctest::Approx(expect).epsilon(1e-12));
        CHECK(rep.omegas[0] == doctest::Approx(3.0).epsilon(1e-12));
    }
    SUBCASE("mixed local dimensions use the largest for D_max") {
        const auto mm = maximally_mixed(SubsystemSignature({2, 3, 2}));
        const double expect = -(1.0 + std::log2(3.0) + 1.0) - 2.0 * std::log2(3.0);
        CHECK(quantum_witness_v(mm).v_bound_bits == doctest::Approx(expect).epsilon(1e-12));
    }
    SUBCASE("basis pair must match the outcome counts") {
        const auto g = DensityMatrix::from_pure(ghz(3, 3));
        const auto dq = distribution_in_basis(g, ObservableBasis(Matrix::identity(3)));
        const auto dr = distribution_in_basis(g, fourier_basis(3));
        CHECK_THROWS_AS(
            measured_witness_v(dq, dr, MeasurementPair(pauli_basis("x"), pauli_basis("z"))),
            ValidationError);
    }
}

TEST_CASE("soundness: measured witness never beats the exact one") {
    auto rng = test_util::make_rng(31);
    for (int trial = 0; trial < 120; ++trial) {
        const auto rho = test_util::random_density(SubsystemSignature({2, 2, 2}), rng);
        const MeasurementPair pair(test_util::random_basis(2, rng),
                                   test_util::random_basis(2, rng));
        const auto exact = quantum_witness_v(rho);
        const auto measured = measured_for(rho, pair);
        CHECK(measured.v_bound_bits <= exact.v_bound_bits + 1e-9);
    }
}

TEST_CASE("biseparable states never violate the witness") {
    auto rng = test_util::make_rng(32);
    const std::vector<std::size_t> dims = {2, 2, 2};
    SUBCASE("pure-partition products") {
        for (int trial = 0; trial < 40; ++trial) {
            for (const auto& block :
                 {std::vector<std::size_t>{0}, std::vector<std::size_t>{1},
                  std::vector<std::size_t>{2}}) {
                const auto rho = test_util::random_biseparable(dims, block, rng);
                CHECK(quantum_witness_v(rho).v_bound_bits <= 1e-9);
            }
        }
    }
    SUBCASE("biseparably-derived mixtures") {
        for (int trial = 0; trial < 80; ++trial) {
            const auto rho = test_util::random_biseparably_derived(dims, rng);
            CHECK(quantum_witness_v(rho).v_bound_bits <= 1e-9);
        }
    }
}

TEST_CASE("single-party entropic uncertainty relation") {
    auto rng = test_util::make_rng(33);
    for (std::size_t d : {2u, 3u}) {
        for (int trial = 0; trial < 100; ++trial) {
            const auto rho = test_util::random_density(SubsystemSignature({d}), rng);
            const MeasurementPair pair(test_util::random_basis(d, rng),
                                       test_util::random_basis(d, rng));
            const auto hq = shannon_entropy(measurement_distribution(rho, {pair.q}));
            const auto hr = shannon_entropy(measurement_distribution(rho, {pair.r}));
            CHECK(hq + hr >= std::log2(omega(pair)) + vn_entropy(rho) - 1e-9);
        }
    }
}

TEST_CASE("GHZ-Werner exact witness is nondecreasing in p") {
    double prev = -1e9;
    const auto g = ghz(3, 2);
    for (int i = 0; i <= 1000; ++i) {
        const double p = static_cast<double>(i) / 1000.0;
        const double v = quantum_witness_v(werner(g, p)).v_bound_bits;
        CHECK(v >= prev - 1e-10);
        prev = v;
    }
}
