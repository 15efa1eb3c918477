#include <doctest.h>

#include "entrobound/matrix.hpp"
#include "test_util.hpp"

using namespace entrobound;

TEST_CASE("kron of computational kets") {
    Matrix a(2, 1), b(2, 1);
    a(0, 0) = 1.0;  // |0>
    b(1, 0) = 1.0;  // |1>
    const Matrix c = kron(a, b);
    REQUIRE(c.rows() == 4);
    CHECK(c(0, 0) == cdouble(0.0));
    CHECK(c(1, 0) == cdouble(1.0));
    CHECK(c(2, 0) == cdouble(0.0));
    CHECK(c(3, 0) == cdouble(0.0));
}

TEST_CASE("eigenvalues of simple states") {
    SUBCASE("half identity qubit") {
        Matrix m(2, 2);
        m(0, 0) = 0.5;
        m(1, 1) = 0.5;
        const auto ev = eigvals_hermitian(m);
        CHECK(ev[0] == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(ev[1] == doctest::Approx(0.5).epsilon(1e-14));
    }
    SUBCASE("rank-1 projector spectrum") {
        // GHZ_3 projector: one eigenvalue 1, seven zeros
        Matrix m(8, 8);
        for (std::size_t r : {0u, 7u})
            for (std::size_t c : {0u, 7u}) m(r, c) = 0.5;
        const auto ev = eigvals_hermitian(m);
        CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-13));
        for (std::size_t k = 1; k < 8; ++k) CHECK(std::abs(ev[k]) < 1e-12);
    }
    SUBCASE("pauli x") {
        Matrix m(2, 2);
        m(0, 1) = 1.0;
        m(1, 0) = 1.0;
        const auto ev = eigvals_hermitian(m);
        CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(ev[1] == doctest::Approx(-1.0).epsilon(1e-14));
    }
}

TEST_CASE("eigensystem residuals and unitarity on random Hermitian matrices") {
    auto rng = test_util::make_rng(1234);
    for (std::size_t n : {2u, 3u, 5u, 8u, 12u, 27u, 64u}) {
        Matrix g(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) g(r, c) = test_util::random_gaussian_c(rng);
        const Matrix h = g.hermitized();
        const auto es = eig_hermitian(h);

        double trace_sum = 0.0;
        for (double v : es.values) trace_sum += v;
        CHECK(trace_sum == doctest::Approx(h.trace().real()).epsilon(1e-10));

        for (std::size_t k = 0; k + 1 < n; ++k) CHECK(es.values[k] >= es.values[k + 1]);

        double worst = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            double res = 0.0;
            for (std::size_t r = 0; r < n; ++r) {
                cdouble hv = 0.0;
                for (std::size_t c = 0; c < n; ++c) hv += h(r, c) * es.vectors(c, k);
                res += std::norm(hv - es.values[k] * es.vectors(r, k));
            }
            worst = std::max(worst, std::sqrt(res));
        }
        CHECK(worst < 1e-10);

        const Matrix gram = es.vectors.dagger() * es.vectors;
        CHECK((gram - Matrix::identity(n)).frobenius_sq() < 1e-20);
    }
}

TEST_CASE("eig rejects non-square input") {
    CHECK_THROWS_AS(eigvals_hermitian(Matrix(2, 3)), ValidationError);
}

TEST_CASE("hermitized symmetrizes as (M + M^dagger)/2") {
    Matrix m(2, 2);
    m(0, 1) = cdouble(1.0, 2.0);
    m(1, 0) = cdouble(3.0, 4.0);
    const Matrix h = m.hermitized();
    CHECK(h(0, 1) == cdouble(2.0, -1.0));
    CHECK(h(1, 0) == cdouble(2.0, 1.0));
    CHECK(h.max_hermiticity_defect() == 0.0);
}
