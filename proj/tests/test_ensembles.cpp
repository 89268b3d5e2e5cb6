#include <doctest.h>

#include <cmath>

#include "spinq/ensembles.hpp"
#include "spinq/entanglement.hpp"

using namespace spinq;

TEST_CASE("streams are reproducible and index-independent") {
    RngStream a(123, 5);
    RngStream b(123, 5);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

    // different indices decorrelate
    RngStream c(123, 6);
    int same = 0;
    RngStream a2(123, 5);
    for (int i = 0; i < 100; ++i)
        if (a2.next_u64() == c.next_u64()) ++same;
    CHECK(same == 0);

    // stream i is the same whether or not other streams were drawn first
    RngStream direct(9, 42);
    for (int k = 0; k < 10; ++k) {
        RngStream other(9, k);
        other.next_u64();
    }
    RngStream again(9, 42);
    for (int i = 0; i < 20; ++i) CHECK(direct.next_u64() == again.next_u64());
}

TEST_CASE("uniform doubles are in range with sensible moments") {
    RngStream rng(7, 0);
    double sum = 0, sumsq = 0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        double x = rng.next_double();
        CHECK(x >= 0);
        CHECK(x < 1);
        sum += x;
        sumsq += x * x;
    }
    CHECK(sum / n == doctest::Approx(0.5).epsilon(0.01));
    CHECK(sumsq / n == doctest::Approx(1.0 / 3).epsilon(0.01));
}

TEST_CASE("gaussian moments") {
    RngStream rng(11, 0);
    double sum = 0, sumsq = 0, sum4 = 0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        double x = rng.next_gaussian();
        sum += x;
        sumsq += x * x;
        sum4 += x * x * x * x;
    }
    CHECK(std::abs(sum / n) < 0.01);
    CHECK(sumsq / n == doctest::Approx(1).epsilon(0.02));
    CHECK(sum4 / n == doctest::Approx(3).epsilon(0.05));
}

TEST_CASE("hs ensemble: valid states with the expected mean purity") {
    RngStream rng(2, 0);
    double purity_sum = 0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        DensityMatrix rho = random_hs_density(rng);
        purity_sum += rho.purity();
    }
    // Ginibre 3x3: E[tr rho^2] = (3+3)/(3*3+1) = 0.6
    CHECK(purity_sum / n == doctest::Approx(0.6).epsilon(0.01));
}

TEST_CASE("hs ensemble: smallest Bloch eigenvalue spans both signs") {
    RngStream rng(3, 0);
    int neg = 0, pos = 0;
    double lo = 1, hi = -1;
    for (int i = 0; i < 5000; ++i) {
        double lam = min_bloch_eig(random_hs_density(rng));
        CHECK(lam >= -1 - 1e-12);
        CHECK(lam <= 2.0 / 3 + 1e-12);  // cannot exceed the maximally mixed value... loosely
        (lam < 0 ? neg : pos)++;
        lo = std::min(lo, lam);
        hi = std::max(hi, lam);
    }
    // most Hilbert-Schmidt states are non-classical; a few percent are not
    CHECK(neg > 4000);
    CHECK(pos > 20);
    CHECK(lo < -0.05);
    CHECK(hi > 0.01);
}

TEST_CASE("random pure states are normalized and rotation-covariant on average") {
    RngStream rng(5, 0);
    double mean_lambda = 0;
    for (int i = 0; i < 5000; ++i) {
        PureSpin1 psi = random_pure(rng);
        double n = std::norm(psi.d_plus) + std::norm(psi.d_zero) + std::norm(psi.d_minus);
        CHECK(n == doctest::Approx(1).epsilon(1e-12));
        mean_lambda += min_bloch_eig(DensityMatrix::pure(psi)) / 5000;
    }
    // pure states are never classical; lambda in [-1, 0]
    CHECK(mean_lambda < -0.1);
    CHECK(mean_lambda > -1.0);
}

TEST_CASE("random coherent directions are uniform on the sphere") {
    RngStream rng(6, 0);
    double mean[3] = {0, 0, 0};
    double mean_z2 = 0;
    const int n = 50000;
    for (int i = 0; i < n; ++i) {
        auto u = random_coherent(rng).unit_vector();
        for (int k = 0; k < 3; ++k) mean[k] += u[k] / n;
        mean_z2 += u[2] * u[2] / n;
    }
    for (int k = 0; k < 3; ++k) CHECK(std::abs(mean[k]) < 0.02);
    CHECK(mean_z2 == doctest::Approx(1.0 / 3).epsilon(0.05));

    // coherent projectors are classical boundary states
    for (int i = 0; i < 20; ++i) {
        ClassicalityVerdict v =
            is_classical(DensityMatrix::pure(coherent_amplitudes(random_coherent(rng))));
        CHECK(v.classical);
        CHECK(v.boundary);
    }
}
