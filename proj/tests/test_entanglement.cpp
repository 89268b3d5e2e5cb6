#include <doctest.h>

#include <cmath>

#include "spinq/ensembles.hpp"
#include "spinq/entanglement.hpp"
#include "spinq/pure.hpp"

using namespace spinq;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("min_bloch_eig and is_classical on reference states") {
    DensityMatrix mid = DensityMatrix::pure(PureSpin1(0, 1, 0));
    CHECK(min_bloch_eig(mid) == doctest::Approx(-1).epsilon(1e-12));
    ClassicalityVerdict v = is_classical(mid);
    CHECK_FALSE(v.classical);
    CHECK(v.lambda_min == doctest::Approx(-1).epsilon(1e-12));
    // witness is the z^2-direction eigenvector
    CHECK(std::abs(std::abs(v.witness[3]) - 1) < 1e-10);

    DensityMatrix mixed(HermMatrix::diag({1.0 / 3, 1.0 / 3, 1.0 / 3}));
    ClassicalityVerdict vm = is_classical(mixed);
    CHECK(vm.classical);
    CHECK(vm.lambda_min == doctest::Approx(1.0 / 3).epsilon(1e-12));

    // coherent projectors sit on the boundary (lambda_min = 0)
    RngStream rng(1, 0);
    for (int trial = 0; trial < 50; ++trial) {
        CoherentAngles ang = random_coherent(rng);
        ClassicalityVerdict vc = is_classical(DensityMatrix::pure(coherent_amplitudes(ang)));
        CHECK(vc.classical);
        CHECK(vc.boundary);
        CHECK(std::abs(vc.lambda_min) < 1e-12);
    }
}

TEST_CASE("ppt basis matrix is unitary") {
    const auto& r = ppt_basis_matrix();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            cplx s = 0;
            for (int k = 0; k < 4; ++k) s += r[i * 4 + k] * std::conj(r[j * 4 + k]);
            CHECK(std::abs(s - (i == j ? cplx(1) : cplx(0))) < 1e-14);
        }
}

TEST_CASE("partial transpose spectrum is half the Bloch spectrum") {
    RngStream rng(2, 0);
    for (int trial = 0; trial < 500; ++trial) {
        DensityMatrix rho = random_hs_density(rng);
        BlochMatrix x = bloch_from_density(rho);
        EigReal ex = eigh_sym_real(x.matrix());
        EigHerm ep = eigh_hermitian(ppt_from_bloch(x));
        for (int k = 0; k < 4; ++k)
            CHECK(ep.values[k] == doctest::Approx(ex.values[k] / 2).epsilon(1e-10));
    }
}

TEST_CASE("partial transpose really transposes one qubit") {
    RngStream rng(3, 0);
    for (int trial = 0; trial < 200; ++trial) {
        DensityMatrix rho = random_hs_density(rng);
        HermMatrix two = dicke_embed(rho);
        // transpose the second qubit directly: (ia,jb) -> (ib,ja)
        std::vector<cplx> pt(16);
        for (int i = 0; i < 2; ++i)
            for (int a = 0; a < 2; ++a)
                for (int j = 0; j < 2; ++j)
                    for (int b = 0; b < 2; ++b)
                        pt[(2 * i + a) * 4 + (2 * j + b)] = two(2 * i + b, 2 * j + a);
        HermMatrix direct = HermMatrix::from_raw(4, pt, 1e-10);
        HermMatrix via = ppt_from_bloch(bloch_from_density(rho));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) CHECK(std::abs(direct(i, j) - via(i, j)) < 1e-11);
    }
}

TEST_CASE("negativity equals -lambda/2 exactly when non-classical") {
    RngStream rng(4, 0);
    int nonclassical = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        DensityMatrix rho = random_hs_density(rng);
        double lam = min_bloch_eig(rho);
        double n = negativity(rho);
        CHECK(n == doctest::Approx(std::max(0.0, -lam / 2)).epsilon(1e-10));
        if (lam < -1e-9) ++nonclassical;
    }
    CHECK(nonclassical > 100);  // the check above must actually exercise both cases
    CHECK(nonclassical < 1000);

    CHECK(negativity(DensityMatrix::pure(PureSpin1(0, 1, 0))) ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(negativity(DensityMatrix(HermMatrix::diag({1.0 / 3, 1.0 / 3, 1.0 / 3}))) ==
          doctest::Approx(0).epsilon(1e-14));
}

TEST_CASE("dicke_embed reference states") {
    // |1,1> -> |uu><uu|
    HermMatrix uu = dicke_embed(DensityMatrix::pure(PureSpin1(1, 0, 0)));
    CHECK(uu(0, 0).real() == doctest::Approx(1).epsilon(1e-14));
    CHECK(std::abs(uu(3, 3)) < 1e-14);

    // |1,0> -> |psi+><psi+| on (ud, du)
    HermMatrix mid = dicke_embed(DensityMatrix::pure(PureSpin1(0, 1, 0)));
    CHECK(mid(1, 1).real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(mid(2, 2).real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(mid(1, 2).real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::abs(mid(0, 0)) < 1e-14);

    // trace and PSD preserved for random states
    RngStream rng(5, 0);
    for (int trial = 0; trial < 200; ++trial) {
        HermMatrix two = dicke_embed(random_hs_density(rng));
        CHECK(two.trace_real() == doctest::Approx(1).epsilon(1e-12));
        EigHerm e = eigh_hermitian(two);
        CHECK(e.values[0] >= -1e-12);
    }
}

TEST_CASE("concurrence reference values") {
    // Bell state |psi+>: concurrence 1
    HermMatrix bell = dicke_embed(DensityMatrix::pure(PureSpin1(0, 1, 0)));
    CHECK(concurrence(bell) == doctest::Approx(1).epsilon(1e-10));

    // product state uu: concurrence 0
    HermMatrix prod = dicke_embed(DensityMatrix::pure(PureSpin1(1, 0, 0)));
    CHECK(concurrence(prod) == doctest::Approx(0).epsilon(1e-10));

    // maximally mixed spin-1 embeds to a separable symmetric state
    HermMatrix sep = dicke_embed(DensityMatrix(HermMatrix::diag({1.0 / 3, 1.0 / 3, 1.0 / 3})));
    CHECK(concurrence(sep) == doctest::Approx(0).epsilon(1e-9));

    CHECK_THROWS_AS(concurrence(HermMatrix::diag({1, 1, -0.5, -0.5})), invalid_input);
}

TEST_CASE("pure states: concurrence = -lambda = 2 negativity") {
    RngStream rng(6, 0);
    for (int trial = 0; trial < 300; ++trial) {
        PureSpin1 psi = random_pure(rng);
        DensityMatrix rho = DensityMatrix::pure(psi);
        double lam = min_bloch_eig(rho);
        double c = concurrence(dicke_embed(rho));
        double n = negativity(rho);
        CHECK(c == doctest::Approx(std::max(0.0, -lam)).epsilon(5e-8));
        CHECK(c == doctest::Approx(2 * n).epsilon(5e-8));
    }
}

TEST_CASE("classicality, zero negativity and separability coincide") {
    RngStream rng(7, 0);
    for (int trial = 0; trial < 500; ++trial) {
        DensityMatrix rho = random_hs_density(rng);
        bool classical = is_classical(rho).classical;
        bool ppt = negativity(rho) <= 1e-12;
        CHECK(classical == ppt);
        if (classical) CHECK(concurrence(dicke_embed(rho)) < 1e-7);
    }
}

TEST_CASE("canonical family: negativity along gamma") {
    // state with Majorana points at (gamma,0),(pi-gamma,0)
    for (double gamma : {0.1, 0.3, kPi / 4, 1.0, kPi / 2}) {
        double sg = std::sin(gamma);
        double n = std::sqrt(2.0 + 2.0 / (sg * sg));
        PureSpin1 psi(1.0 / n, std::sqrt(2.0) / (sg * n), 1.0 / n);
        double lam = (sg * sg - 1) / (sg * sg + 1);
        CHECK(negativity(DensityMatrix::pure(psi)) == doctest::Approx(-lam / 2).epsilon(1e-10));
    }
}
