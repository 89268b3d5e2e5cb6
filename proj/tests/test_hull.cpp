#include <doctest.h>

#include <cmath>

#include "spinq/ensembles.hpp"
#include "spinq/entanglement.hpp"
#include "spinq/hull.hpp"

using namespace spinq;

namespace {
const double kSqrt38 = std::sqrt(3.0 / 8.0);
}

TEST_CASE("sample_atoms determinism and coverage") {
    CoherentAtomSet a = sample_atoms(256, 7, AtomStrategy::fibonacci);
    CoherentAtomSet b = sample_atoms(256, 7, AtomStrategy::fibonacci);
    REQUIRE(a.atoms.size() == 256);
    for (std::size_t i = 0; i < a.atoms.size(); ++i) {
        CHECK(a.atoms[i].theta == b.atoms[i].theta);
        CHECK(a.atoms[i].phi == b.atoms[i].phi);
    }
    CoherentAtomSet c = sample_atoms(256, 8, AtomStrategy::fibonacci);
    bool differs = false;
    for (std::size_t i = 0; i < c.atoms.size(); ++i)
        if (c.atoms[i].theta != a.atoms[i].theta || c.atoms[i].phi != a.atoms[i].phi)
            differs = true;
    CHECK(differs);

    // mean direction near zero, units consistent with angles
    for (AtomStrategy s : {AtomStrategy::fibonacci, AtomStrategy::uniform_random}) {
        CoherentAtomSet set = sample_atoms(2000, 3, s);
        double mean[3] = {0, 0, 0};
        for (std::size_t i = 0; i < set.atoms.size(); ++i) {
            auto u = set.atoms[i].unit_vector();
            for (int k = 0; k < 3; ++k) {
                CHECK(set.units[i][k] == doctest::Approx(u[k]).epsilon(1e-14));
                mean[k] += u[k] / 2000;
            }
        }
        double tol = (s == AtomStrategy::fibonacci) ? 1e-3 : 0.06;
        for (int k = 0; k < 3; ++k) CHECK(std::abs(mean[k]) < tol);
    }

    // fibonacci atoms are well separated
    CoherentAtomSet f = sample_atoms(100, 1, AtomStrategy::fibonacci);
    double min_dot = 1;
    for (int i = 0; i < 100; ++i)
        for (int j = i + 1; j < 100; ++j) {
            double d = 0;
            for (int k = 0; k < 3; ++k) d += f.units[i][k] * f.units[j][k];
            min_dot = std::min(min_dot, std::abs(1 - d));
        }
    CHECK(min_dot > 1e-3);

    CHECK_THROWS_AS(sample_atoms(3, 1, AtomStrategy::fibonacci), invalid_input);
}

TEST_CASE("atom_gram values") {
    CoherentAtomSet set;
    set.atoms = {CoherentAngles(0, 0), CoherentAngles(3.14159265358979323846, 0),
                 CoherentAngles(3.14159265358979323846 / 2, 0), CoherentAngles(0, 1.0)};
    for (const auto& a : set.atoms) set.units.push_back(a.unit_vector());
    std::vector<double> g = atom_gram(set);
    REQUIRE(g.size() == 16);
    CHECK(g[0] == doctest::Approx(1).epsilon(1e-14));          // self overlap
    CHECK(g[1] == doctest::Approx(0).epsilon(1e-14));          // antipodal
    CHECK(g[2] == doctest::Approx(0.25).epsilon(1e-14));       // orthogonal directions
    CHECK(g[3] == doctest::Approx(1).epsilon(1e-14));          // same direction, other phi
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(g[i * 4 + j] == doctest::Approx(g[j * 4 + i]));
}

TEST_CASE("simplex_project") {
    std::vector<double> p = simplex_project({0.5, 0.5});
    CHECK(p[0] == doctest::Approx(0.5));
    CHECK(p[1] == doctest::Approx(0.5));

    p = simplex_project({2.0, 0.0});
    CHECK(p[0] == doctest::Approx(1.0));
    CHECK(p[1] == doctest::Approx(0.0));

    p = simplex_project({1.0, 1.0, -3.0});
    CHECK(p[0] == doctest::Approx(0.5));
    CHECK(p[1] == doctest::Approx(0.5));
    CHECK(p[2] == doctest::Approx(0.0));

    RngStream rng(12, 0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> v(30);
        for (auto& x : v) x = rng.next_gaussian();
        std::vector<double> w = simplex_project(v);
        double sum = 0;
        for (double x : w) {
            CHECK(x >= 0);
            sum += x;
        }
        CHECK(sum == doctest::Approx(1).epsilon(1e-12));
        // projection optimality: <v - w, u - w> <= 0 for simplex vertices u
        for (std::size_t k = 0; k < v.size(); ++k) {
            double inner = 0;
            for (std::size_t i = 0; i < v.size(); ++i)
                inner += (v[i] - w[i]) * ((i == k ? 1.0 : 0.0) - w[i]);
            CHECK(inner <= 1e-10);
        }
    }
}

TEST_CASE("qp finds zero for classical mixtures") {
    RngStream rng(31, 0);
    CoherentAtomSet atoms = sample_atoms(512, 1, AtomStrategy::fibonacci);
    for (int trial = 0; trial < 10; ++trial) {
        // random mixture of 5 coherent projectors
        Decomposition d;
        double sum = 0;
        for (int k = 0; k < 5; ++k) {
            d.atoms.push_back(random_coherent(rng));
            double w = rng.next_double() + 0.1;
            d.weights.push_back(w);
            sum += w;
        }
        for (auto& w : d.weights) w /= sum;
        DensityMatrix rho = mixture_density(d);
        QPResult r = solve_simplex_qp(rho, atoms, 1e-10);
        QPResult rr = refine(rho, r, 2);
        CHECK(rr.quantumness_estimate < 1e-5);
        CHECK(rr.quantumness_estimate <= r.quantumness_estimate + 1e-15);
    }
}

TEST_CASE("qp reproduces the maximal quantumness sqrt(3/8)") {
    DensityMatrix rho = DensityMatrix::pure(PureSpin1(0, 1, 0));
    CoherentAtomSet atoms = sample_atoms(1024, 1, AtomStrategy::fibonacci);
    QPResult r = refine(rho, solve_simplex_qp(rho, atoms, 1e-10), 2);
    CHECK(r.converged);
    CHECK(r.quantumness_estimate == doctest::Approx(kSqrt38).epsilon(1e-5));
    CHECK(r.quantumness_estimate >= kSqrt38 - 1e-9);  // exact value is a true lower limit
    // certificate: the returned decomposition really achieves the estimate
    double dist = hs_distance(rho, mixture_density(r.decomposition));
    CHECK(dist == doctest::Approx(r.quantumness_estimate).epsilon(1e-9));
}

TEST_CASE("qp matches the exact pure-state value on random states") {
    RngStream rng(44, 0);
    QpSolver solver(sample_atoms(1024, 1, AtomStrategy::fibonacci));
    for (int trial = 0; trial < 15; ++trial) {
        PureSpin1 psi = random_pure(rng);
        DensityMatrix rho = DensityMatrix::pure(psi);
        double lam = min_bloch_eig(rho);
        QPResult r = refine(rho, solver.solve(rho, 1e-10), 2);
        CHECK(r.quantumness_estimate == doctest::Approx(f_quantumness(lam)).epsilon(2e-5));
        CHECK(r.quantumness_estimate >= f_quantumness(lam) - 1e-9);
    }
}

TEST_CASE("quantumness dispatch") {
    QuantumnessConfig cfg;
    cfg.atoms = 512;

    // classical short-circuit
    QuantumnessReport c = quantumness(DensityMatrix(HermMatrix::diag({1.0 / 3, 1.0 / 3, 1.0 / 3})), cfg);
    CHECK(c.method == Method::classical_zero);
    CHECK(c.value == 0);
    CHECK(c.lower_bound == 0);

    // pure analytic path
    QuantumnessReport p = quantumness(DensityMatrix::pure(PureSpin1(0, 1, 0)), cfg);
    CHECK(p.method == Method::analytic_pure);
    CHECK(p.value == doctest::Approx(kSqrt38).epsilon(1e-12));
    CHECK(p.lambda_min == doctest::Approx(-1).epsilon(1e-10));
    REQUIRE(p.decomposition.has_value());
    CHECK(hs_distance(DensityMatrix::pure(PureSpin1(0, 1, 0)),
                      mixture_density(*p.decomposition)) ==
          doctest::Approx(kSqrt38).epsilon(1e-10));

    // mixed qp path sits between the bounds
    RngStream rng(55, 0);
    for (int trial = 0; trial < 10; ++trial) {
        DensityMatrix rho = random_hs_density(rng);
        QuantumnessReport q = quantumness(rho, cfg);
        if (q.method == Method::classical_zero) continue;
        CHECK(q.method == Method::qp);
        CHECK(q.converged);
        CHECK(q.value >= q.lower_bound - 1e-6);
        CHECK(q.value <= q.f_lambda_bound + 1e-3);
        CHECK(q.lower_bound == doctest::Approx(-q.lambda_min / std::sqrt(3.0)).epsilon(1e-12));
    }
}

TEST_CASE("shared solver gives the same answers as a fresh one") {
    QuantumnessConfig cfg;
    cfg.atoms = 512;
    QpSolver solver(sample_atoms(cfg.atoms, cfg.seed, cfg.strategy));
    RngStream rng(66, 0);
    for (int trial = 0; trial < 5; ++trial) {
        DensityMatrix rho = random_hs_density(rng);
        QuantumnessReport a = quantumness(rho, cfg);
        QuantumnessReport b = quantumness(rho, cfg, &solver);
        CHECK(a.value == b.value);
        CHECK(a.method == b.method);
    }
}

TEST_CASE("rotation invariance of the qp estimate") {
    RngStream rng(77, 0);
    QuantumnessConfig cfg;
    cfg.atoms = 1024;
    DensityMatrix rho = random_hs_density(rng);
    double q0 = quantumness(rho, cfg).value;
    for (int trial = 0; trial < 3; ++trial) {
        Rotation3 rot = Rotation3::axis_angle(random_coherent(rng).unit_vector(),
                                              6.28318530717958648 * rng.next_double());
        DensityMatrix rotated = density_from_bloch(rotate_bloch(bloch_from_density(rho), rot));
        double qr = quantumness(rotated, cfg).value;
        CHECK(qr == doctest::Approx(q0).epsilon(2e-4));
    }
}

TEST_CASE("lower_bound") {
    CHECK(lower_bound(-1) == doctest::Approx(1 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(lower_bound(0) == doctest::Approx(0).epsilon(1e-15));
    CHECK(lower_bound(-0.5) == doctest::Approx(0.5 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK_THROWS_AS(lower_bound(0.5), std::domain_error);
    CHECK_THROWS_AS(lower_bound(-1.5), std::domain_error);

    // the bound really is below f(lambda)
    for (double lam = -1; lam < 0; lam += 0.01)
        CHECK(lower_bound(lam) <= f_quantumness(lam) + 1e-12);
}

TEST_CASE("interpolated_state has lambda_min = -a") {
    PureSpin1 psi(0, 1, 0);
    for (double a : {0.1, 0.25, 0.5, 0.75, 1.0}) {
        DensityMatrix rho = interpolated_state(psi, a);
        CHECK(min_bloch_eig(rho) == doctest::Approx(-a).epsilon(1e-10));
    }
    // a = 0 gives the classical ccs itself
    CHECK(min_bloch_eig(interpolated_state(psi, 0)) >= -1e-10);
    CHECK_THROWS_AS(interpolated_state(psi, 1.5), invalid_input);
}

TEST_CASE("interpolated family quantumness stays below f(a)") {
    PureSpin1 psi(0, 1, 0);
    QuantumnessConfig cfg;
    cfg.atoms = 1024;
    for (double a : {0.2, 0.5, 0.8}) {
        QuantumnessReport q = quantumness(interpolated_state(psi, a), cfg);
        CHECK(q.lambda_min == doctest::Approx(-a).epsilon(1e-9));
        CHECK(q.value <= f_quantumness(-a) + 1e-4);
        CHECK(q.value >= lower_bound(-a) - 1e-6);
    }
}
