#include <doctest.h>

#include <cmath>

#include "dicke/coherent.hpp"
#include "dicke/oracles.hpp"
#include "dicke/spectra.hpp"

using namespace dicke;

TEST_CASE("brute-force Hamiltonian: hermitian, diagonal at gamma=0") {
    ModelParams p(1.0, 1.0, 0.0, 1.0);
    const Eigen::MatrixXd H = oracles::brute_force_hamiltonian(p, 3);
    CHECK((H - H.transpose()).cwiseAbs().maxCoeff() == 0.0);

    BasisSpec spec(BasisKind::Fock, 3, 1.0);
    for (std::size_t i = 0; i < spec.dimension(); ++i) {
        const BasisState s = state_of(i, spec);
        CHECK(H(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) ==
              doctest::Approx(s.n + s.m()).epsilon(1e-15));
    }
    CHECK_THROWS_AS(oracles::brute_force_hamiltonian(ModelParams(1, 1, 1, 20), 200),
                    std::domain_error);
}

TEST_CASE("displaced series oracle: closed forms and norm conservation") {
    for (double beta : {0.7, -1.3, 3.5}) {
        const double e = std::exp(-0.5 * beta * beta);
        oracles::SeriesOverlap s00 =
            oracles::displaced_overlap_series_full(0, 0, beta,
                                                   oracles::default_series_cutoff(0, 0, beta));
        CHECK(s00.value == doctest::Approx(e).epsilon(1e-13));
        CHECK(s00.norm_defect < 1e-14);
        CHECK(oracles::displaced_overlap_series(1, 0, beta) ==
              doctest::Approx(beta * e).epsilon(1e-12));
    }
    CHECK_THROWS_AS(oracles::displaced_overlap_series_full(5, 5, 2.0, 10), std::domain_error);
}

TEST_CASE("series oracle and primary kernel agree on a grid") {
    const double beta = 1.3;
    const int cutoff = oracles::default_series_cutoff(30, 30, beta);
    for (int n = 0; n <= 30; ++n) {
        const Eigen::VectorXd col = oracles::displaced_column_series(n, beta, cutoff);
        for (int np = 0; np <= 30; ++np) {
            CHECK(std::abs(col[np] - displacement_entry(np, n, beta)) < 1e-12);
        }
    }
}

TEST_CASE("mean field: closed forms, anchors, and the numerical minimizer") {
    ModelParams normal(1.0, 1.0, 0.25, 10.0);
    oracles::MeanFieldSolution n = oracles::mean_field(normal);
    CHECK(n.z == -1.0);
    CHECK(n.alpha == 0.0);
    CHECK(n.energy_per_j == doctest::Approx(-1.0));

    oracles::MeanFieldSolution mid = oracles::mean_field(ModelParams(1.0, 1.0, 1.0, 20.0));
    CHECK(mid.energy_per_j == doctest::Approx(-2.125).epsilon(1e-14));
    CHECK(mid.z == doctest::Approx(-0.25).epsilon(1e-14));
    CHECK(mid.photon_per_j == doctest::Approx(1.875).epsilon(1e-12));

    oracles::MeanFieldSolution deep = oracles::mean_field(ModelParams(1.0, 1.0, 2.0, 20.0));
    CHECK(deep.energy_per_j == doctest::Approx(-8.03125).epsilon(1e-14));

    for (double gamma : {0.1, 0.4, 0.5, 0.500001, 0.7, 1.0, 2.0}) {
        for (auto [omega, delta] : {std::pair{1.0, 1.0}, {1.3, 0.8}}) {
            ModelParams p(omega, delta, gamma, 10.0);
            const oracles::MeanFieldSolution closed = oracles::mean_field(p);
            const oracles::MeanFieldSolution numeric = oracles::mean_field_numerical(p);
            CHECK(std::abs(closed.energy_per_j - numeric.energy_per_j) < 1e-10);
            CHECK(std::abs(closed.z - numeric.z) < 1e-5);
            // alpha ~ sqrt(1 - z^2) is ill-conditioned just above the critical point
            CHECK(std::abs(std::abs(closed.alpha) - std::abs(numeric.alpha)) < 1e-3);
        }
    }
}

TEST_CASE("finite-j ground energies approach the mean field monotonically") {
    for (double gamma : {1.0, 2.0}) {
        const double mf = oracles::mean_field(ModelParams(1.0, 1.0, gamma, 5.0)).energy_per_j;
        double previous = 1e300;
        for (double j : {5.0, 10.0, 20.0}) {
            ModelParams p(1.0, 1.0, gamma, j);
            ConvergenceResult r = converge(p, BasisKind::Coherent, 1, 1e-8);
            const double dev = std::abs(r.report.energies[0] / j - mf);
            CHECK(dev < previous);
            previous = dev;
        }
    }
}
