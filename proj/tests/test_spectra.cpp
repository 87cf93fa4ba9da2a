#include <doctest.h>

#include <cmath>

#include "dicke/coherent.hpp"
#include "dicke/spectra.hpp"

using namespace dicke;

namespace {

// synthetic wrapper for pure solver tests
HamiltonianMatrix wrap(Eigen::MatrixXd m) {
    BasisSpec spec(BasisKind::Fock, static_cast<int>(m.rows()) - 1, 0.5);
    return {spec, std::nullopt, {}, std::move(m)};
}

}  // namespace

TEST_CASE("solve_lowest: diagonal and 2x2 anchors, deterministic signs") {
    Eigen::MatrixXd d = Eigen::Vector3d(2.0, 0.0, 1.0).asDiagonal();
    EigenSolution s = solve_lowest(wrap(d), 2);
    CHECK(s.energies[0] == doctest::Approx(0.0));
    CHECK(s.energies[1] == doctest::Approx(1.0));

    const double gamma = 0.37;
    Eigen::MatrixXd two(2, 2);
    two << 0.0, gamma, gamma, 0.0;
    EigenSolution t = solve_lowest(wrap(two), 2);
    CHECK(t.energies[0] == doctest::Approx(-gamma).epsilon(1e-14));
    CHECK(t.energies[1] == doctest::Approx(+gamma).epsilon(1e-14));
    for (int k = 0; k < 2; ++k) {
        Eigen::Index imax = 0;
        t.vectors.col(k).cwiseAbs().maxCoeff(&imax);
        CHECK(t.vectors.col(k)[imax] > 0.0);
    }

    CHECK_THROWS_AS(solve_lowest(wrap(two), 3), std::domain_error);
}

TEST_CASE("solve_lowest: residuals and orthonormality on a physical matrix") {
    ModelParams p(1.0, 1.0, 0.7, 2.0);
    HamiltonianMatrix H = build_fock_hamiltonian(p, 25);
    EigenSolution s = solve_lowest(H, 4);

    for (int k = 0; k < 4; ++k) {
        const double E = s.energies[k];
        CHECK((H.entries * s.vectors.col(k) - E * s.vectors.col(k)).norm() <=
              1e-8 * std::max(1.0, std::abs(E)));
    }
    CHECK((s.vectors.transpose() * s.vectors - Eigen::MatrixXd::Identity(4, 4))
              .cwiseAbs()
              .maxCoeff() < 1e-10);
    if (s.energies.size() > 1) CHECK(s.energies[0] <= s.energies[1]);
}

TEST_CASE("quoted ground energy j=1 gamma=2 in a fixed Fock box") {
    ModelParams p(1.0, 1.0, 2.0, 1.0);
    EigenSolution s = solve_lowest(build_fock_hamiltonian(p, 40), 1);
    CHECK(std::abs(s.energies[0] - (-8.03226)) < 5e-5);
}

TEST_CASE("converge: gamma = 0 settles at the floor in both bases") {
    ModelParams p(1.0, 1.0, 0.0, 2.0);
    for (BasisKind basis : {BasisKind::Fock, BasisKind::Coherent}) {
        ConvergenceResult r = converge(p, basis, 2, 1e-6);
        CHECK(r.report.minimal_cutoff == 2);
        CHECK(r.report.energies[0] == doctest::Approx(-2.0).epsilon(1e-12));
        // escalation path is strictly increasing in cutoff
        for (std::size_t i = 1; i < r.report.escalation_path.size(); ++i) {
            CHECK(r.report.escalation_path[i].first > r.report.escalation_path[i - 1].first);
        }
    }
}

TEST_CASE("converge: reported minimal cutoff satisfies its defining inequality") {
    ModelParams p(1.0, 1.0, 0.7, 1.0);
    for (BasisKind basis : {BasisKind::Fock, BasisKind::Coherent}) {
        const double tol = 1e-6;
        ConvergenceResult r = converge(p, basis, 2, tol);
        const int c = r.report.minimal_cutoff;

        const auto energies = [&](int cutoff) {
            const HamiltonianMatrix h =
                basis == BasisKind::Fock ? build_fock_hamiltonian(p, cutoff)
                                         : build_coherent_hamiltonian(p, cutoff);
            return solve_lowest(h, 2).energies;
        };
        CHECK((energies(c) - energies(c + 1)).cwiseAbs().maxCoeff() <= tol);
        if (c > 2) {  // minimality: one step below violates it
            CHECK((energies(c - 1) - energies(c)).cwiseAbs().maxCoeff() > tol);
        }

        // ground-state energy is monotone non-increasing along the path
        for (std::size_t i = 1; i < r.report.escalation_path.size(); ++i) {
            CHECK(r.report.escalation_path[i].second <=
                  r.report.escalation_path[i - 1].second + 1e-13);
        }
    }
}

TEST_CASE("converge: quoted coherent energies at large j") {
    ModelParams p(1.0, 1.0, 1.0, 10.0);
    ConvergenceResult r = converge(p, BasisKind::Coherent, 2, 1e-7);
    CHECK(std::abs(r.report.energies[0] - (-21.26310)) < 5e-5);
}

TEST_CASE("converge: fock needs far more excitations than coherent at j=5, gamma=2") {
    ModelParams p(1.0, 1.0, 2.0, 5.0);
    ConvergenceResult fock = converge(p, BasisKind::Fock, 2, 1e-6);
    ConvergenceResult coh = converge(p, BasisKind::Coherent, 2, 1e-6);
    CHECK(fock.report.minimal_cutoff >= 60);   // within ~1.3x of 78
    CHECK(fock.report.minimal_cutoff <= 101);
    CHECK(fock.report.minimal_cutoff > 3 * coh.report.minimal_cutoff);
}

TEST_CASE("converge: budget exhaustion carries the escalation path") {
    ModelParams p(1.0, 1.0, 2.0, 5.0);
    CutoffPolicy policy;
    policy.max_dimension = 500;
    CHECK_THROWS_AS(converge(p, BasisKind::Fock, 2, 1e-6, policy), ConvergenceError);
    try {
        converge(p, BasisKind::Fock, 2, 1e-6, policy);
    } catch (const ConvergenceError& err) {
        CHECK(!err.escalation_path().empty());
    }
}

TEST_CASE("crossbasis_check") {
    ModelParams zero(1.0, 1.0, 0.0, 1.5);
    CrossBasisReport r0 = crossbasis_check(zero, 2, 1e-8);
    CHECK(r0.passed);
    CHECK(r0.abs_differences.maxCoeff() < 1e-12);

    ModelParams p(1.0, 1.0, 1.0, 2.0);
    CrossBasisReport r = crossbasis_check(p, 2, 1e-7);
    CHECK(r.passed);
    CHECK(r.abs_differences.maxCoeff() <= 1e-6);

    ModelParams q(1.0, 1.0, 0.5, 1.0);
    CrossBasisReport r2 = crossbasis_check(q, 2, 1e-7);
    CHECK(std::abs(r2.fock.energies[0] - (-1.15370)) < 5e-5);
    CHECK(std::abs(r2.coherent.energies[0] - (-1.15370)) < 5e-5);
}

TEST_CASE("gap across the transition at j=10") {
    ModelParams deep(1.0, 1.0, 2.0, 10.0);
    ConvergenceResult r2 = converge(deep, BasisKind::Coherent, 2, 1e-8);
    CHECK(r2.report.energies[1] - r2.report.energies[0] < 1e-3);

    // normal phase: the gap follows sqrt(1 - 2 gamma) from above at resonance
    for (double gamma : {0.05, 0.25}) {
        ModelParams p(1.0, 1.0, gamma, 10.0);
        ConvergenceResult r = converge(p, BasisKind::Coherent, 2, 1e-8);
        const double gap = r.report.energies[1] - r.report.energies[0];
        const double limit = std::sqrt(1.0 - 2.0 * gamma);
        CHECK(gap >= limit);
        CHECK(gap <= limit + 0.02);
    }
}

TEST_CASE("default start cutoffs per basis") {
    ModelParams p(1.0, 1.0, 2.0, 5.0);  // G^2 j^2 = 40
    CutoffPolicy policy;
    CHECK(default_start_cutoff(p, BasisKind::Fock, policy) == 42);
    CHECK(default_start_cutoff(p, BasisKind::Coherent, policy) == 2);
    policy.start = 17;
    CHECK(default_start_cutoff(p, BasisKind::Fock, policy) == 17);
}
