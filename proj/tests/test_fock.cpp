#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "dicke/fock.hpp"
#include "dicke/oracles.hpp"

using namespace dicke;

TEST_CASE("fock diagonal and first off-diagonals") {
    ModelParams p(1.0, 1.0, 0.5, 1.0);
    HamiltonianMatrix H = build_fock_hamiltonian(p, 4);

    const auto idx = [&](int n, int tm) { return index_of({n, tm}, H.spec); };
    CHECK(H.entries(idx(2, 2), idx(2, 2)) == 3.0);  // n omega + m delta
    CHECK(H.entries(idx(0, -2), idx(0, -2)) == -1.0);

    // (0.5/sqrt(2)) * sqrt(1) * sqrt(2) = 0.5 between (n=0,m=0) and (n=1,m=-1)
    CHECK(H.entries(idx(1, -2), idx(0, 0)) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("fock build equals the literal operator construction") {
    for (auto [j, gamma] : {std::pair{1.0, 0.5}, {1.5, 0.9}, {2.0, 2.0}}) {
        ModelParams p(1.0, 1.0, gamma, j);
        const int cutoff = 4;
        HamiltonianMatrix H = build_fock_hamiltonian(p, cutoff);
        const Eigen::MatrixXd ref = oracles::brute_force_hamiltonian(p, cutoff);
        CHECK((H.entries - ref).cwiseAbs().maxCoeff() < 1e-13);
    }
}

TEST_CASE("fock symmetry is exact and couplings are n,m nearest-neighbour") {
    ModelParams p(1.0, 0.7, 1.3, 2.5);
    HamiltonianMatrix H = build_fock_hamiltonian(p, 9);
    CHECK((H.entries - H.entries.transpose()).cwiseAbs().maxCoeff() == 0.0);

    for (Eigen::Index r = 0; r < H.entries.rows(); ++r) {
        for (Eigen::Index c = 0; c < H.entries.cols(); ++c) {
            if (r == c || H.entries(r, c) == 0.0) continue;
            const BasisState& a = H.states[r];
            const BasisState& b = H.states[c];
            CHECK(std::abs(a.n - b.n) == 1);
            CHECK(std::abs(a.twice_m - b.twice_m) == 2);
            // parity is conserved entry by entry
            CHECK(parity_of2(a.n, a.twice_m, H.spec.twice_j()) ==
                  parity_of2(b.n, b.twice_m, H.spec.twice_j()));
        }
    }
}

TEST_CASE("gamma -> 0 spectrum is exactly {n omega + m delta}") {
    ModelParams p(1.0, 1.0, 0.0, 1.0);
    HamiltonianMatrix H = build_fock_hamiltonian(p, 6);

    CHECK(H.entries.isDiagonal(0.0));
    Eigen::VectorXd expect(H.entries.rows());
    for (Eigen::Index i = 0; i < expect.size(); ++i) {
        expect[i] = H.states[i].n * p.omega() + H.states[i].m() * p.delta();
    }
    std::sort(expect.begin(), expect.end());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H.entries, Eigen::EigenvaluesOnly);
    CHECK((es.eigenvalues() - expect).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(es.eigenvalues()[0] == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("parity blocks partition the basis and the spectrum") {
    ModelParams p(1.0, 1.0, 0.0, 1.0);
    ParityBlocks blocks = build_parity_projected_spectrum(p, 2);
    CHECK(blocks.even.dimension() + blocks.odd.dimension() == (2 + 1) * 3);
    // gamma=0, j=1: state (n=0, m=-1) has lambda=0 and energy -1 in the even block
    CHECK((blocks.even.entries.diagonal().array() == -1.0).any());
    for (const BasisState& s : blocks.even.states) {
        CHECK(parity_of(s, 1.0) == Parity::Even);
    }

    for (auto [j, cutoff, gamma] : {std::tuple{1.0, 12, 0.7}, {1.5, 9, 1.1}, {3.0, 12, 0.4}}) {
        ModelParams q(1.0, 1.0, gamma, j);
        HamiltonianMatrix full = build_fock_hamiltonian(q, cutoff);
        ParityBlocks pb = build_parity_projected_spectrum(q, cutoff);

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es_full(full.entries,
                                                               Eigen::EigenvaluesOnly);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es_even(pb.even.entries,
                                                               Eigen::EigenvaluesOnly);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es_odd(pb.odd.entries,
                                                              Eigen::EigenvaluesOnly);

        std::vector<double> merged(es_even.eigenvalues().begin(), es_even.eigenvalues().end());
        merged.insert(merged.end(), es_odd.eigenvalues().begin(), es_odd.eigenvalues().end());
        std::sort(merged.begin(), merged.end());

        const double scale = es_full.eigenvalues().cwiseAbs().maxCoeff();
        for (Eigen::Index i = 0; i < es_full.eigenvalues().size(); ++i) {
            CHECK(std::abs(es_full.eigenvalues()[i] - merged[static_cast<std::size_t>(i)]) <=
                  1e-10 * std::max(1.0, scale));
        }
    }
}

TEST_CASE("parity-projected ground state equals the unprojected one") {
    ModelParams p(1.0, 1.0, 0.5, 2.0);
    HamiltonianMatrix full = build_fock_hamiltonian(p, 10);
    ParityBlocks pb = build_parity_projected_spectrum(p, 10);

    const auto ground = [](const HamiltonianMatrix& h) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.entries, Eigen::EigenvaluesOnly);
        return es.eigenvalues()[0];
    };
    CHECK(std::min(ground(pb.even), ground(pb.odd)) ==
          doctest::Approx(ground(full)).epsilon(1e-12));
}

TEST_CASE("memory budget refuses oversized builds") {
    ModelParams p(1.0, 1.0, 0.5, 10.0);
    CHECK_THROWS_AS(build_fock_hamiltonian(p, 2000), ResourceError);
    try {
        build_fock_hamiltonian(p, 2000);
    } catch (const ResourceError& err) {
        CHECK(err.dimension() == 2001u * 21u);
        CHECK(err.budget() == kDefaultMaxDimension);
    }

    ModelParams q(1.0, 1.0, 0.5, 2.0);
    CHECK_THROWS_AS(build_fock_hamiltonian(q, 10, std::nullopt, 50), ResourceError);  // dim 55
    CHECK_NOTHROW(build_fock_hamiltonian(q, 10, std::nullopt, 55));
}

TEST_CASE("coupling operator is dH/dgamma") {
    ModelParams p(1.0, 1.0, 0.4, 1.5);
    const Eigen::MatrixXd expect =
        (build_fock_hamiltonian(p.with_gamma(1.4), 6).entries -
         build_fock_hamiltonian(p, 6).entries);
    CHECK((fock_coupling_operator(p, 6) - expect).cwiseAbs().maxCoeff() < 1e-13);
}
