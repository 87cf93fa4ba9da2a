#include "dicke/spectra.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <sstream>

#include "dicke/coherent.hpp"

namespace dicke {

EigenSolution solve_lowest(const HamiltonianMatrix& hamiltonian, int k) {
    const Eigen::Index dim = hamiltonian.entries.rows();
    if (k < 1 || k > dim) throw std::domain_error("requested state count exceeds the dimension");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hamiltonian.entries);
    if (solver.info() != Eigen::Success) {
        std::ostringstream msg;
        msg << "symmetric eigensolver failed: dim=" << dim
            << " norm=" << hamiltonian.entries.norm()
            << " diag=[" << hamiltonian.entries.diagonal().minCoeff() << ", "
            << hamiltonian.entries.diagonal().maxCoeff() << "]";
        throw SolverError(msg.str());
    }

    EigenSolution sol{hamiltonian.spec, hamiltonian.parity_block, hamiltonian.states,
                      solver.eigenvalues().head(k), solver.eigenvectors().leftCols(k), k};

    for (int s = 0; s < k; ++s) {
        auto col = sol.vectors.col(s);
        Eigen::Index imax = 0;
        col.cwiseAbs().maxCoeff(&imax);
        if (col[imax] < 0.0) col = -col;

        const double E = sol.energies[s];
        const double residual = (hamiltonian.entries * col - E * col).norm();
        if (residual > 1e-8 * std::max(1.0, std::abs(E))) {
            std::ostringstream msg;
            msg << "eigenpair residual " << residual << " too large for E=" << E
                << " (dim=" << dim << ", norm=" << hamiltonian.entries.norm() << ")";
            throw SolverError(msg.str());
        }
    }
    return sol;
}

int default_start_cutoff(const ModelParams& params, BasisKind basis, const CutoffPolicy& policy) {
    if (policy.start) return std::max(policy.floor, *policy.start);
    if (basis == BasisKind::Coherent) return policy.floor;
    const double G = params.displacement();
    const double occupancy = G * G * params.j() * params.j();
    return std::max(policy.floor, static_cast<int>(std::ceil(occupancy)) + 2);
}

namespace {

HamiltonianMatrix build(const ModelParams& params, BasisKind basis, int cutoff,
                        std::size_t max_dimension) {
    return basis == BasisKind::Fock
               ? build_fock_hamiltonian(params, cutoff, std::nullopt, max_dimension)
               : build_coherent_hamiltonian(params, cutoff, max_dimension);
}

}  // namespace

ConvergenceResult converge(const ModelParams& params, BasisKind basis, int k, double tolerance,
                           const CutoffPolicy& policy) {
    if (!(tolerance > 0.0)) throw std::domain_error("tolerance must be > 0");
    const auto t0 = std::chrono::steady_clock::now();
    const double abs_tol = tolerance * params.omega();

    std::map<int, Eigen::VectorXd> tracked;
    std::optional<EigenSolution> last;
    int last_cutoff = -1;

    auto energies_at = [&](int cutoff) -> const Eigen::VectorXd& {
        auto it = tracked.find(cutoff);
        if (it == tracked.end()) {
            EigenSolution sol = solve_lowest(build(params, basis, cutoff, policy.max_dimension), k);
            it = tracked.emplace(cutoff, sol.energies).first;
            if (cutoff > last_cutoff) {
                last = std::move(sol);
                last_cutoff = cutoff;
            }
        }
        return it->second;
    };
    auto path = [&] {
        std::vector<std::pair<int, double>> p;
        p.reserve(tracked.size());
        for (const auto& [c, e] : tracked) p.emplace_back(c, e[0]);
        return p;
    };
    auto settled = [&](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
        return (a - b).cwiseAbs().maxCoeff() <= abs_tol;
    };

    // coarse scan; solve the lower cutoff first so a budget error still
    // carries every solved point in its path
    int a = default_start_cutoff(params, basis, policy);
    try {
        for (;;) {
            const Eigen::VectorXd& at_a = energies_at(a);
            const Eigen::VectorXd& at_next = energies_at(a + policy.coarse_step);
            if (settled(at_a, at_next)) break;
            a += policy.coarse_step;
        }
        // unit-step refinement below the settled interval
        while (a - 1 >= policy.floor && settled(energies_at(a - 1), energies_at(a))) --a;
    } catch (const ResourceError& err) {
        std::ostringstream msg;
        msg << "not converged within the dimension budget: " << err.what();
        throw ConvergenceError(msg.str(), path());
    }

    ConvergenceReport report{params,
                             basis,
                             k,
                             tolerance,
                             a,
                             tracked.rbegin()->second,
                             path(),
                             std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                                 .count()};
    return {std::move(report), std::move(*last)};
}

CrossBasisReport crossbasis_check(const ModelParams& params, int k, double tolerance,
                                  const CutoffPolicy& policy) {
    ConvergenceResult fock = converge(params, BasisKind::Fock, k, tolerance, policy);
    ConvergenceResult coh = converge(params, BasisKind::Coherent, k, tolerance, policy);

    CrossBasisReport out{std::move(fock.report), std::move(coh.report), {}, 10.0 * tolerance,
                         false};
    out.abs_differences = (out.fock.energies - out.coherent.energies).cwiseAbs();
    out.passed = out.abs_differences.maxCoeff() <= out.threshold * params.omega();
    return out;
}

}  // namespace dicke
