#include "dicke/observables.hpp"

#include <cmath>

#include "dicke/coherent.hpp"

namespace dicke {

namespace {

double fock_parity_expectation(const EigenSolution& solution, int state_index) {
    const auto v = solution.vectors.col(state_index);
    double acc = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const BasisState& s = solution.states[static_cast<std::size_t>(i)];
        acc += parity_sign(parity_of2(s.n, s.twice_m, solution.spec.twice_j())) * v[i] * v[i];
    }
    return acc;
}

}  // namespace

double measure_parity(const EigenSolution& solution, const ModelParams& params,
                      int state_index) {
    if (state_index < 0 || state_index >= solution.k) {
        throw std::domain_error("state index out of range");
    }
    if (solution.spec.kind() == BasisKind::Fock) {
        if (solution.parity_block) return parity_sign(*solution.parity_block);
        return fock_parity_expectation(solution, state_index);
    }

    int cutoff = suggested_fock_cutoff_for_map(params, solution.spec.cutoff());
    for (int attempt = 0;; ++attempt) {
        try {
            const Eigen::VectorXd mapped =
                coherent_to_fock(solution.vectors.col(state_index), params, cutoff);
            const BasisSpec fock_spec(BasisKind::Fock, cutoff, params.j());
            const Eigen::VectorXd p = fock_parity_diagonal(fock_spec);
            return p.dot(mapped.cwiseProduct(mapped)) / mapped.squaredNorm();
        } catch (const NormLossError&) {
            if (attempt >= 6) throw;
            cutoff = cutoff * 3 / 2 + 8;
        }
    }
}

ObservableRecord measure(const EigenSolution& solution, const ModelParams& params,
                         int state_index) {
    if (state_index < 0 || state_index >= solution.k) {
        throw std::domain_error("state index out of range");
    }
    const auto v = solution.vectors.col(state_index);

    ObservableRecord rec{params};
    rec.basis = solution.spec.kind();
    rec.cutoff = solution.spec.cutoff();
    rec.state_index = state_index;
    rec.energy = solution.energies[state_index];
    rec.gap = solution.energies[state_index] - solution.energies[0];

    if (solution.spec.kind() == BasisKind::Fock) {
        double n_acc = 0.0;
        double m_acc = 0.0;
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            const BasisState& s = solution.states[static_cast<std::size_t>(i)];
            const double w = v[i] * v[i];
            n_acc += s.n * w;
            m_acc += s.m() * w;
        }
        rec.photon_number = n_acc;
        rec.jz = m_acc;
    } else {
        const HamiltonianMatrix nop = photon_number_operator_coherent(params, rec.cutoff);
        const HamiltonianMatrix jzop = jz_operator_coherent(params, rec.cutoff);
        rec.photon_number = v.dot(nop.entries * v);
        rec.jz = v.dot(jzop.entries * v);
    }
    rec.photon_per_j = rec.photon_number / params.j();
    rec.jz_per_j = rec.jz / params.j();
    rec.parity = measure_parity(solution, params, state_index);

    const double degeneracy_scale = 1e-6 * params.omega();
    if (state_index > 0 &&
        solution.energies[state_index] - solution.energies[state_index - 1] < degeneracy_scale) {
        rec.near_degenerate = true;
    }
    if (state_index + 1 < solution.k &&
        solution.energies[state_index + 1] - solution.energies[state_index] < degeneracy_scale) {
        rec.near_degenerate = true;
    }
    return rec;
}

}  // namespace dicke
