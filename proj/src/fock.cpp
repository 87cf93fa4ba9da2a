#include "dicke/fock.hpp"

#include <cmath>

namespace dicke {

namespace {

std::vector<BasisState> enumerate_states(const BasisSpec& spec, std::optional<Parity> parity) {
    std::vector<BasisState> states;
    states.reserve(spec.dimension());
    for (std::size_t i = 0; i < spec.dimension(); ++i) {
        BasisState s = state_of(i, spec);
        if (!parity || parity_of2(s.n, s.twice_m, spec.twice_j()) == *parity) {
            states.push_back(s);
        }
    }
    return states;
}

}  // namespace

HamiltonianMatrix build_fock_hamiltonian(const ModelParams& params, int cutoff,
                                         std::optional<Parity> parity,
                                         std::size_t max_dimension) {
    BasisSpec spec(BasisKind::Fock, cutoff, params.j());
    if (spec.dimension() > max_dimension) throw ResourceError(spec.dimension(), max_dimension);

    std::vector<BasisState> states = enumerate_states(spec, parity);
    const Eigen::Index dim = static_cast<Eigen::Index>(states.size());

    // sub-index lookup over the full basis (identity when unprojected)
    std::vector<Eigen::Index> sub(spec.dimension(), -1);
    for (Eigen::Index i = 0; i < dim; ++i) sub[index_of(states[i], spec)] = i;

    const double g = params.gamma() / std::sqrt(static_cast<double>(params.atom_count()));
    const int tj = params.twice_j();

    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const BasisState& s = states[i];
        H(i, i) = s.n * params.omega() + s.m() * params.delta();
        if (s.n + 1 > cutoff) continue;
        const double photon = std::sqrt(static_cast<double>(s.n + 1));
        for (int dm : {+2, -2}) {
            const int tm2 = s.twice_m + dm;
            if (tm2 < -tj || tm2 > tj) continue;
            const double ladder = dm > 0 ? ladder_coeff_plus2(tj, s.twice_m)
                                         : ladder_coeff_minus2(tj, s.twice_m);
            const Eigen::Index k = sub[index_of({s.n + 1, tm2}, spec)];
            if (k < 0) continue;  // partner dropped by the parity restriction
            const double v = g * photon * ladder;
            H(k, i) = v;
            H(i, k) = v;
        }
    }
    return {spec, parity, std::move(states), std::move(H)};
}

ParityBlocks build_parity_projected_spectrum(const ModelParams& params, int cutoff,
                                             std::size_t max_dimension) {
    return {build_fock_hamiltonian(params, cutoff, Parity::Even, max_dimension),
            build_fock_hamiltonian(params, cutoff, Parity::Odd, max_dimension)};
}

Eigen::MatrixXd fock_coupling_operator(const ModelParams& params, int cutoff) {
    BasisSpec spec(BasisKind::Fock, cutoff, params.j());
    const Eigen::Index dim = static_cast<Eigen::Index>(spec.dimension());
    const int tj = params.twice_j();
    const double scale = 1.0 / std::sqrt(static_cast<double>(params.atom_count()));

    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const BasisState s = state_of(i, spec);
        if (s.n + 1 > cutoff) continue;
        const double photon = std::sqrt(static_cast<double>(s.n + 1));
        for (int dm : {+2, -2}) {
            const int tm2 = s.twice_m + dm;
            if (tm2 < -tj || tm2 > tj) continue;
            const double ladder = dm > 0 ? ladder_coeff_plus2(tj, s.twice_m)
                                         : ladder_coeff_minus2(tj, s.twice_m);
            const Eigen::Index k =
                static_cast<Eigen::Index>(index_of({s.n + 1, tm2}, spec));
            const double v = scale * photon * ladder;
            M(k, i) = v;
            M(i, k) = v;
        }
    }
    return M;
}

Eigen::VectorXd fock_parity_diagonal(const BasisSpec& spec) {
    Eigen::VectorXd p(static_cast<Eigen::Index>(spec.dimension()));
    for (std::size_t i = 0; i < spec.dimension(); ++i) {
        const BasisState s = state_of(i, spec);
        p[static_cast<Eigen::Index>(i)] =
            parity_sign(parity_of2(s.n, s.twice_m, spec.twice_j()));
    }
    return p;
}

}  // namespace dicke
