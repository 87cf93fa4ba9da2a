// fock.hpp — Hamiltonian assembly in the truncated Fock (x) angular-momentum
// basis, optionally restricted to one parity block.

#pragma once

#include <Eigen/Dense>
#include <optional>

#include "dicke/model.hpp"

namespace dicke {

inline constexpr std::size_t kDefaultMaxDimension = 20000;

/// Dense real-symmetric Hamiltonian tagged with its basis. `states[i]` is the
/// basis ket of row/column i (the identity map for a full basis, the retained
/// subset for a parity block).
struct HamiltonianMatrix {
    BasisSpec spec;
    std::optional<Parity> parity_block;
    std::vector<BasisState> states;
    Eigen::MatrixXd entries;

    std::size_t dimension() const { return states.size(); }
};

/// Assemble
///   H(n,m | n,m)       = n omega + m delta
///   H(n+1,m+-1 | n,m)  = (gamma/sqrt(N)) sqrt(n+1) c_{+-}(j, m)
/// symmetrically (no post-hoc symmetrization). Off-diagonal entries connect
/// only |dn| = 1, |dm| = 1 pairs.
HamiltonianMatrix build_fock_hamiltonian(const ModelParams& params, int cutoff,
                                         std::optional<Parity> parity = std::nullopt,
                                         std::size_t max_dimension = kDefaultMaxDimension);

struct ParityBlocks {
    HamiltonianMatrix even;
    HamiltonianMatrix odd;
};

/// Both parity blocks; their spectra partition the full spectrum.
ParityBlocks build_parity_projected_spectrum(const ModelParams& params, int cutoff,
                                             std::size_t max_dimension = kDefaultMaxDimension);

/// dH/dgamma = (a^+ + a)(J_+ + J_-)/sqrt(N) on the same basis (exact, H is
/// linear in gamma). Used by the Hellmann-Feynman cross-check.
Eigen::MatrixXd fock_coupling_operator(const ModelParams& params, int cutoff);

/// Diagonal of the parity operator exp(i pi Lambda) in the Fock basis: +-1
/// per basis state.
Eigen::VectorXd fock_parity_diagonal(const BasisSpec& spec);

}  // namespace dicke
