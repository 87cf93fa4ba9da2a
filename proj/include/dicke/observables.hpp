// observables.hpp — expectation values for selected eigenstates: photon
// number, inversion, excitation energy, and parity, in either basis.

#pragma once

#include "dicke/spectra.hpp"

namespace dicke {

/// Both raw and per-j scaled expectation values for one eigenstate. Energies
/// are internal (raw) units; the I/O layer rescales to units of omega.
struct ObservableRecord {
    ModelParams params;
    BasisKind basis = BasisKind::Fock;
    int cutoff = 0;
    int state_index = 0;
    double energy = 0.0;
    double gap = 0.0;  // E_state - E_0
    double photon_number = 0.0;
    double jz = 0.0;
    double photon_per_j = 0.0;
    double jz_per_j = 0.0;
    double parity = 0.0;  // <exp(i pi Lambda)>, measured in the Fock frame
    bool near_degenerate = false;
};

/// Expectations with the basis-appropriate operators. Fock states use the
/// diagonal n and m sums; coherent states use the dressed operators and map
/// to the Fock frame (escalating the cutoff as needed) for parity. States in
/// a pair closer than 1e-6 (units of omega) to a computed neighbour are
/// flagged near_degenerate: the solver's in-pair mixture is arbitrary there.
ObservableRecord measure(const EigenSolution& solution, const ModelParams& params,
                         int state_index);

/// <exp(i pi Lambda)> of one eigenvector; coherent vectors are mapped to the
/// Fock frame first, capturing at least 1 - 1e-8 of the norm.
double measure_parity(const EigenSolution& solution, const ModelParams& params, int state_index);

}  // namespace dicke
