// oracles.hpp — independent, slow, obviously-correct references used by the
// tests, the acceptance suite, and the CLI `check` command.

#pragma once

#include <Eigen/Dense>

#include "dicke/model.hpp"

namespace dicke::oracles {

/// The model built literally from operator matrices: kron(a^+a, 1), kron(1, Jz)
/// and kron(a^+ + a, J+ + J-), no matrix-element formulas. Small dimensions
/// only (<= 2000).
Eigen::MatrixXd brute_force_hamiltonian(const ModelParams& params, int cutoff);

/// <n'| exp(beta (a^+ - a)) |n> by applying the exponential series to |n> in
/// a Fock space truncated at series_cutoff (the series is applied in steps of
/// at most unit radius so partial sums stay small). norm_defect = |1 - ||v||||
/// measures leakage past the truncation; it should stay below ~1e-14.
struct SeriesOverlap {
    double value = 0.0;
    double norm_defect = 0.0;
};

SeriesOverlap displaced_overlap_series_full(int nprime, int n, double beta, int series_cutoff);

/// Value only, with the default truncation n + n' + 40 * ceil(beta^2).
double displaced_overlap_series(int nprime, int n, double beta);

/// The whole displaced ket exp(beta (a^+ - a))|n> on the truncated Fock
/// space; component n' is <n'|D(beta)|n>. One series per ket makes grid
/// comparisons cheap.
Eigen::VectorXd displaced_column_series(int n, double beta, int series_cutoff);

int default_series_cutoff(int nprime, int n, double beta);

/// Product coherent-state variational minimum; exact as j -> infinity.
struct MeanFieldSolution {
    double z = 0.0;           // <Jz>/j
    double alpha = 0.0;       // field amplitude
    double energy_per_j = 0.0;
    double photon_per_j = 0.0;  // alpha^2 / j
};

/// Trial energy E(z, alpha) over spin inversion z in [-1, 1] and real field
/// amplitude alpha.
double mean_field_energy(const ModelParams& params, double z, double alpha);

/// Closed-form minimizer: normal phase (gamma <= sqrt(omega delta)/2) has
/// z = -1, alpha = 0, E/j = -delta; beyond it z = -omega delta/(4 gamma^2),
/// E/j = -2 gamma^2/omega - delta^2 omega/(8 gamma^2).
MeanFieldSolution mean_field(const ModelParams& params);

/// Nested bracketing minimization of mean_field_energy; the closed forms must
/// agree with this to 1e-10.
MeanFieldSolution mean_field_numerical(const ModelParams& params);

/// Collective raising operator on the symmetric sector of N = 2j qubits,
/// built from single-qubit flips and symmetrized number states — first
/// principles for the ladder coefficients. Row/column k corresponds to
/// m = k - j, k = 0..2j. Requires 2j <= 14.
Eigen::MatrixXd collective_raising_from_qubits(int twice_j);

}  // namespace dicke::oracles
