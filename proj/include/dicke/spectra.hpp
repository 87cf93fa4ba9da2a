// spectra.hpp — eigensolving contract and the cutoff-convergence escalation
// loop behind every converged energy this project reports.

#pragma once

#include <Eigen/Dense>
#include <optional>

#include "dicke/fock.hpp"
#include "dicke/model.hpp"

namespace dicke {

/// Lowest-k eigenpairs of one assembled Hamiltonian. Energies ascend, vectors
/// are orthonormal columns with deterministic sign (largest-magnitude
/// component positive; first such index on ties).
struct EigenSolution {
    BasisSpec spec;
    std::optional<Parity> parity_block;
    std::vector<BasisState> states;  // row -> basis ket, as in HamiltonianMatrix
    Eigen::VectorXd energies;
    Eigen::MatrixXd vectors;  // dimension x k
    int k = 0;
};

/// Full symmetric solve, lowest k extracted; residuals ||Hv - Ev|| are
/// verified against 1e-8 * max(1, |E|).
EigenSolution solve_lowest(const HamiltonianMatrix& hamiltonian, int k);

/// Escalation policy for converge(). `start` overrides the per-basis default:
/// Fock starts at max(floor, ceil(G^2 j^2) + 2) (the displaced-vacuum photon
/// occupation sets the truncation scale), the coherent basis at the floor.
struct CutoffPolicy {
    std::optional<int> start;
    int floor = 2;
    int coarse_step = 5;
    std::size_t max_dimension = kDefaultMaxDimension;
};

int default_start_cutoff(const ModelParams& params, BasisKind basis, const CutoffPolicy& policy);

/// One converged (j, gamma) record. `minimal_cutoff` is the smallest cutoff
/// whose +1 increase moves no tracked energy by more than the tolerance;
/// `energies` come from the largest cutoff actually solved. Tolerance and
/// serialized energies are in units of omega.
struct ConvergenceReport {
    ModelParams params;
    BasisKind basis;
    int k = 0;
    double tolerance = 0.0;
    int minimal_cutoff = 0;
    Eigen::VectorXd energies;
    std::vector<std::pair<int, double>> escalation_path;  // (cutoff, ground energy)
    double wall_time_s = 0.0;
};

struct ConvergenceResult {
    ConvergenceReport report;
    EigenSolution solution;  // at the largest solved cutoff
};

/// Coarse +coarse_step scan until all k tracked energies settle within the
/// tolerance, then unit-step refinement downward. Enlarging the basis can
/// only lower each tracked energy, so a settled coarse interval bounds every
/// unit step inside it. Throws ConvergenceError (carrying the escalation
/// path) if the dimension budget is hit first.
ConvergenceResult converge(const ModelParams& params, BasisKind basis, int k, double tolerance,
                           const CutoffPolicy& policy = {});

struct CrossBasisReport {
    ConvergenceReport fock;
    ConvergenceReport coherent;
    Eigen::VectorXd abs_differences;  // per tracked state
    double threshold = 0.0;           // 10 * tolerance
    bool passed = false;
};

/// Converge both bases independently and compare the tracked energies;
/// passes when every |E_fock - E_coherent| <= 10 * tolerance.
CrossBasisReport crossbasis_check(const ModelParams& params, int k, double tolerance,
                                  const CutoffPolicy& policy = {});

}  // namespace dicke
