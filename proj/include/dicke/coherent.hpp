// coherent.hpp — Hamiltonian assembly in the displaced-oscillator basis and
// the displaced-Fock overlap kernel it is built from.
//
// Basis construction. Rotate the spin frame so the coupling attaches to a
// diagonal spin operator: with (Jx', Jy', Jz') = (Jz, Jy, -Jx) the model reads
//
//   H = omega a^+a + (Delta/2)(J+' + J-') - omega G (a^+ + a) Jz',
//   G = 2 gamma / (omega sqrt(N)).
//
// Completing the square with A = a - G Jz' gives
//
//   H = omega (A^+A - G^2 Jz'^2) + (Delta/2)(J+' + J-').
//
// For each Jz' projection mu the photon sector is spanned by displaced Fock
// states built on the coherent vacuum |alpha = +G mu>; the full tensor basis
// |n; j, mu> is orthonormal (different mu are orthogonal through the spin
// factor, equal mu share one displacement), so the eigenproblem is a standard
// symmetric one. The Delta block between neighbouring mu picks up the overlap
// <n'|D(-G)|n> (mu -> mu+1) or its transpose <n'|D(+G)|n> (mu -> mu-1).
//
// The assembled matrix applies one more diagonal sign gauge S = (-1)^{j+mu}
// (x) 1, flipping the Delta block to -(Delta/2); spectra are untouched and the
// observable operators and coherent_to_fock below carry the same gauge. The
// prefactor is Delta/2, consistent with Jx = (J+ + J-)/2; assembling with
// prefactor Delta instead breaks the gamma -> 0 spectrum {n omega + m Delta}
// and the cross-basis agreement tests.

#pragma once

#include <Eigen/Dense>

#include "dicke/fock.hpp"
#include "dicke/model.hpp"

namespace dicke {

enum class OverlapDirection { RaiseM, LowerM };

// ---------------------------------------------------------------------------
// Displacement matrix elements T(r, c) = <r| exp(beta (a^+ - a)) |c>.
//
// Evaluated per entry through the associated-Laguerre closed form
//   T(r, c) = sqrt(min!/max!) (sgn beta)^{r-c} |beta|^{|r-c|} e^{-beta^2/2}
//             L_min^{(|r-c|)}(beta^2)
// with the prefactor folded into the seed of the upward three-term Laguerre
// recurrence. The wanted solution is the dominant one of that recurrence, so
// the evaluation is forward-stable; verified to <= 1e-13 relative against a
// 120-digit reference for r, c <= 240 and |beta| <= 12.7.

double displacement_entry(int row, int col, double beta);

Eigen::MatrixXd displacement_table(int rows, int cols, double beta);

/// Same table by the two-term ladder recurrence seeded from column 0.
/// Cross-check only: accurate to ~1e-10 for |beta| <= 1.5 and sizes <= 100,
/// but loses accuracy rapidly for larger |beta| * size (see tests).
Eigen::MatrixXd displacement_table_recurrence(int rows, int cols, double beta);

/// Literal truncated-binomial overlap sum, evaluated with log-domain
/// magnitudes and explicit sign tracking. Cross-check only: cancellation
/// limits it to n + n' <= ~60.
double overlap_direct_sum(int nprime, int n, double G, OverlapDirection direction);

/// Overlap between photon states attached to neighbouring spin projections:
/// RaiseM is <n'|D(-G)|n> (bra sector one step above the ket), LowerM is
/// <n'|D(+G)|n>. Closed forms: (0,0) -> e^{-G^2/2}, (1,0) -> -+ G e^{-G^2/2},
/// (1,1) -> (1 - G^2) e^{-G^2/2}.
double overlap(int nprime, int n, double G, OverlapDirection direction);

/// Overlap table for one displacement step, bundled with its sign rules:
/// lower(n', n) = (-1)^{n+n'} raise(n', n) = raise(n, n').
class OverlapKernel {
public:
    OverlapKernel(double G, int cutoff);

    double G() const { return G_; }
    int cutoff() const { return cutoff_; }
    const Eigen::MatrixXd& raise_table() const { return raise_; }

    double raise(int nprime, int n) const { return raise_(nprime, n); }
    double lower(int nprime, int n) const { return raise_(n, nprime); }

private:
    double G_;
    int cutoff_;
    Eigen::MatrixXd raise_;
};

// ---------------------------------------------------------------------------
// Assembly

/// Diagonal omega (n - G^2 mu^2); photon-dense Delta/2 blocks between
/// neighbouring mu. Real-symmetric by construction (mirrored assembly; the
/// builder verifies the kernel's transpose-sign rule).
HamiltonianMatrix build_coherent_hamiltonian(const ModelParams& params, int cutoff,
                                             std::size_t max_dimension = kDefaultMaxDimension);

/// Original-frame photon number a^+a in the displaced basis:
/// a^+a = A^+A + G (A^+ + A) Jz' + G^2 Jz'^2, block-diagonal in mu.
HamiltonianMatrix photon_number_operator_coherent(const ModelParams& params, int cutoff);

/// Original-frame Jz in the displaced basis: -(J+' + J-')/2 dressed with the
/// overlap kernel on the photon sector (equal to the H off-diagonal / Delta).
HamiltonianMatrix jz_operator_coherent(const ModelParams& params, int cutoff);

/// Spin-frame change R(m, mu) = <j, m | mu'>: columns are the Jz' eigenstates
/// on the Jz basis, built by exact ladder recursion (deterministic phases).
Eigen::MatrixXd primed_spin_matrix(int twice_j);

/// Express a coherent-basis vector on the original Fock (x) |j, m> basis with
/// photon cutoff `fock_cutoff`. Throws NormLossError if less than 1 - 1e-8 of
/// the norm is captured. The coherent cutoff is inferred from the vector size.
Eigen::VectorXd coherent_to_fock(const Eigen::VectorXd& vec, const ModelParams& params,
                                 int fock_cutoff);

/// Fock cutoff heuristic that captures a displaced state built on |G mu|
/// amplitudes up to mu = j: classical occupation plus tail plus room for the
/// A-excitations present in the vector.
int suggested_fock_cutoff_for_map(const ModelParams& params, int coherent_cutoff);

}  // namespace dicke
