// model.hpp — physical parameters, pseudospin ladder algebra, basis indexing,
// and the C2 (parity) structure shared by both bases.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dicke {

// ---------------------------------------------------------------------------
// Errors

/// Requested matrix dimension exceeds the configured memory budget.
class ResourceError : public std::runtime_error {
public:
    ResourceError(std::size_t dimension, std::size_t budget);
    std::size_t dimension() const { return dimension_; }
    std::size_t budget() const { return budget_; }

private:
    std::size_t dimension_;
    std::size_t budget_;
};

/// Cutoff escalation hit the budget before the tracked energies settled.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(std::string what, std::vector<std::pair<int, double>> path);
    const std::vector<std::pair<int, double>>& escalation_path() const { return path_; }

private:
    std::vector<std::pair<int, double>> path_;
};

/// A basis change lost more norm than allowed; carries what was captured.
class NormLossError : public std::runtime_error {
public:
    NormLossError(double captured_norm, int cutoff_used);
    double captured_norm() const { return captured_norm_; }
    int cutoff_used() const { return cutoff_used_; }

private:
    double captured_norm_;
    int cutoff_used_;
};

/// Dense eigensolver did not converge; message carries a condition summary.
class SolverError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Core types

enum class BasisKind { Fock, Coherent };

enum class Parity { Even, Odd };

const char* to_string(BasisKind kind);
const char* to_string(Parity parity);

/// Physical couplings of the single-mode model
///   H = omega a^+a + delta J_z + (gamma/sqrt(N)) (a^+ + a)(J_+ + J_-),
/// with N = 2j atoms. Spin length j is stored as the exact integer 2j.
/// Immutable after construction; G is derived on demand, never cached.
class ModelParams {
public:
    ModelParams(double omega, double delta, double gamma, double j);

    double omega() const { return omega_; }
    double delta() const { return delta_; }
    double gamma() const { return gamma_; }
    double j() const { return 0.5 * twice_j_; }
    int twice_j() const { return twice_j_; }
    int atom_count() const { return twice_j_; }  // N = 2j

    /// Dimensionless displacement parameter G = 2 gamma / (omega sqrt(N)).
    double displacement() const;

    ModelParams with_gamma(double gamma) const { return {omega_, delta_, gamma, j()}; }

private:
    double omega_;
    double delta_;
    double gamma_;
    int twice_j_;
};

/// One basis ket: oscillator excitation n (a^+a in the Fock basis, A^+A in
/// the coherent basis) and spin projection m stored as the exact integer 2m.
struct BasisState {
    int n = 0;
    int twice_m = 0;

    double m() const { return 0.5 * twice_m; }

    friend bool operator==(const BasisState&, const BasisState&) = default;
};

/// Which basis and how it is truncated. The linear index of (n, m) is
/// (m + j)(cutoff + 1) + n — a fixed external contract.
class BasisSpec {
public:
    BasisSpec(BasisKind kind, int cutoff, double j);

    BasisKind kind() const { return kind_; }
    int cutoff() const { return cutoff_; }
    double j() const { return 0.5 * twice_j_; }
    int twice_j() const { return twice_j_; }
    int spin_count() const { return twice_j_ + 1; }  // 2j + 1
    std::size_t dimension() const { return static_cast<std::size_t>(cutoff_ + 1) * spin_count(); }

    bool contains(const BasisState& s) const;

    friend bool operator==(const BasisSpec&, const BasisSpec&) = default;

private:
    BasisKind kind_;
    int cutoff_;
    int twice_j_;
};

// ---------------------------------------------------------------------------
// Ladder algebra. Computed in exact integer arithmetic on 2j, 2m:
//   j(j+1) - m(m+-1) = (2j(2j+2) - 2m(2m+-2)) / 4.

/// sqrt(j(j+1) - m(m+1)); exactly 0 at the top of the ladder (m = j).
double ladder_coeff_plus(double j, double m);
double ladder_coeff_plus2(int twice_j, int twice_m);

/// sqrt(j(j+1) - m(m-1)); exactly 0 at the bottom (m = -j).
double ladder_coeff_minus(double j, double m);
double ladder_coeff_minus2(int twice_j, int twice_m);

// ---------------------------------------------------------------------------
// Parity. lambda = j + m + n is a non-negative integer for every valid state;
// the conserved quantity is its parity.

Parity parity_of(const BasisState& state, double j);
Parity parity_of2(int n, int twice_m, int twice_j);

/// +1 for Even, -1 for Odd.
inline int parity_sign(Parity p) { return p == Parity::Even ? +1 : -1; }

// ---------------------------------------------------------------------------
// Indexing (bijection between states and [0, dimension), fixed contract).

std::size_t index_of(const BasisState& state, const BasisSpec& spec);
BasisState state_of(std::size_t index, const BasisSpec& spec);

/// Validate that a double is a non-negative half-integer and return 2x as int.
int to_twice_halfint(double value, const char* what);

}  // namespace dicke
