#include "dicke/model.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>

namespace dicke {

namespace {

std::string format_msg(const char* fmt, ...) {
    char buf[256];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof(buf), fmt, args);
    va_end(args);
    return buf;
}

}  // namespace

ResourceError::ResourceError(std::size_t dimension, std::size_t budget)
    : std::runtime_error(format_msg("matrix dimension %zu exceeds the memory budget %zu",
                                    dimension, budget)),
      dimension_(dimension),
      budget_(budget) {}

ConvergenceError::ConvergenceError(std::string what, std::vector<std::pair<int, double>> path)
    : std::runtime_error(std::move(what)), path_(std::move(path)) {}

NormLossError::NormLossError(double captured_norm, int cutoff_used)
    : std::runtime_error(format_msg(
          "basis change captured norm %.12f < 1 - 1e-8 at cutoff %d; increase the cutoff",
          captured_norm, cutoff_used)),
      captured_norm_(captured_norm),
      cutoff_used_(cutoff_used) {}

const char* to_string(BasisKind kind) {
    return kind == BasisKind::Fock ? "fock" : "coherent";
}

const char* to_string(Parity parity) {
    return parity == Parity::Even ? "even" : "odd";
}

int to_twice_halfint(double value, const char* what) {
    const double doubled = 2.0 * value;
    const double rounded = std::round(doubled);
    if (std::abs(doubled - rounded) > 1e-9 || !std::isfinite(value)) {
        throw std::invalid_argument(format_msg("%s must be a half-integer, got %g", what, value));
    }
    return static_cast<int>(rounded);
}

ModelParams::ModelParams(double omega, double delta, double gamma, double j)
    : omega_(omega), delta_(delta), gamma_(gamma), twice_j_(to_twice_halfint(j, "j")) {
    if (!(omega > 0.0)) throw std::invalid_argument("omega must be > 0");
    if (!(delta >= 0.0)) throw std::invalid_argument("delta must be >= 0");
    if (!(gamma >= 0.0)) throw std::invalid_argument("gamma must be >= 0");
    if (twice_j_ < 1) throw std::invalid_argument("j must be a positive half-integer");
}

double ModelParams::displacement() const {
    return 2.0 * gamma_ / (omega_ * std::sqrt(static_cast<double>(twice_j_)));
}

BasisSpec::BasisSpec(BasisKind kind, int cutoff, double j)
    : kind_(kind), cutoff_(cutoff), twice_j_(to_twice_halfint(j, "j")) {
    if (cutoff < 0) throw std::domain_error("cutoff must be >= 0");
    if (twice_j_ < 1) throw std::invalid_argument("j must be a positive half-integer");
}

bool BasisSpec::contains(const BasisState& s) const {
    if (s.n < 0 || s.n > cutoff_) return false;
    if (s.twice_m < -twice_j_ || s.twice_m > twice_j_) return false;
    // m must differ from -j by an integer
    return (s.twice_m - twice_j_) % 2 == 0;
}

namespace {

double ladder_sqrt(std::int64_t twice_j, std::int64_t twice_m_shifted) {
    // j(j+1) - m(m') with m' = m +- 1, in quarters: tj(tj+2) - tm(tm +- 2).
    const std::int64_t quarters = twice_j * (twice_j + 2) - twice_m_shifted;
    return 0.5 * std::sqrt(static_cast<double>(quarters));
}

void check_projection(int twice_j, int twice_m) {
    if (twice_m < -twice_j || twice_m > twice_j || (twice_m - twice_j) % 2 != 0) {
        throw std::domain_error("spin projection m out of range for this j");
    }
}

}  // namespace

double ladder_coeff_plus2(int twice_j, int twice_m) {
    check_projection(twice_j, twice_m);
    return ladder_sqrt(twice_j, static_cast<std::int64_t>(twice_m) * (twice_m + 2));
}

double ladder_coeff_minus2(int twice_j, int twice_m) {
    check_projection(twice_j, twice_m);
    return ladder_sqrt(twice_j, static_cast<std::int64_t>(twice_m) * (twice_m - 2));
}

double ladder_coeff_plus(double j, double m) {
    return ladder_coeff_plus2(to_twice_halfint(j, "j"), to_twice_halfint(m, "m"));
}

double ladder_coeff_minus(double j, double m) {
    return ladder_coeff_minus2(to_twice_halfint(j, "j"), to_twice_halfint(m, "m"));
}

Parity parity_of2(int n, int twice_m, int twice_j) {
    check_projection(twice_j, twice_m);
    if (n < 0) throw std::domain_error("n must be >= 0");
    const int lambda = (twice_j + twice_m) / 2 + n;
    return lambda % 2 == 0 ? Parity::Even : Parity::Odd;
}

Parity parity_of(const BasisState& state, double j) {
    return parity_of2(state.n, state.twice_m, to_twice_halfint(j, "j"));
}

std::size_t index_of(const BasisState& state, const BasisSpec& spec) {
    if (!spec.contains(state)) throw std::domain_error("basis state outside the basis bounds");
    const int spin_row = (state.twice_m + spec.twice_j()) / 2;  // m + j
    return static_cast<std::size_t>(spin_row) * (spec.cutoff() + 1) + state.n;
}

BasisState state_of(std::size_t index, const BasisSpec& spec) {
    if (index >= spec.dimension()) throw std::domain_error("linear index outside the basis");
    const int per_row = spec.cutoff() + 1;
    const int spin_row = static_cast<int>(index / per_row);
    BasisState s;
    s.n = static_cast<int>(index % per_row);
    s.twice_m = 2 * spin_row - spec.twice_j();
    return s;
}

}  // namespace dicke
