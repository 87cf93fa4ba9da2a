#include "dicke/coherent.hpp"

#include <cmath>
#include <vector>

namespace dicke {

double displacement_entry(int row, int col, double beta) {
    if (row < 0 || col < 0) throw std::domain_error("displacement indices must be >= 0");
    if (beta == 0.0) return row == col ? 1.0 : 0.0;

    const int k = std::min(row, col);
    const int alpha = std::abs(row - col);
    const double x = beta * beta;

    // (sgn beta)^{row-col}: the ket-side power carries beta, the bra side -beta
    double sign = 1.0;
    if (alpha % 2 != 0) sign = ((row > col) == (beta > 0.0)) ? 1.0 : -1.0;

    const double log_pref = 0.5 * (std::lgamma(k + 1.0) - std::lgamma(k + alpha + 1.0)) +
                            alpha * std::log(std::abs(beta)) - 0.5 * x;
    double y_prev = std::exp(log_pref);  // L_0 = 1, prefactor folded in
    if (k == 0) return sign * y_prev;
    double y = (1.0 + alpha - x) * y_prev;  // L_1
    for (int i = 2; i <= k; ++i) {
        const double y_next = ((2.0 * i - 1.0 + alpha - x) * y - (i - 1.0 + alpha) * y_prev) / i;
        y_prev = y;
        y = y_next;
    }
    return sign * y;
}

Eigen::MatrixXd displacement_table(int rows, int cols, double beta) {
    Eigen::MatrixXd T(rows, cols);
    for (int c = 0; c < cols; ++c) {
        for (int r = 0; r < rows; ++r) T(r, c) = displacement_entry(r, c, beta);
    }
    return T;
}

Eigen::MatrixXd displacement_table_recurrence(int rows, int cols, double beta) {
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(rows, cols);
    T(0, 0) = std::exp(-0.5 * beta * beta);
    for (int r = 1; r < rows; ++r) T(r, 0) = T(r - 1, 0) * beta / std::sqrt(double(r));
    for (int c = 1; c < cols; ++c) {
        for (int r = 0; r < rows; ++r) {
            double acc = -beta * T(r, c - 1);
            if (r >= 1) acc += std::sqrt(double(r)) * T(r - 1, c - 1);
            T(r, c) = acc / std::sqrt(double(c));
        }
    }
    return T;
}

double overlap_direct_sum(int nprime, int n, double G, OverlapDirection direction) {
    if (nprime < 0 || n < 0) throw std::domain_error("overlap indices must be >= 0");
    if (G == 0.0) return nprime == n ? 1.0 : 0.0;

    const int kmax = std::min(nprime, n);
    const double logG = std::log(G);
    std::vector<double> logmag(kmax + 1);
    std::vector<double> sgn(kmax + 1);
    double peak = -1e300;
    for (int k = 0; k <= kmax; ++k) {
        logmag[k] = 0.5 * (std::lgamma(nprime + 1.0) + std::lgamma(n + 1.0)) -
                    std::lgamma(nprime - k + 1.0) - std::lgamma(n - k + 1.0) -
                    std::lgamma(k + 1.0) + (n + nprime - 2 * k) * logG;
        const int p = direction == OverlapDirection::RaiseM ? nprime - k : n - k;
        sgn[k] = p % 2 == 0 ? 1.0 : -1.0;
        peak = std::max(peak, logmag[k]);
    }
    double acc = 0.0;
    for (int k = 0; k <= kmax; ++k) acc += sgn[k] * std::exp(logmag[k] - peak);
    return acc * std::exp(peak - 0.5 * G * G);
}

double overlap(int nprime, int n, double G, OverlapDirection direction) {
    if (G < 0.0) throw std::domain_error("G must be >= 0");
    const double beta = direction == OverlapDirection::RaiseM ? -G : G;
    return displacement_entry(nprime, n, beta);
}

OverlapKernel::OverlapKernel(double G, int cutoff)
    : G_(G), cutoff_(cutoff), raise_(displacement_table(cutoff + 1, cutoff + 1, -G)) {
    if (G < 0.0) throw std::domain_error("G must be >= 0");
    if (cutoff < 0) throw std::domain_error("cutoff must be >= 0");
}

namespace {

// |Delta-block| <= c * max|overlap| <= c; the transpose-sign rule must hold to
// rounding or the mirrored assembly would not represent a symmetric operator.
void verify_kernel_symmetry(const OverlapKernel& kernel) {
    const Eigen::MatrixXd& O = kernel.raise_table();
    for (int a = 0; a <= kernel.cutoff(); ++a) {
        for (int b = a; b <= kernel.cutoff(); ++b) {
            const double sign = (a + b) % 2 == 0 ? 1.0 : -1.0;
            if (std::abs(O(a, b) - sign * O(b, a)) > 1e-12) {
                throw SolverError("overlap kernel violates the transpose-sign rule");
            }
        }
    }
}

}  // namespace

HamiltonianMatrix build_coherent_hamiltonian(const ModelParams& params, int cutoff,
                                             std::size_t max_dimension) {
    BasisSpec spec(BasisKind::Coherent, cutoff, params.j());
    if (spec.dimension() > max_dimension) throw ResourceError(spec.dimension(), max_dimension);

    const double G = params.displacement();
    OverlapKernel kernel(G, cutoff);
    verify_kernel_symmetry(kernel);

    const int per = cutoff + 1;
    const int nm = spec.spin_count();
    const int tj = params.twice_j();
    const Eigen::Index dim = static_cast<Eigen::Index>(spec.dimension());

    std::vector<BasisState> states;
    states.reserve(spec.dimension());
    for (std::size_t i = 0; i < spec.dimension(); ++i) states.push_back(state_of(i, spec));

    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(dim, dim);
    for (int s = 0; s < nm; ++s) {
        const int tm = -tj + 2 * s;
        const double mu = 0.5 * tm;
        for (int n = 0; n < per; ++n) {
            const Eigen::Index i = static_cast<Eigen::Index>(s) * per + n;
            H(i, i) = params.omega() * (n - G * G * mu * mu);
        }
        if (s + 1 >= nm) continue;
        const double coeff = -0.5 * params.delta() * ladder_coeff_plus2(tj, tm);
        for (int np = 0; np < per; ++np) {
            const Eigen::Index r = static_cast<Eigen::Index>(s + 1) * per + np;
            for (int n = 0; n < per; ++n) {
                const Eigen::Index c = static_cast<Eigen::Index>(s) * per + n;
                const double v = coeff * kernel.raise(np, n);
                H(r, c) = v;
                H(c, r) = v;
            }
        }
    }
    return {spec, std::nullopt, std::move(states), std::move(H)};
}

HamiltonianMatrix photon_number_operator_coherent(const ModelParams& params, int cutoff) {
    BasisSpec spec(BasisKind::Coherent, cutoff, params.j());
    const double G = params.displacement();
    const int per = cutoff + 1;
    const int nm = spec.spin_count();
    const int tj = params.twice_j();

    std::vector<BasisState> states;
    states.reserve(spec.dimension());
    for (std::size_t i = 0; i < spec.dimension(); ++i) states.push_back(state_of(i, spec));

    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(spec.dimension(), spec.dimension());
    for (int s = 0; s < nm; ++s) {
        const double mu = 0.5 * (-tj + 2 * s);
        for (int n = 0; n < per; ++n) {
            const Eigen::Index i = static_cast<Eigen::Index>(s) * per + n;
            M(i, i) = n + G * G * mu * mu;
            if (n + 1 < per) {
                const double v = G * mu * std::sqrt(n + 1.0);
                M(i + 1, i) = v;
                M(i, i + 1) = v;
            }
        }
    }
    return {spec, std::nullopt, std::move(states), std::move(M)};
}

HamiltonianMatrix jz_operator_coherent(const ModelParams& params, int cutoff) {
    BasisSpec spec(BasisKind::Coherent, cutoff, params.j());
    const double G = params.displacement();
    OverlapKernel kernel(G, cutoff);
    const int per = cutoff + 1;
    const int nm = spec.spin_count();
    const int tj = params.twice_j();

    std::vector<BasisState> states;
    states.reserve(spec.dimension());
    for (std::size_t i = 0; i < spec.dimension(); ++i) states.push_back(state_of(i, spec));

    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(spec.dimension(), spec.dimension());
    for (int s = 0; s + 1 < nm; ++s) {
        const int tm = -tj + 2 * s;
        const double coeff = -0.5 * ladder_coeff_plus2(tj, tm);
        for (int np = 0; np < per; ++np) {
            const Eigen::Index r = static_cast<Eigen::Index>(s + 1) * per + np;
            for (int n = 0; n < per; ++n) {
                const Eigen::Index c = static_cast<Eigen::Index>(s) * per + n;
                const double v = coeff * kernel.raise(np, n);
                M(r, c) = v;
                M(c, r) = v;
            }
        }
    }
    return {spec, std::nullopt, std::move(states), std::move(M)};
}

Eigen::MatrixXd primed_spin_matrix(int twice_j) {
    const int nm = twice_j + 1;
    Eigen::MatrixXd R(nm, nm);

    // top state chi: J+' chi = 0 with J+' = Jz + (J+ - J-)/2, solved upward
    Eigen::VectorXd chi = Eigen::VectorXd::Zero(nm);
    chi[0] = 1.0;
    for (int s = 0; s + 1 < nm; ++s) {
        const int tm = -twice_j + 2 * s;
        const double prev = s >= 1 ? chi[s - 1] : 0.0;
        const double cp_prev = s >= 1 ? ladder_coeff_plus2(twice_j, tm - 2) : 0.0;
        chi[s + 1] = (tm * chi[s] + cp_prev * prev) / ladder_coeff_plus2(twice_j, tm);
    }
    chi.normalize();
    R.col(nm - 1) = chi;

    // descend with J-' = Jz - (J+ - J-)/2
    for (int s = nm - 1; s >= 1; --s) {
        const int tmu = -twice_j + 2 * s;
        const Eigen::VectorXd& v = R.col(s);
        Eigen::VectorXd w(nm);
        for (int row = 0; row < nm; ++row) {
            const int tm = -twice_j + 2 * row;
            double acc = 0.5 * tm * v[row];
            if (row >= 1) acc -= 0.5 * ladder_coeff_plus2(twice_j, tm - 2) * v[row - 1];
            if (row + 1 < nm) acc += 0.5 * ladder_coeff_minus2(twice_j, tm + 2) * v[row + 1];
            w[row] = acc;
        }
        w /= ladder_coeff_minus2(twice_j, tmu);
        w.normalize();
        R.col(s - 1) = w;
    }
    return R;
}

Eigen::VectorXd coherent_to_fock(const Eigen::VectorXd& vec, const ModelParams& params,
                                 int fock_cutoff) {
    const int tj = params.twice_j();
    const int nm = tj + 1;
    if (vec.size() % nm != 0 || vec.size() == 0) {
        throw std::invalid_argument("vector size is not a multiple of 2j + 1");
    }
    const int coh_per = static_cast<int>(vec.size()) / nm;
    const int fock_per = fock_cutoff + 1;
    const double G = params.displacement();

    const Eigen::MatrixXd R = primed_spin_matrix(tj);
    Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(fock_per) * nm);
    for (int s = 0; s < nm; ++s) {
        const int tm = -tj + 2 * s;
        const double mu = 0.5 * tm;
        const double sigma = ((tj + tm) / 2) % 2 == 0 ? 1.0 : -1.0;
        const Eigen::MatrixXd T = displacement_table(fock_per, coh_per, G * mu);
        const Eigen::VectorXd photon = T * vec.segment(static_cast<Eigen::Index>(s) * coh_per,
                                                       coh_per);
        for (int row = 0; row < nm; ++row) {
            out.segment(static_cast<Eigen::Index>(row) * fock_per, fock_per) +=
                sigma * R(row, s) * photon;
        }
    }

    const double captured = out.norm() / vec.norm();
    if (captured < 1.0 - 1e-8) throw NormLossError(captured, fock_cutoff);
    return out;
}

int suggested_fock_cutoff_for_map(const ModelParams& params, int coherent_cutoff) {
    const double G = params.displacement();
    const double occupancy = G * G * params.j() * params.j();
    return static_cast<int>(std::ceil(occupancy + 8.0 * std::sqrt(occupancy + 1.0))) +
           2 * coherent_cutoff + 16;
}

}  // namespace dicke
