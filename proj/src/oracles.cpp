#include "dicke/oracles.hpp"

#include <bit>
#include <cmath>
#include <vector>

namespace dicke::oracles {

namespace {

Eigen::MatrixXd kron(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B) {
    Eigen::MatrixXd out(A.rows() * B.rows(), A.cols() * B.cols());
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
        for (Eigen::Index k = 0; k < A.cols(); ++k) {
            out.block(i * B.rows(), k * B.cols(), B.rows(), B.cols()) = A(i, k) * B;
        }
    }
    return out;
}

}  // namespace

Eigen::MatrixXd brute_force_hamiltonian(const ModelParams& params, int cutoff) {
    const int per = cutoff + 1;
    const int nm = params.twice_j() + 1;
    if (static_cast<std::size_t>(per) * nm > 2000) {
        throw std::domain_error("brute-force build is restricted to dimensions <= 2000");
    }

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(per, per);
    for (int n = 1; n < per; ++n) a(n - 1, n) = std::sqrt(double(n));
    const Eigen::MatrixXd adag = a.transpose();

    Eigen::MatrixXd jz = Eigen::MatrixXd::Zero(nm, nm);
    Eigen::MatrixXd jp = Eigen::MatrixXd::Zero(nm, nm);
    for (int s = 0; s < nm; ++s) {
        const int tm = -params.twice_j() + 2 * s;
        jz(s, s) = 0.5 * tm;
        if (s + 1 < nm) jp(s + 1, s) = ladder_coeff_plus2(params.twice_j(), tm);
    }
    const Eigen::MatrixXd jm = jp.transpose();

    const Eigen::MatrixXd id_f = Eigen::MatrixXd::Identity(per, per);
    const Eigen::MatrixXd id_s = Eigen::MatrixXd::Identity(nm, nm);

    // basis ordering matches index_of: spin-major, photon-minor
    return params.omega() * kron(id_s, adag * a) + params.delta() * kron(jz, id_f) +
           (params.gamma() / std::sqrt(double(params.atom_count()))) *
               kron(jp + jm, adag + a);
}

int default_series_cutoff(int nprime, int n, double beta) {
    return nprime + n + 40 * static_cast<int>(std::ceil(beta * beta));
}

Eigen::VectorXd displaced_column_series(int n, double beta, int series_cutoff) {
    if (n < 0) throw std::domain_error("indices must be >= 0");
    if (n > series_cutoff) throw std::domain_error("series_cutoff smaller than the ket index");

    const int dim = series_cutoff + 1;
    const auto apply_k = [dim](const std::vector<double>& in, std::vector<double>& out) {
        // (a^+ - a) applied to a Fock-space vector
        for (int r = 0; r < dim; ++r) {
            double acc = 0.0;
            if (r >= 1) acc += std::sqrt(double(r)) * in[r - 1];
            if (r + 1 < dim) acc -= std::sqrt(double(r + 1)) * in[r + 1];
            out[r] = acc;
        }
    };

    std::vector<double> v(dim, 0.0);
    v[n] = 1.0;

    const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(beta) * 2.0 * std::sqrt(double(dim)))));
    const double s = beta / steps;
    std::vector<double> term(dim), next(dim), acc(dim);
    for (int step = 0; step < steps; ++step) {
        acc = v;
        term = v;
        for (int t = 1; t <= 400; ++t) {
            apply_k(term, next);
            double norm2 = 0.0;
            for (int r = 0; r < dim; ++r) {
                term[r] = next[r] * s / t;
                acc[r] += term[r];
                norm2 += term[r] * term[r];
            }
            if (norm2 < 1e-36) break;
        }
        v = acc;
    }

    return Eigen::Map<const Eigen::VectorXd>(v.data(), dim);
}

SeriesOverlap displaced_overlap_series_full(int nprime, int n, double beta, int series_cutoff) {
    if (nprime < 0 || n < 0) throw std::domain_error("indices must be >= 0");
    if (series_cutoff < default_series_cutoff(nprime, n, beta)) {
        throw std::domain_error("series_cutoff too small for the requested overlap");
    }
    const Eigen::VectorXd column = displaced_column_series(n, beta, series_cutoff);
    return {column[nprime], std::abs(1.0 - column.norm())};
}

double displaced_overlap_series(int nprime, int n, double beta) {
    return displaced_overlap_series_full(nprime, n, beta, default_series_cutoff(nprime, n, beta))
        .value;
}

double mean_field_energy(const ModelParams& params, double z, double alpha) {
    const double j = params.j();
    const double sq = std::sqrt(std::max(0.0, 1.0 - z * z));
    return params.omega() * alpha * alpha + params.delta() * j * z +
           (params.gamma() / std::sqrt(2.0 * j)) * 2.0 * alpha * 2.0 * j * sq;
}

MeanFieldSolution mean_field(const ModelParams& params) {
    const double omega = params.omega();
    const double delta = params.delta();
    const double gamma = params.gamma();
    const double critical = 0.5 * std::sqrt(omega * delta);

    MeanFieldSolution sol;
    if (gamma <= critical) {
        sol.z = -1.0;
        sol.alpha = 0.0;
        sol.energy_per_j = -delta;
    } else {
        sol.z = -omega * delta / (4.0 * gamma * gamma);
        sol.alpha = -gamma * std::sqrt(2.0 * params.j()) *
                    std::sqrt(1.0 - sol.z * sol.z) / omega;
        sol.energy_per_j = -2.0 * gamma * gamma / omega -
                           delta * delta * omega / (8.0 * gamma * gamma);
    }
    sol.photon_per_j = sol.alpha * sol.alpha / params.j();
    return sol;
}

namespace {

template <typename F>
double bracket_minimize(F f, double lo, double hi, int iterations = 200) {
    for (int it = 0; it < iterations; ++it) {
        const double a = lo + (hi - lo) / 3.0;
        const double b = hi - (hi - lo) / 3.0;
        if (f(a) < f(b)) {
            hi = b;
        } else {
            lo = a;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

MeanFieldSolution mean_field_numerical(const ModelParams& params) {
    const double alpha_bound =
        params.gamma() * std::sqrt(2.0 * params.j()) / params.omega() + 1.0;
    const auto best_alpha = [&](double z) {
        return bracket_minimize(
            [&](double a) { return mean_field_energy(params, z, a); }, -alpha_bound, alpha_bound);
    };
    const double z =
        bracket_minimize([&](double zz) { return mean_field_energy(params, zz, best_alpha(zz)); },
                         -1.0, 1.0);
    const double alpha = best_alpha(z);

    MeanFieldSolution sol;
    sol.z = z;
    sol.alpha = alpha;
    sol.energy_per_j = mean_field_energy(params, z, alpha) / params.j();
    sol.photon_per_j = alpha * alpha / params.j();
    return sol;
}

Eigen::MatrixXd collective_raising_from_qubits(int twice_j) {
    if (twice_j < 1 || twice_j > 14) throw std::domain_error("2j must be in [1, 14]");
    const int n_qubits = twice_j;
    const std::size_t dim = std::size_t{1} << n_qubits;

    // symmetrized k-excitation states
    std::vector<Eigen::VectorXd> dicke(n_qubits + 1, Eigen::VectorXd::Zero(dim));
    for (std::size_t x = 0; x < dim; ++x) {
        dicke[std::popcount(x)][static_cast<Eigen::Index>(x)] = 1.0;
    }
    for (auto& d : dicke) d.normalize();

    const auto raise = [&](const Eigen::VectorXd& in) {
        Eigen::VectorXd out = Eigen::VectorXd::Zero(dim);
        for (std::size_t x = 0; x < dim; ++x) {
            const double c = in[static_cast<Eigen::Index>(x)];
            if (c == 0.0) continue;
            for (int q = 0; q < n_qubits; ++q) {
                const std::size_t bit = std::size_t{1} << q;
                if (!(x & bit)) out[static_cast<Eigen::Index>(x | bit)] += c;
            }
        }
        return out;
    };

    Eigen::MatrixXd jp = Eigen::MatrixXd::Zero(n_qubits + 1, n_qubits + 1);
    for (int k = 0; k <= n_qubits; ++k) {
        const Eigen::VectorXd raised = raise(dicke[k]);
        for (int kp = 0; kp <= n_qubits; ++kp) jp(kp, k) = dicke[kp].dot(raised);
    }
    return jp;
}

}  // namespace dicke::oracles
