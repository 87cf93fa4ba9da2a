// dicke — command-line front end: single solves, gamma sweeps, the basis
// comparison table, benchmarks, and the oracle self-checks.
//
// Exit codes: 0 ok, 1 check/bench assertion or internal failure, 2 usage,
// 3 non-convergence, 4 partial sweep failure.

#include <CLI11.hpp>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "dicke/coherent.hpp"
#include "dicke/io.hpp"
#include "dicke/observables.hpp"
#include "dicke/oracles.hpp"
#include "dicke/spectra.hpp"

namespace {

using namespace dicke;

double now_seconds(std::chrono::steady_clock::time_point from) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - from).count();
}

std::vector<double> parse_list(const std::string& text, const char* what) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            values.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw CLI::ValidationError(std::string(what) + ": cannot parse '" + item + "'");
        }
    }
    if (values.empty()) throw CLI::ValidationError(std::string(what) + ": empty list");
    return values;
}

std::vector<BasisKind> parse_basis(const std::string& text) {
    if (text == "fock") return {BasisKind::Fock};
    if (text == "coherent") return {BasisKind::Coherent};
    if (text == "both") return {BasisKind::Fock, BasisKind::Coherent};
    throw CLI::ValidationError("basis must be fock, coherent, or both");
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
}

std::string format_energy(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.5f", value);
    return buf;
}

ModelParams make_params(double omega, double delta, double gamma, double j) {
    try {
        return {omega, delta, gamma, j};
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError(e.what());
    }
}

// ---------------------------------------------------------------------------
// solve

struct SolveOpts {
    double j = 1.0;
    double gamma = 0.0;
    double omega = 1.0;
    double delta = 1.0;
    std::string basis = "coherent";
    std::string cutoff = "auto";
    int states = 2;
    double tol = 1e-6;
    std::size_t max_dim = kDefaultMaxDimension;
    std::string dump_matrix;
    std::string json_path;
};

int run_solve(const SolveOpts& opt) {
    const ModelParams params = make_params(opt.omega, opt.delta, opt.gamma, opt.j);
    const std::vector<BasisKind> bases = parse_basis(opt.basis);
    if (!opt.dump_matrix.empty() && bases.size() != 1) {
        throw CLI::ValidationError("--dump-matrix needs a single basis");
    }
    const bool automatic = opt.cutoff == "auto";
    int fixed_cutoff = 0;
    if (!automatic) {
        try {
            std::size_t pos = 0;
            fixed_cutoff = std::stoi(opt.cutoff, &pos);
            if (pos != opt.cutoff.size() || fixed_cutoff < 0) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw CLI::ValidationError("--cutoff must be 'auto' or a non-negative integer");
        }
    }

    std::printf("j=%g gamma=%g omega=%g delta=%g G=%.6g\n", params.j(), params.gamma(),
                params.omega(), params.delta(), params.displacement());

    nlohmann::json reports = nlohmann::json::array();
    std::vector<Eigen::VectorXd> energies_by_basis;

    for (BasisKind basis : bases) {
        ConvergenceResult result = [&]() -> ConvergenceResult {
            if (automatic) {
                CutoffPolicy policy;
                policy.max_dimension = opt.max_dim;
                return converge(params, basis, opt.states, opt.tol, policy);
            }
            const auto t0 = std::chrono::steady_clock::now();
            const HamiltonianMatrix H =
                basis == BasisKind::Fock
                    ? build_fock_hamiltonian(params, fixed_cutoff, std::nullopt, opt.max_dim)
                    : build_coherent_hamiltonian(params, fixed_cutoff, opt.max_dim);
            EigenSolution sol = solve_lowest(H, opt.states);
            ConvergenceReport rep{params,       basis,
                                  opt.states,   0.0,
                                  fixed_cutoff, sol.energies,
                                  {{fixed_cutoff, sol.energies[0]}},
                                  now_seconds(t0)};
            return {std::move(rep), std::move(sol)};
        }();
        const ConvergenceReport& report = result.report;
        const EigenSolution& solution = result.solution;
        if (automatic) {
            std::printf("basis=%s cutoff=%d (auto, solved up to %d) dim=%zu wall_s=%.3f\n",
                        to_string(basis), report.minimal_cutoff, solution.spec.cutoff(),
                        BasisSpec(basis, report.minimal_cutoff, params.j()).dimension(),
                        report.wall_time_s);
        } else {
            std::printf("basis=%s cutoff=%d (fixed) dim=%zu wall_s=%.3f\n", to_string(basis),
                        fixed_cutoff, solution.spec.dimension(), report.wall_time_s);
        }

        std::printf("  %5s %12s %10s %10s %10s %10s  %s\n", "state", "energy", "gap",
                    "n_photon", "jz", "parity", "flags");
        for (int s = 0; s < opt.states; ++s) {
            const ObservableRecord rec = measure(solution, params, s);
            std::printf("  %5d %12s %10.5f %10.5f %10.5f %+10.6f  %s\n", s,
                        format_energy(rec.energy / params.omega()).c_str(),
                        rec.gap / params.omega(), rec.photon_number, rec.jz, rec.parity,
                        rec.near_degenerate ? "degenerate_pair" : "");
        }
        energies_by_basis.push_back(report.energies);
        reports.push_back(io::report_to_json(report));

        if (!opt.dump_matrix.empty()) {
            const int cutoff = solution.spec.cutoff();
            const HamiltonianMatrix H =
                basis == BasisKind::Fock
                    ? build_fock_hamiltonian(params, cutoff, std::nullopt, opt.max_dim)
                    : build_coherent_hamiltonian(params, cutoff, opt.max_dim);
            write_file(opt.dump_matrix, io::matrix_to_text(H, params));
            std::printf("matrix written to %s\n", opt.dump_matrix.c_str());
        }
    }

    if (energies_by_basis.size() == 2) {
        const double diff =
            (energies_by_basis[0] - energies_by_basis[1]).cwiseAbs().maxCoeff() / params.omega();
        std::printf("cross-basis max|dE| = %.3e\n", diff);
    }
    if (!opt.json_path.empty()) write_file(opt.json_path, reports.dump(2) + "\n");
    return 0;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepOpts {
    std::string j_list = "1,2,5,10,20";
    double gamma_min = 0.0;
    double gamma_max = 2.0;
    int gamma_points = 81;
    double omega = 1.0;
    double delta = 1.0;
    std::string basis = "coherent";
    int states = 2;
    double tol = 1e-6;
    std::size_t max_dim = kDefaultMaxDimension;
    std::string out = "dicke_sweep.csv";
    std::string format = "csv";
    int threads = 0;
};

int run_sweep(const SweepOpts& opt) {
    const std::vector<double> js = parse_list(opt.j_list, "--j");
    const std::vector<BasisKind> bases = parse_basis(opt.basis);
    if (opt.gamma_points < 2) throw CLI::ValidationError("--gamma-points must be >= 2");
    if (!(opt.gamma_max > opt.gamma_min)) {
        throw CLI::ValidationError("gamma grid must be strictly increasing");
    }
    if (opt.format != "csv" && opt.format != "json") {
        throw CLI::ValidationError("--format must be csv or json");
    }
    if (!(opt.gamma_min >= 0.0)) throw CLI::ValidationError("gamma must be >= 0");
    for (double j : js) (void)make_params(opt.omega, opt.delta, 0.0, j);  // validate early

    struct Task {
        double j;
        double gamma;
    };
    std::vector<Task> tasks;
    for (double j : js) {
        for (int i = 0; i < opt.gamma_points; ++i) {
            const double gamma = opt.gamma_min + (opt.gamma_max - opt.gamma_min) * i /
                                                     (opt.gamma_points - 1);
            tasks.push_back({j, gamma});
        }
    }

    struct Result {
        std::vector<ObservableRecord> records;
        std::string error;
    };
    std::vector<Result> results(tasks.size());
    std::atomic<std::size_t> cursor{0};
    std::atomic<int> coherent_cutoff_peak{0};

    const auto worker = [&] {
        for (;;) {
            const std::size_t t = cursor.fetch_add(1);
            if (t >= tasks.size()) return;
            const Task& task = tasks[t];
            try {
                ModelParams params(opt.omega, opt.delta, task.gamma, task.j);
                for (BasisKind basis : bases) {
                    CutoffPolicy policy;
                    policy.max_dimension = opt.max_dim;
                    ConvergenceResult r = converge(params, basis, opt.states, opt.tol, policy);
                    if (basis == BasisKind::Coherent) {
                        int seen = coherent_cutoff_peak.load();
                        while (seen < r.report.minimal_cutoff &&
                               !coherent_cutoff_peak.compare_exchange_weak(
                                   seen, r.report.minimal_cutoff)) {
                        }
                    }
                    for (int s = 0; s < opt.states; ++s) {
                        results[t].records.push_back(measure(r.solution, params, s));
                    }
                }
            } catch (const std::exception& err) {
                results[t].error = err.what();
            }
        }
    };

    const int nthreads = opt.threads > 0
                             ? opt.threads
                             : std::max(1u, std::thread::hardware_concurrency());
    {
        std::vector<std::thread> pool;
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // rows ordered by (j, gamma, state); basis alternates inside a state
    int failures = 0;
    std::ostringstream body;
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        if (!results[t].error.empty()) {
            ++failures;
            if (opt.format == "csv") {
                body << "# error j=" << io::format_data(tasks[t].j)
                     << " gamma=" << io::format_data(tasks[t].gamma) << ": " << results[t].error
                     << '\n';
            } else {
                rows.push_back({{"j", tasks[t].j},
                                {"gamma", tasks[t].gamma},
                                {"error", results[t].error}});
            }
            continue;
        }
        const auto& records = results[t].records;
        for (int s = 0; s < opt.states; ++s) {
            for (std::size_t b = 0; b < bases.size(); ++b) {
                const ObservableRecord& rec = records[b * opt.states + s];
                if (opt.format == "csv") {
                    body << io::csv_row(rec);
                } else {
                    rows.push_back(io::record_to_json(rec));
                }
            }
        }
    }

    if (opt.format == "csv") {
        write_file(opt.out, io::csv_preamble() + io::csv_header() + body.str());
    } else {
        const nlohmann::json doc{{"schema", io::kSchemaVersion}, {"rows", rows}};
        write_file(opt.out, doc.dump(2) + "\n");
    }

    if (coherent_cutoff_peak.load() > 40) {
        std::fprintf(stderr,
                     "warning: a coherent-basis point needed cutoff %d (> 40); check tolerances\n",
                     coherent_cutoff_peak.load());
    }
    std::printf("wrote %zu points (%d failed) to %s\n", tasks.size(), failures,
                opt.out.c_str());
    return failures == 0 ? 0 : 4;
}

// ---------------------------------------------------------------------------
// table1

struct TableOpts {
    std::string j_list = "1,2,5,10,20";
    std::string gammas = "0,0.1,0.2,0.5,1,2";
    double omega = 1.0;
    double delta = 1.0;
    double tol = 1e-7;
    std::size_t fock_max_dim = 2000;
    std::size_t max_dim = kDefaultMaxDimension;
    std::string out;
};

int run_table1(const TableOpts& opt) {
    const std::vector<double> js = parse_list(opt.j_list, "--j");
    const std::vector<double> gammas = parse_list(opt.gammas, "--gammas");

    std::ostringstream csv;
    csv << "j,gamma,energy,fock_cutoff,fock_wall_s,coherent_cutoff,coherent_wall_s\n";

    for (double j : js) {
        std::printf("j = %g\n", j);
        std::printf("  %-6s %-12s %-10s %-14s %-14s %-18s\n", "gamma", "energy", "fock n_max",
                    "fock time (s)", "coherent N_max", "coherent time (s)");
        for (double gamma : gammas) {
            const ModelParams params = make_params(opt.omega, opt.delta, gamma, j);

            CutoffPolicy coherent_policy;
            coherent_policy.max_dimension = opt.max_dim;
            ConvergenceResult coh =
                converge(params, BasisKind::Coherent, 2, opt.tol, coherent_policy);
            const double energy = coh.report.energies[0] / params.omega();

            std::string fock_cutoff = "--";
            std::string fock_time = "--";
            CutoffPolicy fock_policy;
            fock_policy.max_dimension = std::min(opt.fock_max_dim, opt.max_dim);
            try {
                ConvergenceResult fock =
                    converge(params, BasisKind::Fock, 2, opt.tol, fock_policy);
                fock_cutoff = std::to_string(fock.report.minimal_cutoff);
                char buf[32];
                std::snprintf(buf, sizeof(buf), "%.3f", fock.report.wall_time_s);
                fock_time = buf;
                const double diff =
                    std::abs(fock.report.energies[0] - coh.report.energies[0]) / params.omega();
                if (diff > 1e-4 * std::max(1.0, std::abs(energy))) {
                    std::fprintf(stderr, "warning: basis disagreement %.2e at j=%g gamma=%g\n",
                                 diff, j, gamma);
                }
            } catch (const ConvergenceError&) {
                // dimension budget hit first: leave the cell as "--"
            } catch (const ResourceError&) {
                // starting dimension alone exceeds the budget
            }

            std::printf("  %-6s %-12s %-10s %-14s %-14d %-18.3f\n",
                        io::format_data(gamma).c_str(), format_energy(energy).c_str(),
                        fock_cutoff.c_str(), fock_time.c_str(), coh.report.minimal_cutoff,
                        coh.report.wall_time_s);
            csv << io::format_data(j) << ',' << io::format_data(gamma) << ','
                << format_energy(energy) << ','
                << (fock_cutoff == "--" ? "" : fock_cutoff) << ','
                << (fock_time == "--" ? "" : fock_time) << ',' << coh.report.minimal_cutoff
                << ',' << io::format_data(coh.report.wall_time_s) << '\n';
        }
        std::printf("\n");
    }
    if (!opt.out.empty()) write_file(opt.out, csv.str());
    return 0;
}

// ---------------------------------------------------------------------------
// bench

struct BenchOpts {
    std::string j_fock = "1,2,5";
    std::string j_coherent = "1,2,5,10,20";
    double gamma = 2.0;
    double omega = 1.0;
    double delta = 1.0;
    double tol = 1e-6;
    std::size_t max_dim = kDefaultMaxDimension;
};

int run_bench(const BenchOpts& opt) {
    struct Cell {
        double j;
        int cutoff;
        std::size_t dim;
        double assembly_s;
        double solve_s;
        double converge_s;
    };

    const auto run_basis = [&](BasisKind basis, const std::vector<double>& js) {
        std::vector<Cell> cells;
        for (double j : js) {
            const ModelParams params = make_params(opt.omega, opt.delta, opt.gamma, j);
            CutoffPolicy policy;
            policy.max_dimension = opt.max_dim;
            ConvergenceResult r = converge(params, basis, 2, opt.tol, policy);
            const int cutoff = r.report.minimal_cutoff;

            const auto t0 = std::chrono::steady_clock::now();
            const HamiltonianMatrix H =
                basis == BasisKind::Fock
                    ? build_fock_hamiltonian(params, cutoff, std::nullopt, opt.max_dim)
                    : build_coherent_hamiltonian(params, cutoff, opt.max_dim);
            const double assembly = now_seconds(t0);
            const auto t1 = std::chrono::steady_clock::now();
            (void)solve_lowest(H, 2);
            cells.push_back({j, cutoff, H.dimension(), assembly, now_seconds(t1),
                             r.report.wall_time_s});
        }
        return cells;
    };

    std::printf("gamma = %g (times are informational, never asserted)\n", opt.gamma);
    std::printf("%-10s %-6s %-8s %-8s %-12s %-10s %-12s\n", "basis", "j", "cutoff", "dim",
                "assembly_s", "solve_s", "converge_s");
    const std::vector<Cell> fock = run_basis(BasisKind::Fock, parse_list(opt.j_fock, "--j-fock"));
    const std::vector<Cell> coh =
        run_basis(BasisKind::Coherent, parse_list(opt.j_coherent, "--j-coherent"));
    for (const Cell& c : fock) {
        std::printf("%-10s %-6g %-8d %-8zu %-12.4f %-10.4f %-12.3f\n", "fock", c.j, c.cutoff,
                    c.dim, c.assembly_s, c.solve_s, c.converge_s);
    }
    for (const Cell& c : coh) {
        std::printf("%-10s %-6g %-8d %-8zu %-12.4f %-10.4f %-12.3f\n", "coherent", c.j,
                    c.cutoff, c.dim, c.assembly_s, c.solve_s, c.converge_s);
    }

    bool ok = true;
    for (std::size_t i = 1; i < fock.size(); ++i) {
        if (!(fock[i].cutoff > fock[i - 1].cutoff)) ok = false;
    }
    for (std::size_t i = 1; i < coh.size(); ++i) {
        if (!(coh[i].cutoff <= coh[i - 1].cutoff)) ok = false;
    }
    std::printf("%s minimal fock cutoff increases with j; minimal coherent cutoff is "
                "non-increasing\n",
                ok ? "[PASS]" : "[FAIL]");
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// check — oracle suites, runnable by users

int run_check() {
    int failures = 0;
    const auto report = [&](bool ok, const std::string& name, const std::string& detail = "") {
        std::printf("[%s] %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
                    detail.empty() ? "" : ": ", detail.c_str());
        if (!ok) ++failures;
    };

    {  // overlap kernel vs series oracle
        double worst = 0.0;
        for (double G : {0.5, 2.0, 3.5}) {
            const int cutoff = oracles::default_series_cutoff(20, 20, G);
            for (int n = 0; n <= 20; ++n) {
                const Eigen::VectorXd col = oracles::displaced_column_series(n, -G, cutoff);
                for (int np = 0; np <= 20; ++np) {
                    worst = std::max(worst, std::abs(col[np] - overlap(np, n, G,
                                                                       OverlapDirection::RaiseM)));
                }
            }
        }
        std::ostringstream detail;
        detail << "max deviation " << worst;
        report(worst < 1e-12, "overlap kernel vs exponential-series oracle", detail.str());
    }
    {  // literal operator build
        ModelParams p(1.0, 1.0, 0.5, 1.5);
        const double diff = (build_fock_hamiltonian(p, 5).entries -
                             oracles::brute_force_hamiltonian(p, 5))
                                .cwiseAbs()
                                .maxCoeff();
        report(diff < 1e-13, "fock assembly vs literal operator build");
    }
    {  // mean field closed form vs numerical minimizer
        double worst = 0.0;
        for (double gamma : {0.2, 0.5, 0.8, 1.5}) {
            ModelParams p(1.0, 1.0, gamma, 10.0);
            worst = std::max(worst, std::abs(oracles::mean_field(p).energy_per_j -
                                             oracles::mean_field_numerical(p).energy_per_j));
        }
        report(worst < 1e-10, "mean-field closed form vs numerical minimizer");
    }
    {  // cross-basis spectra
        bool ok = true;
        for (auto [j, gamma] : {std::pair{0.5, 1.0}, {2.0, 1.0}, {1.0, 0.5}}) {
            CrossBasisReport r = crossbasis_check(ModelParams(1.0, 1.0, gamma, j), 2, 1e-7);
            ok = ok && r.passed;
        }
        report(ok, "fock and coherent spectra agree at converged cutoffs");
    }
    {  // exactly solvable delta = 0 line
        ModelParams p(1.0, 0.0, 1.3, 2.0);
        HamiltonianMatrix H = build_coherent_hamiltonian(p, 6);
        EigenSolution s = solve_lowest(H, 2);
        const double G = p.displacement();
        const bool ok = std::abs(s.energies[0] - (-G * G * 4.0)) < 1e-12 &&
                        std::abs(s.energies[1] - s.energies[0]) < 1e-12;
        report(ok, "delta -> 0 exact spectrum and double degeneracy");
    }
    {  // two table anchors
        ConvergenceResult a =
            converge(ModelParams(1.0, 1.0, 0.5, 1.0), BasisKind::Coherent, 2, 1e-7);
        ConvergenceResult b =
            converge(ModelParams(1.0, 1.0, 1.0, 10.0), BasisKind::Coherent, 2, 1e-7);
        const bool ok = std::abs(a.report.energies[0] - (-1.15370)) < 5e-5 &&
                        std::abs(b.report.energies[0] - (-21.26310)) < 5e-5;
        report(ok, "reference ground energies (j=1, gamma=0.5) and (j=10, gamma=1)");
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-size Dicke model: exact diagonalization in Fock and "
                 "displaced-oscillator bases"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value config file ([solve]/[sweep]/... sections)");

    SolveOpts solve_opts;
    CLI::App* solve = app.add_subcommand("solve", "diagonalize one (j, gamma) point");
    solve->configurable();
    solve->fallthrough();
    solve->add_option("--j", solve_opts.j, "spin length (half-integer)")->required();
    solve->add_option("--gamma", solve_opts.gamma, "coupling strength")->required();
    solve->add_option("--omega", solve_opts.omega, "field frequency");
    solve->add_option("--delta", solve_opts.delta, "atomic splitting");
    solve->add_option("--basis", solve_opts.basis, "fock | coherent | both");
    solve->add_option("--cutoff", solve_opts.cutoff, "auto or a fixed excitation cutoff");
    solve->add_option("--states", solve_opts.states, "number of lowest states")
        ->check(CLI::PositiveNumber);
    solve->add_option("--tol", solve_opts.tol, "convergence tolerance (units of omega)");
    solve->add_option("--max-dim", solve_opts.max_dim, "matrix dimension budget");
    solve->add_option("--dump-matrix", solve_opts.dump_matrix, "write the assembled matrix");
    solve->add_option("--json", solve_opts.json_path, "write convergence reports as JSON");

    SweepOpts sweep_opts;
    CLI::App* sweep = app.add_subcommand("sweep", "observable curves over a gamma grid");
    sweep->configurable();
    sweep->fallthrough();
    sweep->add_option("--j", sweep_opts.j_list, "comma-separated spin lengths");
    sweep->add_option("--gamma-min", sweep_opts.gamma_min);
    sweep->add_option("--gamma-max", sweep_opts.gamma_max);
    sweep->add_option("--gamma-points", sweep_opts.gamma_points);
    sweep->add_option("--omega", sweep_opts.omega);
    sweep->add_option("--delta", sweep_opts.delta);
    sweep->add_option("--basis", sweep_opts.basis, "fock | coherent | both");
    sweep->add_option("--states", sweep_opts.states)->check(CLI::PositiveNumber);
    sweep->add_option("--tol", sweep_opts.tol);
    sweep->add_option("--max-dim", sweep_opts.max_dim);
    sweep->add_option("--out", sweep_opts.out, "output path");
    sweep->add_option("--format", sweep_opts.format, "csv | json");
    sweep->add_option("--threads", sweep_opts.threads, "worker threads (0 = all cores)");

    TableOpts table_opts;
    CLI::App* table = app.add_subcommand(
        "table1", "energy / minimal-cutoff / wall-time grid for both bases");
    table->configurable();
    table->fallthrough();
    table->add_option("--j", table_opts.j_list, "comma-separated spin lengths");
    table->add_option("--gammas", table_opts.gammas, "comma-separated couplings");
    table->add_option("--omega", table_opts.omega);
    table->add_option("--delta", table_opts.delta);
    table->add_option("--tol", table_opts.tol);
    table->add_option("--fock-max-dim", table_opts.fock_max_dim,
                      "dimension budget for the Fock escalation (cells beyond it print --)");
    table->add_option("--max-dim", table_opts.max_dim);
    table->add_option("--out", table_opts.out, "also write the grid as CSV");

    BenchOpts bench_opts;
    CLI::App* bench =
        app.add_subcommand("bench", "assembly/solve timings and cutoff-trend assertions");
    bench->configurable();
    bench->fallthrough();
    bench->add_option("--j-fock", bench_opts.j_fock);
    bench->add_option("--j-coherent", bench_opts.j_coherent);
    bench->add_option("--gamma", bench_opts.gamma);
    bench->add_option("--omega", bench_opts.omega);
    bench->add_option("--delta", bench_opts.delta);
    bench->add_option("--tol", bench_opts.tol);
    bench->add_option("--max-dim", bench_opts.max_dim);

    CLI::App* check = app.add_subcommand("check", "run the oracle self-checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) return run_solve(solve_opts);
        if (sweep->parsed()) return run_sweep(sweep_opts);
        if (table->parsed()) return run_table1(table_opts);
        if (bench->parsed()) return run_bench(bench_opts);
        if (check->parsed()) return run_check();
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    } catch (const ConvergenceError& e) {
        std::fprintf(stderr, "error: %s\nescalation path (cutoff, energy):\n", e.what());
        for (const auto& [cutoff, energy] : e.escalation_path()) {
            std::fprintf(stderr, "  %d %.12g\n", cutoff, energy);
        }
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
