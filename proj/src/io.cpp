#include "dicke/io.hpp"

#include <cstdio>
#include <sstream>

namespace dicke::io {

std::string format_full(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string format_data(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", value);
    return buf;
}

std::string matrix_to_text(const HamiltonianMatrix& matrix, const ModelParams& params) {
    std::ostringstream out;
    out << "dicke-matrix v1 kind=" << to_string(matrix.spec.kind())
        << " dim=" << matrix.dimension();
    if (matrix.spec.kind() == BasisKind::Coherent) {
        out << " G=" << format_full(params.displacement());
    }
    if (matrix.parity_block) out << " parity=" << to_string(*matrix.parity_block);
    out << '\n';
    const Eigen::Index dim = matrix.entries.rows();
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c <= r; ++c) {
            if (c > 0) out << ' ';
            out << format_full(matrix.entries(r, c));
        }
        out << '\n';
    }
    return out.str();
}

ParsedMatrixDump matrix_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty matrix dump");

    ParsedMatrixDump parsed;
    {
        std::istringstream header(line);
        std::string magic, version, token;
        header >> magic >> version;
        if (magic != "dicke-matrix" || version != "v1") {
            throw std::invalid_argument("not a dicke-matrix v1 dump");
        }
        while (header >> token) {
            const auto eq = token.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("malformed header token");
            const std::string key = token.substr(0, eq);
            const std::string val = token.substr(eq + 1);
            if (key == "kind") {
                parsed.kind = val;
            } else if (key == "dim") {
                parsed.dim = std::stoul(val);
            } else if (key == "G") {
                parsed.G = std::stod(val);
            } else if (key == "parity") {
                parsed.parity = val;
            }
        }
    }

    parsed.entries = Eigen::MatrixXd::Zero(parsed.dim, parsed.dim);
    for (std::size_t r = 0; r < parsed.dim; ++r) {
        if (!std::getline(in, line)) throw std::invalid_argument("truncated matrix dump");
        std::istringstream row(line);
        for (std::size_t c = 0; c <= r; ++c) {
            double v = 0.0;
            if (!(row >> v)) throw std::invalid_argument("short row in matrix dump");
            parsed.entries(r, c) = v;
            parsed.entries(c, r) = v;
        }
    }
    return parsed;
}

nlohmann::json report_to_json(const ConvergenceReport& report) {
    const double omega = report.params.omega();
    nlohmann::json energies = nlohmann::json::array();
    for (Eigen::Index i = 0; i < report.energies.size(); ++i) {
        energies.push_back(report.energies[i] / omega);
    }
    nlohmann::json escalation = nlohmann::json::array();
    for (const auto& [cutoff, energy] : report.escalation_path) {
        escalation.push_back({cutoff, energy / omega});
    }
    return nlohmann::json{
        {"schema", kSchemaVersion},
        {"params",
         {{"omega", report.params.omega()},
          {"delta", report.params.delta()},
          {"gamma", report.params.gamma()},
          {"j", report.params.j()}}},
        {"basis", to_string(report.basis)},
        {"k", report.k},
        {"tolerance", report.tolerance},
        {"minimal_cutoff", report.minimal_cutoff},
        {"energies", energies},
        {"escalation", escalation},
        {"wall_time_s", report.wall_time_s},
    };
}

std::string csv_preamble() {
    return "# dicke-sweep schema=1\n";
}

std::string csv_header() {
    return "j,omega,delta,gamma,state,energy,gap,n_photon,n_photon_per_j,jz,jz_per_j,parity,"
           "basis,cutoff,flags\n";
}

std::string csv_row(const ObservableRecord& r) {
    const double omega = r.params.omega();
    std::ostringstream out;
    out << format_data(r.params.j()) << ',' << format_data(r.params.omega()) << ','
        << format_data(r.params.delta()) << ',' << format_data(r.params.gamma()) << ','
        << r.state_index << ',' << format_data(r.energy / omega) << ','
        << format_data(r.gap / omega) << ',' << format_data(r.photon_number) << ','
        << format_data(r.photon_per_j) << ',' << format_data(r.jz) << ','
        << format_data(r.jz_per_j) << ',' << format_data(r.parity) << ',' << to_string(r.basis)
        << ',' << r.cutoff << ',' << (r.near_degenerate ? "degenerate_pair" : "") << '\n';
    return out.str();
}

nlohmann::json record_to_json(const ObservableRecord& r) {
    const double omega = r.params.omega();
    return nlohmann::json{
        {"j", r.params.j()},
        {"omega", r.params.omega()},
        {"delta", r.params.delta()},
        {"gamma", r.params.gamma()},
        {"state", r.state_index},
        {"energy", r.energy / omega},
        {"gap", r.gap / omega},
        {"n_photon", r.photon_number},
        {"n_photon_per_j", r.photon_per_j},
        {"jz", r.jz},
        {"jz_per_j", r.jz_per_j},
        {"parity", r.parity},
        {"basis", to_string(r.basis)},
        {"cutoff", r.cutoff},
        {"flags", r.near_degenerate ? "degenerate_pair" : ""},
    };
}

}  // namespace dicke::io
