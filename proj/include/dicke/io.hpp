// io.hpp — the stable external formats: matrix dump text, convergence-report
// JSON, and the sweep CSV schema. All serialized energies are in units of
// omega; formatting is locale-independent and deterministic.

#pragma once

#include <json.hpp>
#include <string>

#include "dicke/observables.hpp"
#include "dicke/spectra.hpp"

namespace dicke::io {

inline constexpr int kSchemaVersion = 1;

/// `dicke-matrix v1 kind=<fock|coherent> dim=<d> [G=<g>] [parity=<even|odd>]`
/// followed by the lower triangle, one row per line, full-precision decimal.
/// The G token appears for coherent dumps only.
std::string matrix_to_text(const HamiltonianMatrix& matrix, const ModelParams& params);

struct ParsedMatrixDump {
    std::string kind;
    std::size_t dim = 0;
    double G = 0.0;
    std::string parity;  // empty when unrestricted
    Eigen::MatrixXd entries;  // symmetric, reconstructed from the triangle
};

ParsedMatrixDump matrix_from_text(const std::string& text);

/// Stable field names: schema, params{omega,delta,gamma,j}, basis, k,
/// tolerance, minimal_cutoff, energies[], escalation[][2], wall_time_s.
nlohmann::json report_to_json(const ConvergenceReport& report);

/// First line `# dicke-sweep schema=1`, then the header row. The trailing
/// `flags` column carries `degenerate_pair` markers.
std::string csv_preamble();
std::string csv_header();
std::string csv_row(const ObservableRecord& record);

nlohmann::json record_to_json(const ObservableRecord& record);

/// Shortest round-trippable decimal (printf %.17g trimmed via %g ladder).
std::string format_full(double value);
/// Fixed 10-significant-digit form used by the CSV/JSON emitters.
std::string format_data(double value);

}  // namespace dicke::io
