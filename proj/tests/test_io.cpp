#include <doctest.h>

#include <cmath>

#include "dicke/coherent.hpp"
#include "dicke/io.hpp"

using namespace dicke;

TEST_CASE("matrix dump round-trips bit-exactly") {
    ModelParams p(1.0, 1.0, 0.5, 1.0);
    HamiltonianMatrix H = build_fock_hamiltonian(p, 3);
    const std::string text = io::matrix_to_text(H, p);
    CHECK(text.rfind("dicke-matrix v1 kind=fock dim=12", 0) == 0);

    io::ParsedMatrixDump parsed = io::matrix_from_text(text);
    CHECK(parsed.kind == "fock");
    CHECK(parsed.dim == 12);
    CHECK((parsed.entries - H.entries).cwiseAbs().maxCoeff() == 0.0);

    HamiltonianMatrix C = build_coherent_hamiltonian(p, 3);
    io::ParsedMatrixDump pc = io::matrix_from_text(io::matrix_to_text(C, p));
    CHECK(pc.kind == "coherent");
    CHECK(pc.G == p.displacement());
    CHECK((pc.entries - C.entries).cwiseAbs().maxCoeff() == 0.0);

    HamiltonianMatrix B = build_fock_hamiltonian(p, 3, Parity::Odd);
    io::ParsedMatrixDump pb = io::matrix_from_text(io::matrix_to_text(B, p));
    CHECK(pb.parity == "odd");
    CHECK(pb.dim == B.dimension());

    CHECK_THROWS_AS(io::matrix_from_text("garbage"), std::invalid_argument);
}

TEST_CASE("convergence report serializes with stable keys, energies in omega units") {
    ModelParams p(2.0, 2.0, 0.0, 1.0);  // omega = 2: raw E0 = -2, reported -1
    ConvergenceResult r = converge(p, BasisKind::Fock, 2, 1e-6);
    const nlohmann::json j = io::report_to_json(r.report);

    CHECK(j.at("schema") == 1);
    CHECK(j.at("params").at("omega") == 2.0);
    CHECK(j.at("params").at("delta") == 2.0);
    CHECK(j.at("params").at("gamma") == 0.0);
    CHECK(j.at("params").at("j") == 1.0);
    CHECK(j.at("basis") == "fock");
    CHECK(j.at("k") == 2);
    CHECK(j.at("tolerance") == 1e-6);
    CHECK(j.at("minimal_cutoff") == 2);
    CHECK(j.at("energies")[0].get<double>() == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(j.at("escalation").is_array());
    CHECK(j.at("escalation")[0].size() == 2);
    CHECK(j.contains("wall_time_s"));
}

TEST_CASE("CSV schema") {
    CHECK(io::csv_preamble() == "# dicke-sweep schema=1\n");
    CHECK(io::csv_header() ==
          "j,omega,delta,gamma,state,energy,gap,n_photon,n_photon_per_j,jz,jz_per_j,parity,"
          "basis,cutoff,flags\n");

    ObservableRecord rec{ModelParams(2.0, 1.0, 0.5, 1.5)};
    rec.basis = BasisKind::Coherent;
    rec.cutoff = 9;
    rec.state_index = 1;
    rec.energy = -3.0;  // raw; emitted as -1.5 in omega units
    rec.gap = 1.0;
    rec.photon_number = 0.25;
    rec.photon_per_j = 0.25 / 1.5;
    rec.jz = -1.2;
    rec.jz_per_j = -0.8;
    rec.parity = -1.0;
    rec.near_degenerate = true;

    CHECK(io::csv_row(rec) ==
          "1.5,2,1,0.5,1,-1.5,0.5,0.25,0.1666666667,-1.2,-0.8,-1,coherent,9,degenerate_pair\n");

    const nlohmann::json j = io::record_to_json(rec);
    CHECK(j.at("energy") == doctest::Approx(-1.5));
    CHECK(j.at("flags") == "degenerate_pair");
}
