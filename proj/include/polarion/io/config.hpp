#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "polarion/bogoliubov/bogoliubov.hpp"
#include "polarion/dissipative/two_mode.hpp"
#include "polarion/errors.hpp"
#include "polarion/interactions/interactions.hpp"
#include "polarion/maxwell/medium.hpp"
#include "polarion/maxwell/mode.hpp"
#include "polarion/thirdq/thirdq.hpp"

namespace polarion::io {

using json = nlohmann::ordered_json;
using cplx = std::complex<double>;

// Deterministic 17-significant-digit rendering.
std::string fmt17(double x);

// Loads a JSON file; throws ParseError with byte location on failure.
json load_json(const std::string& path);

maxwell::LayerStack parse_structure(const json& j);
bogoliubov::QuadraticHamiltonian parse_hamiltonian(const json& j);
thirdq::QuadraticLiouvillian parse_liouvillian(const json& j);
dissipative::TwoModeModel parse_model(const json& j);

struct Diagnostic {
    std::string where;    // JSON-pointer-ish location
    std::string message;
};

// Schema + physics checks; empty result means the file is runnable.
std::vector<Diagnostic> validate_config(const std::string& path);

// Artifact writers (hand-formatted for byte-stable output).
void write_modes_json(const std::string& path, const std::vector<maxwell::QnmMode>& modes,
                      const std::string& profile_stem);
void write_mode_profile_csv(const std::string& path, const maxwell::QnmMode& mode);
std::vector<maxwell::QnmMode> read_modes_json(const std::string& path);
void write_spectrum_json(const std::string& path, const bogoliubov::BogoliubovTransform& t);
void write_rapidities_json(const std::string& path, const thirdq::RapiditySpectrum& spec);
void write_gkls_json(const std::string& path, const std::vector<thirdq::GklsRecord>& recs);
void write_umatrix_json(const std::string& path, const interactions::InteractionMatrix& m);
void write_sweep_csv(const std::string& path, const std::vector<dissipative::SweepRow>& rows);

}  // namespace polarion::io
