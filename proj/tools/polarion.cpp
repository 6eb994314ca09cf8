#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <omp.h>

#include "polarion/bogoliubov/bogoliubov.hpp"
#include "polarion/dissipative/two_mode.hpp"
#include "polarion/interactions/interactions.hpp"
#include "polarion/io/config.hpp"
#include "polarion/io/pipeline.hpp"
#include "polarion/maxwell/fd_helmholtz.hpp"
#include "polarion/maxwell/transfer_matrix.hpp"
#include "polarion/thirdq/brute_force.hpp"
#include "polarion/thirdq/thirdq.hpp"

namespace {

using namespace polarion;
using io::fmt17;

int cmd_qnm_find(const std::string& structure_file, double re_min, double re_max,
                 double im_min, double im_max, std::size_t max_modes,
                 const std::string& backend, std::size_t grid_points,
                 const std::string& out_file) {
    maxwell::LayerStack stack = io::parse_structure(io::load_json(structure_file));
    maxwell::QnmSearchRegion region{re_min, re_max, im_min, im_max};
    std::vector<maxwell::QnmMode> modes;
    if (backend == "fd") {
        modes = maxwell::fd_helmholtz_qnm(stack, grid_points, region, max_modes);
    } else {
        modes = maxwell::find_qnms(stack, region, max_modes);
    }
    std::string stem = out_file;
    if (auto pos = stem.rfind(".json"); pos != std::string::npos) stem.resize(pos);
    io::write_modes_json(out_file, modes, stem + "_profile");
    std::cout << "wrote " << modes.size() << " modes to " << out_file << '\n';
    return 0;
}

int cmd_bogoliubov(const std::string& hamiltonian_file, const std::string& out_file) {
    auto h = io::parse_hamiltonian(io::load_json(hamiltonian_file));
    auto t = bogoliubov::diagonalize_symplectic(h);
    io::write_spectrum_json(out_file, t);
    std::cout << "wrote spectrum to " << out_file << '\n';
    return 0;
}

int cmd_thirdq_spectrum(const std::string& liouvillian_file, const std::string& out_file) {
    auto liouv = io::parse_liouvillian(io::load_json(liouvillian_file));
    auto spec = thirdq::rapidities(thirdq::build_drift_matrix(liouv));
    io::write_rapidities_json(out_file, spec);
    auto recs = thirdq::diagonal_master_equation(spec);
    for (std::size_t r = 0; r < recs.size(); ++r) {
        std::cout << thirdq::render_gkls_record(recs[r], static_cast<int>(r)) << '\n';
    }
    return 0;
}

int cmd_thirdq_verify(const std::string& liouvillian_file, int n_max,
                      const std::string& out_file) {
    auto liouv = io::parse_liouvillian(io::load_json(liouvillian_file));
    auto spec = thirdq::rapidities(thirdq::build_drift_matrix(liouv));
    auto check = thirdq::verify_spectrum_composition(liouv, spec, n_max);
    std::ostringstream os;
    os << "{\n  \"rapidities\": [";
    for (std::size_t r = 0; r < spec.omegas.size(); ++r) {
        os << (r ? ", " : "") << "{\"re\": " << fmt17(spec.omegas[r].real())
           << ", \"im\": " << fmt17(spec.omegas[r].imag()) << "}";
    }
    os << "],\n  \"verification\": {\"checked\": " << check.checked
       << ", \"matched\": " << check.matched
       << ", \"max_residual\": " << fmt17(check.max_residual) << "}\n}\n";
    if (out_file.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream(out_file) << os.str();
    }
    if (!check.all_matched()) {
        throw NumericalError("thirdq verify: spectrum composition check failed");
    }
    return 0;
}

int cmd_interactions(const std::string& modes_file, double g, int dim,
                     const std::string& out_file) {
    auto modes = io::read_modes_json(modes_file);
    auto umat = interactions::interaction_matrix(g, modes, dim);
    io::write_umatrix_json(out_file, umat);
    std::cout << "wrote " << out_file << '\n';
    return 0;
}

int cmd_sweep(const std::string& model_file, double delta_min, double delta_max, int points,
              bool zero_cross, bool serial, const std::string& out_file) {
    auto model = io::parse_model(io::load_json(model_file));
    std::vector<double> deltas;
    for (int i = 0; i < points; ++i) {
        deltas.push_back(delta_min + (delta_max - delta_min) * double(i) / double(points - 1));
    }
    auto rows = dissipative::detuning_sweep(model, deltas, zero_cross, !serial);
    io::write_sweep_csv(out_file, rows);
    std::cout << "wrote " << rows.size() << " rows to " << out_file << '\n';
    return 0;
}

int cmd_validate(const std::string& config_file) {
    auto diags = io::validate_config(config_file);
    for (const auto& d : diags) {
        std::cout << d.where << ": " << d.message << '\n';
    }
    if (diags.empty()) {
        std::cout << "ok\n";
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* threads = std::getenv("POLARION_THREADS")) {
        int n = std::atoi(threads);
        if (n > 0) omp_set_num_threads(n);
    }

    CLI::App app{"polarion: layered-structure polariton quantization toolkit"};
    app.require_subcommand(1);

    // qnm find
    auto* qnm = app.add_subcommand("qnm", "quasinormal mode solver");
    qnm->require_subcommand(1);
    auto* qnm_find = qnm->add_subcommand("find", "find complex eigenfrequencies");
    std::string structure_file, out_file = "modes.json", backend = "tm";
    double re_min = 0.0, re_max = 0.0, im_min = -100.0, im_max = 1e-6;
    std::size_t max_modes = 8, grid_points = 2000;
    qnm_find->add_option("--structure", structure_file)->required();
    qnm_find->add_option("--re-min", re_min)->required();
    qnm_find->add_option("--re-max", re_max)->required();
    qnm_find->add_option("--im-min", im_min);
    qnm_find->add_option("--im-max", im_max);
    qnm_find->add_option("--max-modes", max_modes);
    qnm_find->add_option("--backend", backend)->check(CLI::IsMember({"tm", "fd"}));
    qnm_find->add_option("--grid-points", grid_points);
    qnm_find->add_option("--out", out_file);

    // bogoliubov
    auto* bog = app.add_subcommand("bogoliubov", "symplectic diagonalization");
    std::string ham_file, spectrum_file = "spectrum.json";
    bog->add_option("--hamiltonian", ham_file)->required();
    bog->add_option("--out", spectrum_file);

    // thirdq
    auto* tq = app.add_subcommand("thirdq", "third quantization");
    tq->require_subcommand(1);
    auto* tq_spec = tq->add_subcommand("spectrum", "rapidity spectrum");
    auto* tq_verify = tq->add_subcommand("verify", "brute-force cross-check");
    std::string liou_file, rap_file = "rapidities.json", verify_out;
    int verify_nmax = 5;
    tq_spec->add_option("--liouvillian", liou_file)->required();
    tq_spec->add_option("--out", rap_file);
    tq_verify->add_option("--liouvillian", liou_file)->required();
    tq_verify->add_option("--nmax", verify_nmax);
    tq_verify->add_option("--out", verify_out);

    // interactions
    auto* inter = app.add_subcommand("interactions", "interaction matrix");
    std::string modes_file, umatrix_file = "umatrix.json";
    double g_2d = 0.0;
    int dim = 1;
    inter->add_option("--modes", modes_file)->required();
    inter->add_option("--g-2d", g_2d)->required();
    inter->add_option("--dim", dim);
    inter->add_option("--out", umatrix_file);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "detuning sweep");
    std::string model_file, sweep_file = "sweep.csv";
    double delta_min = 0.0, delta_max = 0.0;
    int points = 161;
    bool zero_cross = false, serial = false;
    sweep->add_option("--model", model_file)->required();
    sweep->add_option("--delta-min", delta_min)->required();
    sweep->add_option("--delta-max", delta_max)->required();
    sweep->add_option("--points", points);
    sweep->add_flag("--zero-cross-interaction", zero_cross);
    sweep->add_flag("--serial", serial);
    sweep->add_option("--out", sweep_file);

    // pipeline
    auto* pipe = app.add_subcommand("pipeline", "full workflow");
    std::string pipeline_file;
    pipe->add_option("--config", pipeline_file)->required();

    // validate
    auto* validate = app.add_subcommand("validate", "config diagnostics");
    std::string validate_file;
    validate->add_option("--config", validate_file)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (qnm_find->parsed()) {
            return cmd_qnm_find(structure_file, re_min, re_max, im_min, im_max, max_modes,
                                backend, grid_points, out_file);
        }
        if (bog->parsed()) return cmd_bogoliubov(ham_file, spectrum_file);
        if (tq_spec->parsed()) return cmd_thirdq_spectrum(liou_file, rap_file);
        if (tq_verify->parsed()) return cmd_thirdq_verify(liou_file, verify_nmax, verify_out);
        if (inter->parsed()) return cmd_interactions(modes_file, g_2d, dim, umatrix_file);
        if (sweep->parsed()) {
            return cmd_sweep(model_file, delta_min, delta_max, points, zero_cross, serial,
                             sweep_file);
        }
        if (pipe->parsed()) return io::run_pipeline(io::load_pipeline_config(pipeline_file));
        if (validate->parsed()) return cmd_validate(validate_file);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
