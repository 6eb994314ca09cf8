#include "polarion/io/pipeline.hpp"

#include <filesystem>
#include <fstream>

#include "polarion/maxwell/transfer_matrix.hpp"

namespace polarion::io {

namespace fs = std::filesystem;

PipelineConfig load_pipeline_config(const std::string& path) {
    PipelineConfig cfg;
    cfg.raw = load_json(path);
    if (!cfg.raw.contains("output_dir") || !cfg.raw["output_dir"].is_string()) {
        throw ParseError("pipeline: missing 'output_dir'");
    }
    cfg.output_dir = cfg.raw["output_dir"].get<std::string>();
    return cfg;
}

namespace {

struct ManifestWriter {
    json entries = json::array();

    void record(const std::string& name, double value, const std::string& provenance) {
        entries.push_back({{"name", name}, {"value", fmt17(value)}, {"provenance", provenance}});
    }

    void write(const std::string& path, const std::string& failed_stage) {
        std::ofstream out(path);
        json doc;
        doc["tool"] = "polarion";
        doc["version"] = "1.0.0";
        doc["tolerances"] = {{"qnm_rel", "1e-12"}, {"steady_state_residual", "1e-10"}};
        doc["status"] = failed_stage.empty() ? "ok" : ("failed:" + failed_stage);
        doc["parameters"] = entries;
        out << doc.dump(2) << '\n';
    }
};

struct DirLock {
    fs::path path;
    explicit DirLock(const fs::path& dir) : path(dir / ".lock") {
        if (fs::exists(path)) {
            throw ConfigError("pipeline: output directory is locked by another run");
        }
        std::ofstream(path) << "locked\n";
    }
    ~DirLock() { std::error_code ec; fs::remove(path, ec); }
};

}  // namespace

int run_pipeline(const PipelineConfig& cfg) {
    fs::create_directories(cfg.output_dir);
    DirLock lock(cfg.output_dir);
    ManifestWriter manifest;
    const fs::path out(cfg.output_dir);
    std::string failed;

    std::vector<maxwell::QnmMode> modes;
    try {
        maxwell::LayerStack stack =
            cfg.raw["structure"].is_string()
                ? parse_structure(load_json(cfg.raw["structure"].get<std::string>()))
                : parse_structure(cfg.raw["structure"]);
        maxwell::QnmSearchRegion region;
        const auto& s = cfg.raw.at("search");
        region.re_min = s.at("re_min_mev").get<double>();
        region.re_max = s.at("re_max_mev").get<double>();
        region.im_min = s.value("im_min_mev", -0.25 * (region.re_max - region.re_min));
        region.im_max = s.value("im_max_mev", 1e-6 * region.re_max);
        std::size_t max_modes = s.value("max_modes", 8);
        manifest.record("search.re_min_mev", region.re_min, "config");
        manifest.record("search.re_max_mev", region.re_max, "config");
        modes = maxwell::find_qnms(stack, region, max_modes);
        write_modes_json((out / "modes.json").string(), modes,
                         (out / "mode_profile").string());
        for (std::size_t i = 0; i < modes.size(); ++i) {
            manifest.record("mode[" + std::to_string(i) + "].omega_re_mev",
                            modes[i].omega.real(), "computed:qnm");
            manifest.record("mode[" + std::to_string(i) + "].omega_im_mev",
                            modes[i].omega.imag(), "computed:qnm");
        }
    } catch (const std::exception& e) {
        failed = std::string("qnm: ") + e.what();
    }

    thirdq::RapiditySpectrum spec;
    if (failed.empty()) {
        try {
            // effective polariton-basis Liouvillian: diagonal Hamiltonian at
            // the QNM energies, one loss channel per mode at rate -2 Im(w)
            const Eigen::Index n = static_cast<Eigen::Index>(modes.size());
            if (n == 0) throw NoRootsFound("pipeline: no modes in search window");
            thirdq::QuadraticLiouvillian liouv;
            liouv.hamiltonian.a_mat = Eigen::MatrixXcd::Zero(n, n);
            liouv.hamiltonian.b_mat = Eigen::MatrixXcd::Zero(n, n);
            for (Eigen::Index i = 0; i < n; ++i) {
                liouv.hamiltonian.a_mat(i, i) = modes[i].omega.real();
                double rate = -2.0 * modes[i].omega.imag();
                if (rate <= 0.0) rate = 1e-9;  // regularize lossless modes
                thirdq::LinearJumpOperator jump;
                jump.loss_coeffs = Eigen::VectorXcd::Zero(n);
                jump.gain_coeffs = Eigen::VectorXcd::Zero(n);
                jump.loss_coeffs[i] = 1.0;
                jump.rate = rate;
                liouv.jumps.push_back(jump);
                manifest.record("jump[" + std::to_string(i) + "].rate_mev", rate,
                                "computed:qnm");
            }
            if (cfg.raw.contains("quantum") && cfg.raw["quantum"].contains("jumps")) {
                // extra channels supplied directly by the user
                for (const auto& cj : cfg.raw["quantum"]["jumps"]) {
                    thirdq::LinearJumpOperator jump;
                    jump.rate = cj.at("rate").get<double>();
                    jump.loss_coeffs = Eigen::VectorXcd::Zero(n);
                    jump.gain_coeffs = Eigen::VectorXcd::Zero(n);
                    if (cj.contains("loss")) {
                        for (Eigen::Index i = 0; i < n; ++i) {
                            jump.loss_coeffs[i] = cplx(cj["loss"][i][0].get<double>(),
                                                       cj["loss"][i][1].get<double>());
                        }
                    }
                    if (cj.contains("gain")) {
                        for (Eigen::Index i = 0; i < n; ++i) {
                            jump.gain_coeffs[i] = cplx(cj["gain"][i][0].get<double>(),
                                                       cj["gain"][i][1].get<double>());
                        }
                    }
                    liouv.jumps.push_back(jump);
                    manifest.record("extra_jump.rate_mev", jump.rate, "injected");
                }
            }
            spec = thirdq::rapidities(thirdq::build_drift_matrix(liouv));
            write_rapidities_json((out / "rapidities.json").string(), spec);
            write_gkls_json((out / "gkls.json").string(),
                            thirdq::diagonal_master_equation(spec));
        } catch (const std::exception& e) {
            failed = std::string("rapidities: ") + e.what();
        }
    }

    if (failed.empty()) {
        try {
            double g = 0.0;
            int dim = 1;
            if (cfg.raw.contains("interactions")) {
                g = cfg.raw["interactions"].value("g", 0.0);
                dim = cfg.raw["interactions"].value("dim", 1);
                manifest.record("interactions.g", g, "injected");
            }
            auto umat = interactions::interaction_matrix(g, modes, dim);
            write_umatrix_json((out / "umatrix.json").string(), umat);
        } catch (const std::exception& e) {
            failed = std::string("interactions: ") + e.what();
        }
    }

    if (failed.empty()) {
        try {
            std::vector<dissipative::SweepRow> rows;
            if (cfg.raw.contains("sweep")) {
                dissipative::TwoModeModel model = parse_model(cfg.raw["sweep"]);
                manifest.record("sweep.j_mev", model.j_coupling, "injected");
                manifest.record("sweep.gamma_mev", model.gamma, "injected");
                manifest.record("sweep.u11_mev", model.u11, "injected");
                manifest.record("sweep.u12_mev", model.u12, "injected");
                manifest.record("sweep.pump_mev", model.pump_amp, "injected");
                int points = cfg.raw["sweep"].value("points", 161);
                std::vector<double> deltas;
                if (cfg.raw["sweep"].contains("delta_min_mev")) {
                    double lo = cfg.raw["sweep"]["delta_min_mev"].get<double>();
                    double hi = cfg.raw["sweep"]["delta_max_mev"].get<double>();
                    for (int i = 0; i < points; ++i) {
                        deltas.push_back(lo + (hi - lo) * double(i) / double(points - 1));
                    }
                } else {
                    deltas = dissipative::default_delta_grid(model, points);
                }
                rows = dissipative::detuning_sweep(model, deltas);
            }
            write_sweep_csv((out / "sweep.csv").string(), rows);
        } catch (const std::exception& e) {
            failed = std::string("sweep: ") + e.what();
        }
    }

    manifest.write((out / "manifest.json").string(), failed);
    if (!failed.empty()) {
        std::ofstream(out / "FAILED") << failed << '\n';
        return 3;
    }
    return 0;
}

}  // namespace polarion::io
