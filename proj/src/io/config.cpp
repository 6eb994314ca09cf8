#include "polarion/io/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace polarion::io {

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

namespace {

double need_num(const json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key) || !j[key].is_number()) {
        throw ParseError(where + ": missing numeric key '" + key + "'");
    }
    return j[key].get<double>();
}

double opt_num(const json& j, const std::string& key, double fallback) {
    return j.contains(key) ? j[key].get<double>() : fallback;
}

cplx parse_cplx(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) throw ParseError(where + ": complex values are [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

Eigen::MatrixXcd parse_cmat(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw ParseError(where + ": expected a non-empty matrix");
    const Eigen::Index n = static_cast<Eigen::Index>(j.size());
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        if (!j[r].is_array() || static_cast<Eigen::Index>(j[r].size()) != n) {
            throw ParseError(where + ": matrix must be square");
        }
        for (Eigen::Index c = 0; c < n; ++c) {
            m(r, c) = parse_cplx(j[r][c], where);
        }
    }
    return m;
}

Eigen::VectorXcd parse_cvec(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array");
    Eigen::VectorXcd v(static_cast<Eigen::Index>(j.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = parse_cplx(j[i], where);
    return v;
}

std::string cjson(cplx z) { return "[" + fmt17(z.real()) + ", " + fmt17(z.imag()) + "]"; }

}  // namespace

maxwell::LayerStack parse_structure(const json& j) {
    maxwell::LayerStack stack;
    if (!j.contains("layers") || !j["layers"].is_array()) {
        throw ParseError("structure: missing 'layers' array");
    }
    int idx = 0;
    for (const auto& lj : j["layers"]) {
        std::string where = "layers[" + std::to_string(idx++) + "]";
        maxwell::Layer layer;
        layer.thickness_nm = need_num(lj, "thickness_nm", where);
        layer.medium.eps_b = need_num(lj, "eps_b", where);
        layer.medium.eps_bI = opt_num(lj, "eps_bI", 0.0);
        layer.medium.rho = opt_num(lj, "rho", 1.0);
        if (lj.contains("lorentz")) {
            const auto& mj = lj["lorentz"];
            layer.medium.omega0 = need_num(mj, "omega0_mev", where + ".lorentz");
            layer.medium.gamma_x = opt_num(mj, "gamma_x_mev", 0.0);
            layer.medium.g_int = opt_num(mj, "g_int", 0.0);
            // coupling_mev is the bulk Rabi energy; alpha follows from it
            double rabi = need_num(mj, "coupling_mev", where + ".lorentz");
            layer.medium.alpha = rabi * std::sqrt(layer.medium.rho * layer.medium.eps_b);
        }
        stack.layers.push_back(layer);
    }
    std::string term = j.value("termination", std::string("outgoing"));
    if (term == "outgoing") {
        stack.termination = maxwell::Termination::Outgoing;
    } else if (term == "perfect-mirror") {
        stack.termination = maxwell::Termination::PerfectMirror;
    } else if (term == "periodic") {
        stack.termination = maxwell::Termination::Periodic;
    } else {
        throw ParseError("structure: unknown termination '" + term + "'");
    }
    if (j.contains("pml")) {
        maxwell::Pml pml;
        pml.thickness_nm = need_num(j["pml"], "thickness_nm", "pml");
        if (j["pml"].contains("stretch")) pml.stretch = parse_cplx(j["pml"]["stretch"], "pml.stretch");
        stack.pml = pml;
    }
    stack.validate();
    return stack;
}

bogoliubov::QuadraticHamiltonian parse_hamiltonian(const json& j) {
    bogoliubov::QuadraticHamiltonian h;
    if (!j.contains("a")) throw ParseError("hamiltonian: missing 'a' matrix");
    h.a_mat = parse_cmat(j["a"], "hamiltonian.a");
    if (j.contains("b")) {
        h.b_mat = parse_cmat(j["b"], "hamiltonian.b");
    } else {
        h.b_mat = Eigen::MatrixXcd::Zero(h.a_mat.rows(), h.a_mat.cols());
    }
    h.validate();
    return h;
}

thirdq::QuadraticLiouvillian parse_liouvillian(const json& j) {
    thirdq::QuadraticLiouvillian liouv;
    if (!j.contains("hamiltonian")) throw ParseError("liouvillian: missing 'hamiltonian'");
    liouv.hamiltonian = parse_hamiltonian(j["hamiltonian"]);
    if (!j.contains("jumps") || !j["jumps"].is_array()) {
        throw ParseError("liouvillian: missing 'jumps' array");
    }
    int idx = 0;
    for (const auto& cj : j["jumps"]) {
        std::string where = "jumps[" + std::to_string(idx++) + "]";
        thirdq::LinearJumpOperator op;
        op.rate = need_num(cj, "rate", where);
        const Eigen::Index n = liouv.hamiltonian.size();
        op.loss_coeffs = cj.contains("loss") ? parse_cvec(cj["loss"], where + ".loss")
                                             : Eigen::VectorXcd::Zero(n);
        op.gain_coeffs = cj.contains("gain") ? parse_cvec(cj["gain"], where + ".gain")
                                             : Eigen::VectorXcd::Zero(n);
        if (op.loss_coeffs.size() != n || op.gain_coeffs.size() != n) {
            throw ParseError(where + ": coefficient length must equal mode count");
        }
        liouv.jumps.push_back(op);
    }
    liouv.validate();
    return liouv;
}

dissipative::TwoModeModel parse_model(const json& j) {
    dissipative::TwoModeModel m;
    m.omega_lr = opt_num(j, "omega_lr_mev", 0.0);
    m.j_coupling = need_num(j, "j_mev", "model");
    m.gamma = need_num(j, "gamma_mev", "model");
    m.u11 = need_num(j, "u11_mev", "model");
    m.u22 = opt_num(j, "u22_mev", m.u11);
    m.u12 = need_num(j, "u12_mev", "model");
    m.delta = opt_num(j, "delta_mev", 0.0);
    m.pump_amp = opt_num(j, "pump_mev", 1e-3);
    m.n_max = static_cast<int>(opt_num(j, "n_max", 8));
    m.mirror_symmetric = j.value("mirror_symmetric", false);
    m.validate();
    return m;
}

std::vector<Diagnostic> validate_config(const std::string& path) {
    std::vector<Diagnostic> diags;
    json j;
    try {
        j = load_json(path);
    } catch (const std::exception& e) {
        diags.push_back({path, e.what()});
        return diags;
    }
    auto check = [&](const char* where, auto&& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            diags.push_back({where, e.what()});
        }
    };
    if (j.contains("layers")) {
        check("structure", [&] { parse_structure(j); });
    } else if (j.contains("jumps")) {
        check("liouvillian", [&] {
            auto liouv = parse_liouvillian(j);
            auto drift = thirdq::build_drift_matrix(liouv);
            Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(drift);
            for (Eigen::Index i = 0; i < drift.rows(); ++i) {
                if (es.eigenvalues()[i].real() >= 0.0) {
                    throw ConfigError("drift matrix is not stable (no NESS)");
                }
            }
        });
    } else if (j.contains("a")) {
        check("hamiltonian", [&] { parse_hamiltonian(j); });
    } else if (j.contains("gamma_mev")) {
        check("model", [&] { parse_model(j); });
    } else if (j.contains("structure")) {
        check("pipeline", [&] {
            if (j["structure"].is_string()) {
                parse_structure(load_json(j["structure"].get<std::string>()));
            } else {
                parse_structure(j["structure"]);
            }
            if (j.contains("search")) {
                const auto& s = j["search"];
                if (need_num(s, "re_min_mev", "search") >= need_num(s, "re_max_mev", "search")) {
                    throw ConfigError("search window is empty");
                }
            }
            if (j.contains("sweep")) parse_model(j["sweep"]);
        });
    } else {
        diags.push_back({path, "unrecognized config: expected structure, hamiltonian, "
                               "liouvillian, model, or pipeline keys"});
    }
    return diags;
}

void write_mode_profile_csv(const std::string& path, const maxwell::QnmMode& mode) {
    std::ofstream out(path);
    out << "z_nm,e_re,e_im,x_re,x_im\n";
    for (std::size_t i = 0; i < mode.size(); ++i) {
        out << fmt17(mode.z_at(i)) << ',' << fmt17(mode.e_profile[i].real()) << ','
            << fmt17(mode.e_profile[i].imag()) << ',' << fmt17(mode.x_profile[i].real()) << ','
            << fmt17(mode.x_profile[i].imag()) << '\n';
    }
}

void write_modes_json(const std::string& path, const std::vector<maxwell::QnmMode>& modes,
                      const std::string& profile_stem) {
    std::ofstream out(path);
    out << "{\n  \"modes\": [\n";
    for (std::size_t i = 0; i < modes.size(); ++i) {
        const auto& m = modes[i];
        std::string profile = profile_stem + "_" + std::to_string(i) + ".csv";
        out << "    {\"omega_re_mev\": " << fmt17(m.omega.real())
            << ", \"omega_im_mev\": " << fmt17(m.omega.imag())
            << ", \"photon_fraction\": " << fmt17(m.photon_fraction)
            << ", \"exciton_fraction\": " << fmt17(m.exciton_fraction)
            << ", \"profile_file\": \"" << profile << "\"}";
        out << (i + 1 < modes.size() ? ",\n" : "\n");
        write_mode_profile_csv(profile, m);
    }
    out << "  ]\n}\n";
}

std::vector<maxwell::QnmMode> read_modes_json(const std::string& path) {
    json doc = load_json(path);
    if (!doc.contains("modes")) throw ParseError(path + ": missing 'modes'");
    std::vector<maxwell::QnmMode> modes;
    for (const auto& mj : doc["modes"]) {
        maxwell::QnmMode m;
        m.omega = cplx(mj.at("omega_re_mev").get<double>(), mj.at("omega_im_mev").get<double>());
        m.photon_fraction = mj.value("photon_fraction", 0.0);
        m.exciton_fraction = mj.value("exciton_fraction", 0.0);
        std::string profile = mj.at("profile_file").get<std::string>();
        std::ifstream in(profile);
        if (!in) throw ParseError("cannot open profile file " + profile);
        std::string line;
        std::getline(in, line);  // header
        std::vector<double> zs;
        while (std::getline(in, line)) {
            double z, er, ei, xr, xi;
            if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf", &z, &er, &ei, &xr, &xi) != 5) {
                throw ParseError(profile + ": malformed row '" + line + "'");
            }
            zs.push_back(z);
            m.e_profile.emplace_back(er, ei);
            m.x_profile.emplace_back(xr, xi);
        }
        if (zs.size() < 2) throw ParseError(profile + ": too few samples");
        m.z_min = zs.front();
        m.dz = zs[1] - zs[0];
        modes.push_back(std::move(m));
    }
    return modes;
}

void write_spectrum_json(const std::string& path, const bogoliubov::BogoliubovTransform& t) {
    std::ofstream out(path);
    out << "{\n  \"freqs_mev\": [";
    for (Eigen::Index i = 0; i < t.freqs.size(); ++i) {
        out << (i ? ", " : "") << fmt17(t.freqs[i]);
    }
    out << "],\n  \"u\": [\n";
    auto dump_mat = [&](const Eigen::MatrixXcd& m) {
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            out << "    [";
            for (Eigen::Index c = 0; c < m.cols(); ++c) {
                out << (c ? ", " : "") << cjson(m(r, c));
            }
            out << (r + 1 < m.rows() ? "],\n" : "]\n");
        }
    };
    dump_mat(t.u);
    out << "  ],\n  \"v\": [\n";
    dump_mat(t.v);
    out << "  ]\n}\n";
}

void write_rapidities_json(const std::string& path, const thirdq::RapiditySpectrum& spec) {
    std::ofstream out(path);
    out << "{\n  \"rapidities\": [\n";
    for (std::size_t r = 0; r < spec.omegas.size(); ++r) {
        out << "    {\"re\": " << fmt17(spec.omegas[r].real())
            << ", \"im\": " << fmt17(spec.omegas[r].imag()) << ", \"c\": [";
        for (Eigen::Index i = 0; i < spec.c_coeffs[r].size(); ++i) {
            out << (i ? ", " : "") << cjson(spec.c_coeffs[r][i]);
        }
        out << "], \"d\": [";
        for (Eigen::Index i = 0; i < spec.d_coeffs[r].size(); ++i) {
            out << (i ? ", " : "") << cjson(spec.d_coeffs[r][i]);
        }
        out << "]}" << (r + 1 < spec.omegas.size() ? ",\n" : "\n");
    }
    out << "  ],\n  \"degenerate_warning\": " << (spec.degenerate_warning ? "true" : "false")
        << "\n}\n";
}

void write_gkls_json(const std::string& path, const std::vector<thirdq::GklsRecord>& recs) {
    std::ofstream out(path);
    out << "{\n  \"gkls_records\": [\n";
    for (std::size_t r = 0; r < recs.size(); ++r) {
        out << "    {\"re_omega_mev\": " << fmt17(recs[r].re_omega)
            << ", \"im_omega_mev\": " << fmt17(recs[r].im_omega)
            << ", \"rate_mev\": " << fmt17(recs[r].rate()) << ", \"equation\": \""
            << thirdq::render_gkls_record(recs[r], static_cast<int>(r)) << "\"}"
            << (r + 1 < recs.size() ? ",\n" : "\n");
    }
    out << "  ]\n}\n";
}

void write_umatrix_json(const std::string& path, const interactions::InteractionMatrix& m) {
    std::ofstream out(path);
    out << "{\n  \"dimensionality\": " << m.dimensionality << ",\n  \"u_mev\": [\n";
    for (Eigen::Index r = 0; r < m.u.rows(); ++r) {
        out << "    [";
        for (Eigen::Index c = 0; c < m.u.cols(); ++c) {
            out << (c ? ", " : "") << fmt17(m.u(r, c));
        }
        out << (r + 1 < m.u.rows() ? "],\n" : "]\n");
    }
    out << "  ]\n}\n";
}

void write_sweep_csv(const std::string& path, const std::vector<dissipative::SweepRow>& rows) {
    std::ofstream out(path);
    out << "delta_mev,g11,g22,g12,cs_ratio,n_l,n_r,converged\n";
    for (const auto& r : rows) {
        out << fmt17(r.delta) << ',' << fmt17(r.g11) << ',' << fmt17(r.g22) << ','
            << fmt17(r.g12) << ',' << fmt17(r.cs_ratio) << ',' << fmt17(r.n_l) << ','
            << fmt17(r.n_r) << ',' << (r.converged ? 1 : 0) << '\n';
    }
}

}  // namespace polarion::io
