#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "polarion/units.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path work_dir() {
    fs::path p = fs::temp_directory_path() / "polarion_cli_tests";
    fs::create_directories(p);
    return p;
}

std::string write_file(const std::string& name, const std::string& content) {
    fs::path p = work_dir() / name;
    std::ofstream out(p);
    out << content;
    return p.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run(const std::string& args) {
    std::string cmd = std::string(POLARION_BIN) + " " + args + " >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    return WEXITSTATUS(rc);
}

std::string out_path(const std::string& name) { return (work_dir() / name).string(); }

const char* kMirrorSlab = R"({
    "layers": [{"thickness_nm": 400.0, "eps_b": 4.0}],
    "termination": "perfect-mirror"
})";

const char* kDampedMode = R"({
    "hamiltonian": {"a": [[[1.5, 0.0]]]},
    "jumps": [{"rate": 0.2, "loss": [[1.0, 0.0]]}]
})";

}  // namespace

TEST_CASE("validate exits 0 on a clean config and 2 on diagnostics") {
    auto good = write_file("structure.json", kMirrorSlab);
    CHECK(run("validate --config " + good) == 0);

    auto bad = write_file("bad_model.json", R"({
        "j_mev": 0.047, "gamma_mev": 0.0095, "u11_mev": 0.171,
        "u12_mev": 0.0188, "n_max": 1
    })");
    CHECK(run("validate --config " + bad) == 2);
    CHECK(run("validate --config " + out_path("no_such_file.json")) == 2);
}

TEST_CASE("qnm find recovers mirror-slab frequencies and writes stable artifacts") {
    auto structure = write_file("structure.json", kMirrorSlab);
    double scale = M_PI * polarion::units::hbar_c / (2.0 * 400.0);
    std::ostringstream args;
    args << "qnm find --structure " << structure << " --re-min " << 0.5 * scale
         << " --re-max " << 3.5 * scale << " --im-min -1.0 --im-max 1.0"
         << " --max-modes 3 --out " << out_path("modes.json");
    REQUIRE(run(args.str()) == 0);
    auto doc = json::parse(slurp(out_path("modes.json")));
    REQUIRE(doc["modes"].size() == 3);
    for (int m = 1; m <= 3; ++m) {
        double re = doc["modes"][m - 1]["omega_re_mev"].get<double>();
        CHECK(re == doctest::Approx(m * scale).epsilon(1e-9));
    }
    std::string first = slurp(out_path("modes.json"));
    REQUIRE(run(args.str()) == 0);
    CHECK(slurp(out_path("modes.json")) == first);
}

TEST_CASE("bogoliubov reports the single-mode frequency") {
    auto ham = write_file("ham.json", R"({"a": [[[2.5, 0.0]]]})");
    REQUIRE(run("bogoliubov --hamiltonian " + ham + " --out " + out_path("spectrum.json")) == 0);
    auto doc = json::parse(slurp(out_path("spectrum.json")));
    CHECK(doc["freqs_mev"][0].get<double>() == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("thirdq spectrum yields the damped-mode rapidity") {
    auto liou = write_file("liou.json", kDampedMode);
    REQUIRE(run("thirdq spectrum --liouvillian " + liou + " --out " +
                out_path("rapidities.json")) == 0);
    auto doc = json::parse(slurp(out_path("rapidities.json")));
    REQUIRE(doc["rapidities"].size() == 1);
    CHECK(doc["rapidities"][0]["re"].get<double>() == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(doc["rapidities"][0]["im"].get<double>() == doctest::Approx(-0.1).epsilon(1e-12));
}

TEST_CASE("thirdq verify cross-checks against the brute-force spectrum") {
    auto liou = write_file("liou.json", kDampedMode);
    CHECK(run("thirdq verify --liouvillian " + liou + " --nmax 6") == 0);
}

TEST_CASE("an unstable liouvillian is a numerical failure (exit 3)") {
    auto gain = write_file("gain.json", R"({
        "hamiltonian": {"a": [[[1.0, 0.0]]]},
        "jumps": [{"rate": 0.5, "gain": [[1.0, 0.0]]}]
    })");
    CHECK(run("thirdq spectrum --liouvillian " + gain + " --out " +
              out_path("unstable.json")) == 3);
}

TEST_CASE("serial and parallel sweeps produce identical CSV bytes") {
    auto model = write_file("model.json", R"({
        "j_mev": 0.047, "gamma_mev": 0.0095, "u11_mev": 0.171,
        "u12_mev": 0.0188, "n_max": 5, "pump_mev": 1e-3
    })");
    std::string common = "sweep --model " + model + " --delta-min -0.3 --delta-max 0.3"
                         " --points 5 --out ";
    REQUIRE(run(common + out_path("sweep_par.csv")) == 0);
    REQUIRE(run(common + out_path("sweep_ser.csv") + " --serial") == 0);
    std::string par = slurp(out_path("sweep_par.csv"));
    CHECK(par == slurp(out_path("sweep_ser.csv")));
    CHECK(par.rfind("delta_mev,g11,g22,g12,cs_ratio,n_l,n_r,converged\n", 0) == 0);
}

TEST_CASE("pipeline writes the full artifact set with an ok manifest") {
    double scale = M_PI * polarion::units::hbar_c / (2.0 * 400.0);
    json cfg;
    cfg["output_dir"] = (work_dir() / "pipeline_out").string();
    cfg["structure"] = json::parse(kMirrorSlab);
    cfg["search"] = {{"re_min_mev", 0.5 * scale}, {"re_max_mev", 3.5 * scale},
                     {"im_min_mev", -1.0}, {"im_max_mev", 1.0}, {"max_modes", 3}};
    cfg["interactions"] = {{"g", 100.0}, {"dim", 1}};
    cfg["sweep"] = {{"j_mev", 0.047}, {"gamma_mev", 0.0095}, {"u11_mev", 0.171},
                    {"u12_mev", 0.0188}, {"n_max", 5}, {"points", 3}};
    auto cfg_path = write_file("pipeline.json", cfg.dump(2));
    fs::remove_all(work_dir() / "pipeline_out");
    REQUIRE(run("pipeline --config " + cfg_path) == 0);
    for (const char* name : {"modes.json", "rapidities.json", "gkls.json", "umatrix.json",
                             "sweep.csv", "manifest.json"}) {
        CHECK(fs::exists(work_dir() / "pipeline_out" / name));
    }
    auto manifest = json::parse(slurp((work_dir() / "pipeline_out" / "manifest.json").string()));
    CHECK(manifest["status"].get<std::string>() == "ok");
    CHECK(!fs::exists(work_dir() / "pipeline_out" / ".lock"));
}

TEST_CASE("missing inputs map to config errors, not crashes") {
    CHECK(run("qnm find --structure " + out_path("nope.json") +
              " --re-min 100 --re-max 200 --out " + out_path("x.json")) == 2);
    CHECK(run("pipeline --config " + out_path("nope.json")) == 2);
}
