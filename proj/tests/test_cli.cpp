#include <doctest.h>

#include <stdexcept>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "phdg/cli.hpp"
#include "phdg/csv_io.hpp"

using namespace phdg;
namespace fs = std::filesystem;

namespace {

const char* small_run_json = R"json({
  "mesh": {"a": 0.0, "b": 1.0, "N": 8},
  "degrees": {"k1": 1, "k2": 1},
  "material": {"c1": 1.0, "c2": 1.0},
  "flux": {"preset": "damped_central(0.5)"},
  "bc": {"left": "dirichlet", "right": "neumann"},
  "input": {"u1": "paper_pulse", "u2": "zero"},
  "time": {"T": 0.2, "dt": 1e-3, "output_every": 10},
  "snapshot_times": [0.1]
})json";

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::size_t count_lines(const std::string& text) {
    std::size_t lines = 0;
    for (char c : text)
        if (c == '\n')
            ++lines;
    return lines;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("phdg_test_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("config parsing and validation") {
    const RunConfig config = parse_config_text(small_run_json);
    CHECK(config.mesh_n == 8);
    CHECK(config.flux.beta == 0.5);
    CHECK(config.flux.tau == 0.5);
    CHECK(config.bc.left == BoundaryKind::Dirichlet);
    CHECK(config.bc.right == BoundaryKind::Neumann);
    CHECK(config.snapshot_times == std::vector<double>{0.1});

    CHECK_THROWS_AS(parse_config_text("{"), ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"({"mesh": {"a":0,"b":1,"N":4}})"), ConfigError);

    // Unknown keys are rejected so typos cannot slip through.
    CHECK_THROWS_WITH_AS(
        parse_config_text(
            R"({"mesh":{"a":0,"b":1,"N":4},"flux":{"preset":"central"},"time":{"T":1,"dt":0.1},"fluxx":{}})"),
        doctest::Contains("fluxx"), ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_config_text(
            R"({"mesh":{"a":0,"b":1,"N":4,"M":9},"flux":{"preset":"central"},"time":{"T":1,"dt":0.1}})"),
        doctest::Contains("mesh.M"), ConfigError);

    // Out-of-range flux parameters are caught at parse time.
    CHECK_THROWS_AS(
        parse_config_text(
            R"({"mesh":{"a":0,"b":1,"N":4},"flux":{"beta":1.5,"tau":0,"xi":0},"time":{"T":1,"dt":0.1}})"),
        ConfigError);
    CHECK_THROWS_AS(
        parse_config_text(
            R"({"mesh":{"a":0,"b":1,"N":4},"flux":{"preset":"central"},"time":{"T":1,"dt":0.1},"input":{"u1":"warble"}})"),
        ConfigError);
    CHECK_THROWS_AS(
        parse_config_text(
            R"({"mesh":{"a":1,"b":0,"N":4},"flux":{"preset":"central"},"time":{"T":1,"dt":0.1}})"),
        ConfigError);
}

TEST_CASE("signal specs") {
    CHECK(parse_signal("zero")(0.3) == 0.0);
    CHECK(parse_signal("constant:2.5")(11.0) == 2.5);
    CHECK(parse_signal("paper_pulse")(0.0625) == doctest::Approx(1.0).epsilon(1e-14));

    const auto sine = parse_signal("sine:2:4:0.125");
    CHECK(sine(0.0625) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(sine(0.2) == 0.0);
    // paper_pulse is sine:1:4:0.125
    const auto pulse = parse_signal("sine:1:4:0.125");
    for (double t : {0.0, 0.01, 0.0703, 0.124, 0.125, 0.7})
        CHECK(pulse(t) == doctest::Approx(parse_signal("paper_pulse")(t)).epsilon(1e-14));

    CHECK_THROWS_AS(parse_signal("sine:1:4"), ConfigError);
    CHECK_THROWS_AS(parse_signal("constant:abc"), ConfigError);
    CHECK_THROWS_AS(parse_signal("ramp"), ConfigError);
}

TEST_CASE("simulate command writes the expected files") {
    const RunConfig config = parse_config_text(small_run_json);
    TempDir dir;
    REQUIRE(cmd_simulate(config, dir.path.string(), false) == 0);

    const std::string hamiltonian = read_file(dir.path / "hamiltonian.csv");
    CHECK(count_lines(hamiltonian) == 202); // header + 200 steps + initial sample
    CHECK(hamiltonian.rfind("t,H", 0) == 0);

    const std::string outputs = read_file(dir.path / "outputs.csv");
    CHECK(count_lines(outputs) == 201);
    CHECK(outputs.rfind("t,y1,y2", 0) == 0);

    const std::string residuals = read_file(dir.path / "power_residual.csv");
    CHECK(count_lines(residuals) == 201);
    CHECK(residuals.rfind("step,residual", 0) == 0);

    const std::string snapshot = read_file(dir.path / "snapshot_0.1.csv");
    CHECK(snapshot.rfind("element,local_node,z,p,q", 0) == 0);
    CHECK(count_lines(snapshot) == 17); // 8 elements x 2 nodes + header
}

TEST_CASE("paper benchmark run: 6001 Hamiltonian samples, duplicated interface nodes") {
    RunConfig config = parse_config_text(small_run_json);
    config.mesh_n = 50;
    config.T = 1.5;
    config.dt = 2.5e-4;
    config.output_every = 200;
    config.snapshot_times = {0.5, 1.5};
    config.flux = flux_preset("central");
    TempDir dir;
    REQUIRE(cmd_simulate(config, dir.path.string(), false) == 0);

    CHECK(count_lines(read_file(dir.path / "hamiltonian.csv")) == 6002); // header + 6001
    CHECK(count_lines(read_file(dir.path / "outputs.csv")) == 6001);

    // Interface coordinates appear twice, once per adjacent element, with
    // bit-identical text.
    std::istringstream snapshot(read_file(dir.path / "snapshot_1.5.csv"));
    std::string line;
    std::getline(snapshot, line); // header
    std::vector<std::string> z_column;
    while (std::getline(snapshot, line)) {
        const auto first = line.find(',');
        const auto second = line.find(',', first + 1);
        const auto third = line.find(',', second + 1);
        z_column.push_back(line.substr(second + 1, third - second - 1));
    }
    REQUIRE(z_column.size() == 100); // 50 elements x 2 nodes
    for (std::size_t e = 0; e + 1 < 50; ++e)
        CHECK(z_column[2 * e + 1] == z_column[2 * e + 2]);
}

TEST_CASE("degenerate run T=0 leaves only the initial sample") {
    RunConfig config = parse_config_text(small_run_json);
    config.T = 0.0;
    config.snapshot_times = {0.0};
    TempDir dir;
    REQUIRE(cmd_simulate(config, dir.path.string(), false) == 0);
    CHECK(count_lines(read_file(dir.path / "hamiltonian.csv")) == 2);
    CHECK(count_lines(read_file(dir.path / "outputs.csv")) == 1);
    CHECK(count_lines(read_file(dir.path / "power_residual.csv")) == 1);
}

TEST_CASE("two runs produce byte-identical outputs") {
    const RunConfig config = parse_config_text(small_run_json);
    TempDir first;
    TempDir second;
    REQUIRE(cmd_simulate(config, first.path.string(), false) == 0);
    REQUIRE(cmd_simulate(config, second.path.string(), false) == 0);
    for (const char* name :
         {"hamiltonian.csv", "outputs.csv", "power_residual.csv", "snapshot_0.1.csv"})
        CHECK(read_file(first.path / name) == read_file(second.path / name));
}

TEST_CASE("matrix dump round-trips against the assembled operators") {
    const RunConfig config = parse_config_text(small_run_json);
    TempDir dir;
    REQUIRE(cmd_simulate(config, dir.path.string(), true) == 0);

    const GlobalPHModel model = config.build_model();
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> value(-1.0, 1.0);
    Eigen::VectorXd probe(model.n_dof);
    for (int i = 0; i < model.n_dof; ++i)
        probe[i] = value(rng);

    const auto check_matrix = [&](const char* name, const Eigen::SparseMatrix<double>& ref) {
        const Eigen::SparseMatrix<double> loaded = read_triplets(
            (dir.path / name).string(), static_cast<int>(ref.rows()),
            static_cast<int>(ref.cols()));
        const Eigen::VectorXd x = probe.head(ref.cols());
        const Eigen::VectorXd expect = ref * x;
        const Eigen::VectorXd got = loaded * x;
        const double scale = std::max(expect.cwiseAbs().maxCoeff(), 1e-30);
        CHECK((expect - got).cwiseAbs().maxCoeff() <= 1e-15 * scale);
    };
    check_matrix("M.txt", model.M);
    check_matrix("J.txt", model.J);
    check_matrix("R.txt", model.R);
    check_matrix("G.txt", model.G);
    check_matrix("Q.txt", model.Q);
}

TEST_CASE("spectrum command") {
    const RunConfig config = parse_config_text(small_run_json);
    TempDir dir;
    REQUIRE(cmd_spectrum(config, dir.path.string(), "full") == 0);

    const std::string eigenvalues = read_file(dir.path / "eigenvalues.csv");
    CHECK(count_lines(eigenvalues) == 33); // header + 2 * 8 * 2 eigenvalues
    CHECK(eigenvalues.rfind("re,im", 0) == 0);

    const std::string summary = read_file(dir.path / "spectrum_summary.txt");
    CHECK(summary.find("classification: dissipative") != std::string::npos);
    CHECK(summary.find("operator: Minv(J-R)Q") != std::string::npos);

    REQUIRE(cmd_spectrum(config, dir.path.string(), "structure-only") == 0);
    const std::string structure = read_file(dir.path / "spectrum_summary.txt");
    CHECK(structure.find("operator: MinvJ") != std::string::npos);
    CHECK(structure.find("classification: conservative") != std::string::npos);

    CHECK_THROWS_AS(cmd_spectrum(config, dir.path.string(), "sideways"), ConfigError);
}

TEST_CASE("check command") {
    const RunConfig config = parse_config_text(small_run_json);
    std::ostringstream out;
    CHECK(cmd_check(config, out) == 0);
    CHECK(out.str().find("PASS") != std::string::npos);
    CHECK(out.str().find("all checks passed") != std::string::npos);

    RunConfig conservative = config;
    conservative.flux = flux_preset("central");
    std::ostringstream out2;
    CHECK(cmd_check(conservative, out2) == 0);
    CHECK(out2.str().find("conservative") != std::string::npos);
}
