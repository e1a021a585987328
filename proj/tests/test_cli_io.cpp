#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tebeam/config.hpp"
#include "tebeam/io.hpp"
#include "tebeam/runner.hpp"

using namespace tebeam;
namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path temp_dir(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("tebeam-test-" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

RunConfig small_config() {
  RunConfig cfg = RunConfig::defaults();
  cfg.n1 = 6;
  cfg.n2 = 6;
  cfg.time.dt = 1e-2;
  cfg.time.horizon = 0.5;
  cfg.scan.points = 12;
  cfg.scan.lambda_max = 30.0;
  return cfg;
}

}  // namespace

TEST_SUITE_BEGIN("cli_io");

TEST_CASE("config round-trips losslessly through canonical JSON") {
  RunConfig cfg = small_config();
  cfg.params.gamma = -0.75;
  cfg.bc = BcMode::Pinned;
  cfg.scan.ell = 2;
  cfg.initial.displacement = {"matched-spline", {0.3}};
  const std::string canon = to_canonical_json(cfg);
  const RunConfig back = parse_config(canon);
  CHECK(to_canonical_json(back) == canon);
  CHECK(config_hash(back) == config_hash(cfg));
}

TEST_CASE("unknown keys are rejected at any level") {
  CHECK_THROWS_AS(parse_config(R"({"params": {"rho3": 1.0}})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"typo": 1})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"scan": {"lambdaMax": 2.0}})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"initial": {"displacement": {"kind": "x"}}})"), ConfigError);
}

TEST_CASE("malformed JSON and bad values give parse diagnostics") {
  CHECK_THROWS_AS(parse_config("{"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"bc_mode": "welded"})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"scan": {"ell": 3}})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"mesh": {"n1": 2.5}})"), ConfigError);
}

TEST_CASE("config hash separates distinct configs") {
  const RunConfig a = small_config();
  RunConfig b = a;
  b.params.kappa = 2.0;
  CHECK(config_hash(a) != config_hash(b));
  CHECK(config_hash(a).size() == 16);
}

TEST_CASE("numeric formatting is %.17g") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(1.0 / 3.0) == "0.33333333333333331");
  CHECK(format_double(-2.5e-300) == "-2.5e-300");
}

TEST_CASE("MatrixMarket export round-trips") {
  const fs::path dir = temp_dir("mm");
  Eigen::MatrixXd m(2, 3);
  m << 1.5, -2.25, 3.0, 0.0, 1e-13, -7.125;
  const std::string path = (dir / "m.mtx").string();
  write_matrix_market(path, m);
  const Eigen::MatrixXd back = read_matrix_market(path);
  CHECK((back - m).cwiseAbs().maxCoeff() == 0.0);
  const std::string text = read_file(path);
  CHECK(text.rfind("%%MatrixMarket matrix array real general\n", 0) == 0);
  CHECK(text.back() == '\n');
}

TEST_CASE("simulate command writes a non-increasing energy column") {
  const fs::path dir = temp_dir("sim");
  const RunConfig cfg = small_config();
  std::ostringstream log;
  const int status = run_command("simulate", cfg, {dir.string(), 1, true}, log);
  REQUIRE(status == 0);

  const fs::path csv = dir / ("simulate-" + config_hash(cfg) + ".csv");
  REQUIRE(fs::exists(csv));
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "t,E,dissipation_mid,balance_residual");
  double prev = -1.0;
  bool first = true;
  double e0 = 0.0;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    double t, e;
    char comma;
    row >> t >> comma >> e;
    if (first) {
      e0 = e;
      first = false;
    } else {
      CHECK(e <= prev + 1e-10 * e0);
    }
    prev = e;
  }
}

TEST_CASE("spectrum command with gamma = 0 reports imaginary beam modes") {
  const fs::path dir = temp_dir("spec");
  RunConfig cfg = small_config();
  cfg.params.gamma = 0.0;
  std::ostringstream log;
  REQUIRE(run_command("spectrum", cfg, {dir.string(), 1, true}, log) == 0);

  const fs::path csv = dir / ("spectrum-" + config_hash(cfg) + ".csv");
  std::ifstream in(csv);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::istringstream row(line);
    double re, im;
    char comma;
    row >> re >> comma >> im;
    if (std::abs(im) > 1e-8) {
      CHECK(std::abs(re) <= 1e-8 * std::max(1.0, std::abs(im)));  // beam mode
    } else {
      CHECK(re <= 1e-12);  // heat mode
    }
  }
}

TEST_CASE("identical configs produce byte-identical artifacts") {
  const RunConfig cfg = small_config();
  for (const std::string command : {"simulate", "spectrum", "resolvent"}) {
    const fs::path dir_a = temp_dir(command + "-a");
    const fs::path dir_b = temp_dir(command + "-b");
    std::ostringstream log;
    REQUIRE(run_command(command, cfg, {dir_a.string(), 1, true}, log) == 0);
    REQUIRE(run_command(command, cfg, {dir_b.string(), 2, true}, log) == 0);
    const fs::path name = command + "-" + config_hash(cfg) + ".csv";
    CHECK(read_file(dir_a / name) == read_file(dir_b / name));
  }
}

TEST_CASE("invalid configs exit with status 1") {
  RunConfig cfg = small_config();
  cfg.params.kappa = -1.0;
  std::ostringstream log;
  CHECK(run_command("simulate", cfg, {temp_dir("bad").string(), 1, true}, log) == 1);
  CHECK(log.str().find("kappa") != std::string::npos);

  RunConfig bad_mesh = small_config();
  bad_mesh.n1 = 1;
  CHECK(run_command("simulate", bad_mesh, {temp_dir("badm").string(), 1, true}, log) == 1);

  std::ostringstream log2;
  CHECK(run_command("frobnicate", small_config(), {temp_dir("cmd").string(), 1, true}, log2) == 1);
}

TEST_CASE("gamma = 0 prints a warning but still runs") {
  RunConfig cfg = small_config();
  cfg.params.gamma = 0.0;
  cfg.initial.temperature = {"zero", {}};
  std::ostringstream log;
  const int status = run_command("simulate", cfg, {temp_dir("warn").string(), 1, false}, log);
  CHECK(status == 0);
  CHECK(log.str().find("warning") != std::string::npos);
}

TEST_CASE("report command emits a JSON document with checks") {
  const fs::path dir = temp_dir("rep");
  RunConfig cfg = small_config();
  cfg.time.horizon = 2.0;
  cfg.time.sample_every = 2;
  std::ostringstream log;
  REQUIRE(run_command("report", cfg, {dir.string(), 2, true}, log) == 0);
  const std::string text = read_file(dir / ("report-" + config_hash(cfg) + ".json"));
  CHECK(text.find("\"config_hash\"") != std::string::npos);
  CHECK(text.find("\"checks\"") != std::string::npos);
  CHECK(text.find("pre-asymptotic") != std::string::npos);
}

TEST_CASE("export-matrices writes readable MatrixMarket files") {
  const fs::path dir = temp_dir("mtx");
  const RunConfig cfg = small_config();
  std::ostringstream log;
  REQUIRE(run_command("export-matrices", cfg, {dir.string(), 1, true}, log) == 0);
  const std::string hash = config_hash(cfg);
  for (const char* name : {"-beam-mass", "-beam-stiffness", "-heat-mass", "-heat-stiffness",
                           "-coupling"}) {
    const fs::path p = dir / ("export-matrices-" + hash + name + ".mtx");
    REQUIRE(fs::exists(p));
    CHECK(read_matrix_market(p.string()).size() > 0);
  }
}

TEST_SUITE_END();
