#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "common.hpp"
#include "conjp/cli.hpp"
#include "conjp/expr.hpp"
#include "conjp/io.hpp"
#include "conjp/sampling.hpp"
#include "json.hpp"

using namespace conjp;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "conjp_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string write_file(const std::string& name, const std::string& text) {
  const fs::path p = scratch(name);
  std::ofstream(p) << text;
  return p.string();
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("test command exit codes") {
  const std::string json = scratch("conj.json").string();
  Run r = cli({"test", "--phi", "conj(z)", "--json", json});
  CHECK(r.code == kExitNotExtends);
  const nlohmann::json rep = read_json(json);
  CHECK(rep["schema_version"] == kReportSchemaVersion);
  CHECK(rep["verdict"] == "NOT_EXTENDS");
  CHECK(rep["witness"]["g"] == "z");

  CHECK(cli({"test", "--phi", "z^2"}).code == kExitOk);
  CHECK(cli({"test", "--phi", "zpow 2", "--nodes", "128", "--degree", "24"}).code == kExitOk);
}

TEST_CASE("noisy samples are inconclusive") {
  const BoundaryGrid g(make_annulus(0.5), 256);
  BoundarySamples s = sample_boundary(parse_expr("z^2"), g);
  Rng rng(99);
  for (auto& v : s.values) v += 1e-5 * Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
  std::ofstream f(scratch("noisy.csv"));
  write_samples_csv(f, g, s);
  f.close();
  CHECK(cli({"test", "--phi-samples", scratch("noisy.csv").string()}).code == kExitInconclusive);
  // grid mismatch against the file
  CHECK(cli({"test", "--phi-samples", scratch("noisy.csv").string(), "--nodes", "128"}).code == kExitFailure);
}

TEST_CASE("configuration errors") {
  Run r = cli({"test", "--phi", "z", "--tol-accept", "1e-3", "--tol-reject", "1e-6"});
  CHECK(r.code == kExitFailure);
  CHECK(r.err.find("ConfigInvalid") != std::string::npos);
  CHECK(cli({"test"}).code == kExitFailure);
  CHECK(cli({"test", "--phi", "z", "--phi-samples", "x.csv"}).code == kExitFailure);
  CHECK(cli({"test", "--phi", "z", "--nodes", "63"}).code == kExitFailure);
  CHECK(cli({"test", "--phi", "z +* 2"}).code == kExitFailure);
  CHECK(cli({"bogus"}).code == kExitFailure);

  const std::string simple = write_file("disc.json", R"({"outer":{"center":[0,0],"radius":1},"holes":[]})");
  r = cli({"verify", "--domain", simple});
  CHECK(r.code == kExitFailure);
  CHECK(r.err.find("TooFewBoundaryComponents") != std::string::npos);
}

TEST_CASE("verify on the annulus") {
  const std::string json = scratch("verify.json").string();
  CHECK(cli({"verify", "--json", json}).code == kExitOk);
  const nlohmann::json rep = read_json(json);
  CHECK(rep["pass"] == true);
  CHECK(rep["seed"] == 20061017);
  bool found = false;
  for (const auto& c : rep["checks"])
    if (c["name"] == "counterexample_conj_z") {
      found = true;
      CHECK(c["metrics"]["n1_period"].get<double>() == doctest::Approx(6.79854021274).epsilon(1e-10));
    }
  CHECK(found);
}

TEST_CASE("solve and kernels") {
  Run r = cli({"solve", "--phi", "re(z*conj(z))"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("6.798540213") != std::string::npos);

  const std::string dom = write_file("three.json", testing::kThreeConnectedJson);
  const std::string json = scratch("kernels.json").string();
  r = cli({"kernels", "szego", "--domain", dom, "--a", "0.85*exp(i*pi/7)", "--json", json});
  CHECK(r.code == kExitOk);
  const nlohmann::json rep = read_json(json);
  CHECK(rep["szego_zero_count"] == 2);
  CHECK(rep["szego_zero_margins"].size() == 2);
  CHECK(rep["common_zero_margin"].get<double>() > 0.0);
}

TEST_CASE("dump") {
  const std::string a = scratch("dump_a.csv").string(), b = scratch("dump_b.csv").string();
  REQUIRE(cli({"dump", "--phi", "1/z", "--lattice", "50", "--out", a}).code == kExitOk);
  REQUIRE(cli({"dump", "--phi", "1/z", "--lattice", "50", "--out", b}).code == kExitOk);
  std::ifstream fa(a), fb(b);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  CHECK(sa.str() == sb.str());

  std::istringstream in(sa.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "x,y,inside,h_1,h_2,absW_1,phi_re,phi_im");
  int inside = 0, outside = 0;
  while (std::getline(in, line)) {
    std::vector<std::string> cols;
    std::stringstream ls(line);
    for (std::string c; std::getline(ls, c, ',');) cols.push_back(c);
    REQUIRE(cols.size() == 8);
    const Complex z(std::stod(cols[0]), std::stod(cols[1]));
    if (cols[2] == "0") {
      ++outside;
      CHECK(cols[3] == "NA");
      continue;
    }
    ++inside;
    CHECK(std::abs(std::stod(cols[3]) - std::log(std::abs(z)) / std::log(0.5)) < 1e-10);
    CHECK(std::abs(Complex(std::stod(cols[6]), std::stod(cols[7])) - 1.0 / z) < 1e-8);
  }
  CHECK(inside > 0);
  CHECK(outside > 0);
}

TEST_CASE("reports do not depend on the thread count") {
  const std::string a = scratch("t1.json").string(), b = scratch("t4.json").string();
  setenv("CONJP_THREADS", "1", 1);
  cli({"test", "--phi", "conj(z)", "--json", a});
  setenv("CONJP_THREADS", "4", 1);
  cli({"test", "--phi", "conj(z)", "--json", b});
  unsetenv("CONJP_THREADS");
  std::ifstream fa(a), fb(b);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  CHECK(sa.str() == sb.str());
}
