#include "braidkit/cli.hpp"
#include "braidkit/matrix_io.hpp"
#include "support.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

using namespace braidkit;
using braidkit::cli::run_cli;
using std::numbers::pi;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "braidkit_test_cli";
  fs::create_directories(dir);
  return dir / name;
}

} // namespace

TEST_CASE("parse_angle") {
  CHECK(cli::parse_angle("0.5") == 0.5);
  CHECK(cli::parse_angle("-1e-3") == -1e-3);
  CHECK(cli::parse_angle("pi") == pi);
  CHECK(cli::parse_angle("-pi") == -pi);
  CHECK(cli::parse_angle("pi/3") == pi / 3);
  CHECK(cli::parse_angle("2*pi/3") == 2 * pi / 3);
  CHECK(cli::parse_angle(" 0.5*pi ") == 0.5 * pi);
  for (const char* bad : {"", "pie", "2pi", "pi/0", "pi/", "abc", "1..2", "pi*2"})
    CHECK_THROWS_AS(cli::parse_angle(bad), std::invalid_argument);
}

TEST_CASE("parse_grid") {
  const auto g = cli::parse_grid("0:pi:101");
  REQUIRE(g.size() == 101);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == pi);
  CHECK(g[50] == doctest::Approx(pi / 2).epsilon(1e-15));
  CHECK(cli::parse_grid("1:2:1") == std::vector<double>{1.0});
  for (const char* bad : {"0:1", "0:1:0", "0:1:2.5", "0:1:x", "a:1:3", "0:1:3:4"})
    CHECK_THROWS_AS(cli::parse_grid(bad), std::invalid_argument);
}

TEST_CASE("parse_complex") {
  CHECK(cli::parse_complex("1.5") == Complex(1.5, 0.0));
  CHECK(cli::parse_complex("0.5,-2") == Complex(0.5, -2.0));
  CHECK_THROWS_AS(cli::parse_complex("1,i"), std::invalid_argument);
}

TEST_CASE("verify") {
  const auto ok = run({"verify", "--catalog", "s9", "--phi1", "0", "--phi2", "0"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("braid relation PASS") != std::string::npos);
  CHECK(ok.out.find("kappa (S^2=kS)      3 + 0i") != std::string::npos);

  test::Rng rng(91);
  const auto path = scratch("not_a_braid.json");
  save_matrix(test::random_matrix(rng, 9, 9), path);
  const auto bad = run({"verify", "--input", path.string()});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("braid residual") != std::string::npos);
  CHECK(bad.out.find("braid relation FAIL") != std::string::npos);

  save_matrix(identity(3), scratch("id3.json"));
  CHECK(run({"verify", "--input", scratch("id3.json").string()}).code == 2);
  CHECK(run({"verify", "--catalog", "a3"}).code == 2);
  CHECK(run({"verify", "--catalog", "nope"}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "--catalog", "s9", "--input", "x.json"}).code == 2);
  CHECK(run({"verify", "--input", scratch("missing.json").string()}).code == 2);
}

TEST_CASE("construct and combine") {
  const auto out = scratch("swap.json");
  const auto r = run({"construct", "--a", "c3", "--b", "c3", "--out", out.string()});
  CHECK(r.code == 0);
  ComplexMatrix swap9 = ComplexMatrix::Zero(9, 9);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) swap9(3 * a + b, 3 * b + a) = 1.0;
  CHECK(load_matrix(out) == swap9);

  CHECK(run({"construct", "--a", "a3", "--b", "b3", "--phi1", "0.4"}).code == 0);
  test::Rng rng(5);
  save_matrix(test::random_matrix(rng, 3, 3), scratch("r3.json"));
  CHECK(run({"construct", "--a", "a3", "--b", scratch("r3.json").string()}).code == 1);
  CHECK(run({"construct", "--a", "a3", "--b", "a2"}).code == 2);
  CHECK(run({"construct", "--a", "a3"}).code == 2);

  const auto c = run({"combine", "--term", "a3,b3", "--term", "b3,a3", "--term", "c3,c3,1,0", "--phi1", "0.3",
                      "--out", scratch("s9.json").string()});
  CHECK(c.code == 0);
  CHECK(run({"verify", "--input", scratch("s9.json").string()}).code == 0);

  const auto nc = run({"combine", "--term", "a3," + scratch("r3.json").string()});
  CHECK(nc.code == 1);
  CHECK(nc.err.find("does not commute") != std::string::npos);
  CHECK(run({"combine", "--unchecked", "--term", "a3," + scratch("r3.json").string()}).code == 0);
  CHECK(run({"combine", "--term", "a3"}).code == 2);
  CHECK(run({"combine", "--term", "a3,b3,x"}).code == 2);
}

TEST_CASE("yb") {
  const auto r = run({"yb", "--catalog", "s9", "--theta", "0.7", "--y", "0.9553,0.2955"});
  CHECK(r.code == 0);
  CHECK(r.out.find("YBE residual") != std::string::npos);
  CHECK(run({"yb", "--catalog", "s9", "--x", "1.7", "--y", "0.4"}).code == 0);
  CHECK(run({"yb", "--catalog", "swap-3", "--theta", "0.5"}).code == 1);
  CHECK(run({"yb", "--catalog", "s9"}).code == 2);
  CHECK(run({"yb", "--catalog", "s9", "--x", "0"}).code == 2);
  CHECK(run({"yb", "--catalog", "s9", "--x", "1", "--theta", "1"}).code == 2);

  const auto path = scratch("r.json");
  CHECK(run({"yb", "--catalog", "s9", "--x", "1", "--out", path.string()}).code == 0);
  CHECK(max_abs_diff(load_matrix(path), identity(9)) < 1e-15);
}

TEST_CASE("sweep") {
  const auto path = scratch("sweep.csv");
  const auto r = run({"sweep", "--grid", "0:pi:101", "--phi1", "0.4", "--phi2", "1.1", "--out", path.string()});
  CHECK(r.code == 0);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "theta,c_closed,c00,c01,c02,c10,c11,c12,c20,c21,c22,max_abs_diff");
  in.seekg(0);
  const auto rows = read_sweep_csv(in);
  REQUIRE(rows.size() == 101);
  for (const auto& row : rows) CHECK(row.max_abs_diff < 1e-9);

  const auto stdout_run = run({"sweep", "--grid", "0:1:3"});
  CHECK(stdout_run.code == 0);
  CHECK(stdout_run.out.rfind("theta,c_closed,", 0) == 0);

  CHECK(run({"sweep", "--grid", "0:pi"}).code == 2);
  CHECK(run({"sweep"}).code == 2);
  CHECK(run({"sweep", "--grid", "0:pi:5", "--tol", "-1"}).code == 1);
}

TEST_CASE("su3 and catalog") {
  CHECK(run({"su3"}).code == 0);
  CHECK(run({"su3", "--convention", "standard"}).code == 1);
  CHECK(run({"su3", "--convention", "other"}).code == 2);
  CHECK(run({"su3", "--samples", "0"}).code == 2);

  const auto list = run({"catalog"});
  CHECK(list.code == 0);
  CHECK(list.out.find("s9") != std::string::npos);
  CHECK(run({"catalog", "--check", "--phi1", "1.0", "--phi2", "-0.5"}).code == 0);
  CHECK(run({"catalog", "--catalog", "a3", "--check"}).code == 0);
  const auto print = run({"catalog", "--catalog", "swap-2"});
  CHECK(print.code == 0);
  CHECK(parse_matrix(print.out).rows() == 4);
  CHECK(run({"catalog", "--catalog", "nope"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  const auto unknown = run({"frobnicate"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("Usage") != std::string::npos);
  CHECK(run({"verify", "--bogus"}).code == 2);
  CHECK(run({"verify", "--catalog", "s9", "--tol", "abc"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
