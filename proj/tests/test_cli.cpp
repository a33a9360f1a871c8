// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "semicop/cli.hpp"

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliResult r;
  r.code = semicop::run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::size_t line_count(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("measures golden line") {
  const CliResult r = run({"measures", "--family", "ua", "--a", "0.5"});
  CHECK(r.code == 0);
  CHECK(r.out == "tau=0.75 rho=0.875 phi=0.75 xi=0.75\n");
  CHECK(r.err.empty());

  const CliResult p = run({"measures", "--family", "power", "--p", "1.5"});
  CHECK(p.out == "tau=0.333333 rho=0.428571 phi=0.4 xi=0.166667\n");
}

TEST_CASE("measures accepts an inline JSON diagonal") {
  const CliResult r =
      run({"measures", "--diagonal", R"json({"kind":"ua","params":{"a":0.5}})json"});
  CHECK(r.code == 0);
  CHECK(r.out == "tau=0.75 rho=0.875 phi=0.75 xi=0.75\n");
}

TEST_CASE("measures route options") {
  const CliResult markov = run({"measures", "--family", "ua", "--a", "0.5", "--route", "markov"});
  CHECK(markov.code == 0);
  CHECK(markov.out == "tau=0.75 rho=0.875 phi=0.75 xi=0.75\n");

  const CliResult both =
      run({"measures", "--family", "frechet", "--alpha", "0.3", "--route", "both"});
  CHECK(both.code == 0);
  CHECK(line_count(both.out) == 2);
  const auto pos = both.out.find("gap=");
  REQUIRE(pos != std::string::npos);
  CHECK(std::abs(std::stod(both.out.substr(pos + 4))) <= 1e-6);
  CHECK(both.out.find("xi_closed=") != std::string::npos);
  CHECK(both.out.find("xi_markov=") != std::string::npos);
}

TEST_CASE("validate reports pass") {
  const CliResult r = run({"validate", "--family", "example23"});
  CHECK(r.code == 0);
  CHECK(r.out == "pass\n");

  const CliResult p = run({"validate", "--diagonal",
                           R"json({"kind":"piecewise","params":
                             {"knots":[0,0.3,0.7,1],"exponents":[1.7,1.2,1.9]}})json",
                           "--grid", "500"});
  CHECK(p.code == 0);
  CHECK(p.out == "pass\n");
}

TEST_CASE("region with explicit coordinates") {
  const CliResult outside =
      run({"region", "--pair", "tau_xi", "--x", "0.428571428571", "--y", "0.25"});
  CHECK(outside.code == 1);
  CHECK(outside.out.substr(0, 20) == "outside pair=tau_xi ");

  const CliResult inside =
      run({"region", "--pair", "tau_xi", "--x", "0.428571428571", "--y", "0.3"});
  CHECK(inside.code == 0);
  CHECK(inside.out.substr(0, 7) == "inside ");
}

TEST_CASE("region locates a diagonal on the boundary with slack") {
  // l_{1/2} sits exactly on the upper tau-phi curve; the default zero slack
  // would make the verdict hostage to rounding.
  const CliResult r = run({"region", "--pair", "tau_phi", "--family", "la", "--a", "0.5",
                           "--slack", "1e-9"});
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, 7) == "inside ");
}

TEST_CASE("area output") {
  const CliResult r = run({"area", "--pair", "tau_phi"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("analytic=0.071428571428571", 0) == 0);
  CHECK(r.out.find("numeric=0.0714285714") != std::string::npos);
}

TEST_CASE("simulate is deterministic") {
  const std::vector<std::string> args = {"simulate", "--n", "20", "--seed", "7"};
  const CliResult a = run(args);
  const CliResult b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == "points=20 violations=0\n");
  CHECK(a.out == b.out);
}

TEST_CASE("simulate writes the cloud csv") {
  const std::string path = "cli_cloud_tmp.csv";
  const CliResult r = run({"simulate", "--n", "10", "--seed", "3", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out == "points=10 violations=0\ncsv=" + path + "\n");
  const std::string csv = slurp(path);
  CHECK(line_count(csv) == 11);
  CHECK(csv.rfind("tau,rho,phi,xi\n", 0) == 0);
  std::remove(path.c_str());
}

TEST_CASE("sample streams or writes identical csv") {
  const std::vector<std::string> args = {"sample", "--family", "example23",
                                         "--n", "5", "--seed", "11"};
  const CliResult a = run(args);
  const CliResult b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("u,v\n", 0) == 0);
  CHECK(line_count(a.out) == 6);

  const std::string path = "cli_sample_tmp.csv";
  std::vector<std::string> file_args = args;
  file_args.insert(file_args.end(), {"--out", path});
  const CliResult f = run(file_args);
  CHECK(f.code == 0);
  CHECK(f.out == "csv=" + path + " n=5\n");
  CHECK(slurp(path) == a.out);
  std::remove(path.c_str());
}

TEST_CASE("boundary table") {
  const CliResult r = run({"boundary", "--pair", "tau_rho", "--grid", "11"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("x,lower,upper\n", 0) == 0);
  CHECK(line_count(r.out) == 12);
  CHECK(r.out.find("\n1,1,1\n") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"area"}).code == 2);
  CHECK(run({"measures", "--family", "ua", "--a", "0.5", "--route", "fast"}).code == 2);
  CHECK(run({"region", "--pair", "tau_rho", "--x", "0.5"}).code == 2);

  const CliResult no_diag = run({"measures"});
  CHECK(no_diag.code == 2);
  CHECK(no_diag.err.find("no diagonal given") != std::string::npos);

  const CliResult bad_json = run({"measures", "--diagonal", R"json({"kind":"warp"})json"});
  CHECK(bad_json.code == 2);
  CHECK(bad_json.err.find("unknown kind") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
  const CliResult top = run({"--help"});
  CHECK(top.code == 0);
  CHECK(top.out.find("Usage") != std::string::npos);

  const CliResult sub = run({"measures", "--help"});
  CHECK(sub.code == 0);
  CHECK(sub.out.find("--route") != std::string::npos);
}

}  // TEST_SUITE
