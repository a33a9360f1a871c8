// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "semicop/config.hpp"
#include "semicop/diagonal.hpp"

using semicop::config_error;
using semicop::Diagonal;
using semicop::load_diagonal;
using semicop::parse_diagonal;

namespace {

void check_same_function(const Diagonal& got, const Diagonal& want) {
  for (int i = 0; i <= 40; ++i) {
    const double t = i / 40.0;
    CHECK(got.value(t) == doctest::Approx(want.value(t)).epsilon(1e-15));
  }
}

std::string error_of(const std::string& text) {
  try {
    parse_diagonal(text, "cfg");
    return "";
  } catch (const config_error& e) {
    return e.what();
  }
}

}  // namespace

TEST_SUITE("config") {

TEST_CASE("every kind parses") {
  check_same_function(parse_diagonal(R"({"kind":"ua","params":{"a":0.5}})", "t"),
                      Diagonal::ua(0.5));
  check_same_function(parse_diagonal(R"({"kind":"la","params":{"a":0.8}})", "t"),
                      Diagonal::la(0.8));
  check_same_function(parse_diagonal(R"({"kind":"power","params":{"p":1.5}})", "t"),
                      Diagonal::power(1.5));
  check_same_function(parse_diagonal(R"({"kind":"frechet","params":{"alpha":0.25}})", "t"),
                      Diagonal::frechet(0.25));
  check_same_function(parse_diagonal(R"({"kind":"example23"})", "t"), Diagonal::example23());
  check_same_function(
      parse_diagonal(R"({"kind":"mo_product","params":{"alpha":0.7,"beta":0.4}})", "t"),
      Diagonal::mo_product(0.7, 0.4));
  check_same_function(
      parse_diagonal(
          R"({"kind":"piecewise","params":{"knots":[0,0.3,0.7,1],"exponents":[1.7,1.2,1.9]}})",
          "t"),
      Diagonal::piecewise_power({0.0, 0.3, 0.7, 1.0}, {1.7, 1.2, 1.9}));
}

TEST_CASE("nested mixtures") {
  const std::string text = R"({
    "kind": "mixture",
    "params": {
      "components": [
        {"kind": "ua", "params": {"a": 0.5}},
        {"kind": "mixture", "params": {
          "components": [
            {"kind": "power", "params": {"p": 1.5}},
            {"kind": "frechet", "params": {"alpha": 0.2}}
          ],
          "weights": [0.5, 0.5]
        }}
      ],
      "weights": [0.25, 0.75]
    }
  })";
  const Diagonal inner =
      semicop::mix({Diagonal::power(1.5), Diagonal::frechet(0.2)}, {0.5, 0.5});
  const Diagonal want = semicop::mix({Diagonal::ua(0.5), inner}, {0.25, 0.75});
  check_same_function(parse_diagonal(text, "t"), want);
}

TEST_CASE("semantic errors carry JSON paths") {
  CHECK(error_of(R"({"params":{}})").find("$.kind: missing") != std::string::npos);
  CHECK(error_of(R"({"kind":"ua","params":{"a":1.5}})").find("$.params.a: must be in [0, 1]") !=
        std::string::npos);
  CHECK(error_of(R"({"kind":"ua","params":{}})").find("$.params.a: missing") !=
        std::string::npos);
  CHECK(error_of(R"({"kind":"warp"})").find("unknown kind") != std::string::npos);
  CHECK(error_of(R"({"kind":"ua","params":{"a":0.2},"extra":1})").find("$.extra: unknown key") !=
        std::string::npos);
  CHECK(error_of(R"({"kind":"power","params":{"p":"big"}})")
            .find("$.params.p: must be a number") != std::string::npos);

  const std::string bad_component = R"({
    "kind": "mixture",
    "params": {
      "components": [{"kind": "ua", "params": {"a": 0.5}}, {"kind": "ua", "params": {}}],
      "weights": [0.5, 0.5]
    }
  })";
  CHECK(error_of(bad_component).find("$.params.components[1].params.a: missing") !=
        std::string::npos);

  const std::string bad_weights = R"({
    "kind": "mixture",
    "params": {
      "components": [{"kind": "ua", "params": {"a": 0.5}}],
      "weights": [0.5]
    }
  })";
  CHECK(error_of(bad_weights).find("weights must sum to 1") != std::string::npos);

  CHECK(error_of(R"({"kind":"piecewise","params":{"knots":[0.1,1],"exponents":[1.5]}})")
            .find("knots must start at 0") != std::string::npos);
}

TEST_CASE("syntax errors carry line numbers") {
  const std::string eaten_comma = "{\n  \"kind\": \"ua\"\n  \"params\": {\"a\": 0.5}\n}";
  const std::string msg = error_of(eaten_comma);
  CHECK(msg.find("cfg: ") == 0);
  CHECK(msg.find("line 3") != std::string::npos);
}

TEST_CASE("file and inline specs agree") {
  const std::string text = R"({"kind":"power","params":{"p":1.3}})";
  const std::string path = "config_roundtrip_tmp.json";
  {
    std::ofstream f(path);
    f << text;
  }
  check_same_function(load_diagonal(path), load_diagonal(text));
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_diagonal("no_such_file.json"), config_error);
  CHECK_THROWS_WITH_AS(load_diagonal("no_such_file.json"),
                       "no_such_file.json: cannot open", config_error);
}

}  // TEST_SUITE
