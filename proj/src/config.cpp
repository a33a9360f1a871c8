// SPDX-License-Identifier: Apache-2.0
#include "semicop/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace semicop {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& label, const std::string& path,
                       const std::string& msg) {
  throw config_error(label + ": " + path + ": " + msg);
}

double number_at(const json& params, const std::string& label, const std::string& path,
                 const char* key) {
  const auto it = params.find(key);
  if (it == params.end()) fail(label, path + "." + key, "missing");
  if (!it->is_number()) fail(label, path + "." + key, "must be a number");
  return it->get<double>();
}

double unit_at(const json& params, const std::string& label, const std::string& path,
               const char* key) {
  const double x = number_at(params, label, path, key);
  if (!(x >= 0.0 && x <= 1.0)) fail(label, path + "." + key, "must be in [0, 1]");
  return x;
}

std::vector<double> numbers_at(const json& params, const std::string& label,
                               const std::string& path, const char* key) {
  const auto it = params.find(key);
  if (it == params.end()) fail(label, path + "." + key, "missing");
  if (!it->is_array()) fail(label, path + "." + key, "must be an array");
  std::vector<double> out;
  out.reserve(it->size());
  for (std::size_t i = 0; i < it->size(); ++i) {
    const json& e = (*it)[i];
    if (!e.is_number())
      fail(label, path + "." + key + "[" + std::to_string(i) + "]", "must be a number");
    out.push_back(e.get<double>());
  }
  return out;
}

Diagonal from_json(const json& j, const std::string& label, const std::string& path) {
  if (!j.is_object()) fail(label, path, "must be an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "kind" && key != "params") fail(label, path + "." + key, "unknown key");
  }
  const auto kind_it = j.find("kind");
  if (kind_it == j.end()) fail(label, path + ".kind", "missing");
  if (!kind_it->is_string()) fail(label, path + ".kind", "must be a string");
  const std::string kind = kind_it->get<std::string>();

  static const json empty = json::object();
  const json& params = j.contains("params") ? j.at("params") : empty;
  if (!params.is_object()) fail(label, path + ".params", "must be an object");
  const std::string ppath = path + ".params";

  if (kind == "ua") return Diagonal::ua(unit_at(params, label, ppath, "a"));
  if (kind == "la") return Diagonal::la(unit_at(params, label, ppath, "a"));
  if (kind == "power") {
    const double p = number_at(params, label, ppath, "p");
    if (!(p >= 1.0 && p <= 2.0)) fail(label, ppath + ".p", "must be in [1, 2]");
    return Diagonal::power(p);
  }
  if (kind == "frechet") return Diagonal::frechet(unit_at(params, label, ppath, "alpha"));
  if (kind == "example23") return Diagonal::example23();
  if (kind == "mo_product")
    return Diagonal::mo_product(unit_at(params, label, ppath, "alpha"),
                                unit_at(params, label, ppath, "beta"));
  if (kind == "piecewise") {
    auto knots = numbers_at(params, label, ppath, "knots");
    auto exponents = numbers_at(params, label, ppath, "exponents");
    try {
      return Diagonal::piecewise_power(std::move(knots), std::move(exponents));
    } catch (const std::domain_error& e) {
      fail(label, ppath, e.what());
    }
  }
  if (kind == "mixture") {
    const auto comp_it = params.find("components");
    if (comp_it == params.end()) fail(label, ppath + ".components", "missing");
    if (!comp_it->is_array()) fail(label, ppath + ".components", "must be an array");
    std::vector<Diagonal> parts;
    parts.reserve(comp_it->size());
    for (std::size_t i = 0; i < comp_it->size(); ++i)
      parts.push_back(
          from_json((*comp_it)[i], label, ppath + ".components[" + std::to_string(i) + "]"));
    auto weights = numbers_at(params, label, ppath, "weights");
    try {
      return Diagonal::mixture_of(std::move(parts), std::move(weights));
    } catch (const std::domain_error& e) {
      fail(label, ppath, e.what());
    }
  }
  fail(label, path + ".kind",
       "unknown kind '" + kind +
           "' (expected ua, la, power, frechet, example23, mo_product, piecewise, mixture)");
}

}  // namespace

Diagonal parse_diagonal(const std::string& text, const std::string& label) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // what() already carries line and column of the syntax error
    throw config_error(label + ": " + e.what());
  }
  return from_json(doc, label, "$");
}

Diagonal load_diagonal(const std::string& spec) {
  std::size_t i = 0;
  while (i < spec.size() && std::isspace(static_cast<unsigned char>(spec[i]))) ++i;
  if (i < spec.size() && spec[i] == '{') return parse_diagonal(spec, "<inline>");

  std::ifstream in(spec, std::ios::binary);
  if (!in) throw config_error(spec + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_diagonal(buf.str(), spec);
}

}  // namespace semicop
