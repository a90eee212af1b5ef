#include "config.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

namespace glmn::app {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw ConfigError("config: " + what); }

std::vector<std::int64_t> coeff_list(const json& v, const std::string& where) {
  if (v.is_number_integer()) return {v.get<std::int64_t>()};
  if (!v.is_array()) bad(where + ": expected an integer or a coefficient list");
  std::vector<std::int64_t> out;
  for (const auto& c : v) {
    if (!c.is_number_integer()) bad(where + ": coefficients must be integers");
    out.push_back(c.get<std::int64_t>());
  }
  return out;
}

std::vector<std::vector<std::int64_t>> weight(const json& v, const std::string& where) {
  if (!v.is_array()) bad(where + ": a weight is a list of coordinates");
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(coeff_list(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    bad(std::string("bad value for '") + key + "'");
  }
}

}  // namespace

ExperimentConfig parse_config(const json& j) {
  if (!j.is_object()) bad("top level must be an object");
  static const std::vector<std::string> keys{"p",     "field_degree", "modulus", "m",     "n",
                                             "chi",   "lambda",       "tasks",   "seed",  "jobs",
                                             "budgets", "gamma_samples", "outside_samples", "random_elements"};
  for (const auto& [k, v] : j.items())
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) bad("unknown key '" + k + "'");

  ExperimentConfig c;
  c.p = get_or<std::uint32_t>(j, "p", 5);
  c.field_degree = get_or<unsigned>(j, "field_degree", 1);
  if (c.field_degree < 1) bad("field_degree must be >= 1");
  if (j.contains("modulus")) c.modulus = get_or<std::vector<std::uint32_t>>(j, "modulus", {});
  if (!j.contains("m") || !j.contains("n")) bad("'m' and 'n' are required");
  c.m = get_or<int>(j, "m", 0);
  c.n = get_or<int>(j, "n", 0);
  if (c.m < 1 || c.n < 1) bad("m and n must be >= 1");

  if (j.contains("chi")) {
    const auto& chi = j.at("chi");
    if (!chi.is_object()) bad("chi must be an object {\"E(i,j)\": value}");
    static const std::regex re(R"(E\((\d+),(\d+)\))");
    for (const auto& [k, v] : chi.items()) {
      if (!std::regex_match(k, re)) bad("chi key '" + k + "' is not of the form E(i,j)");
      c.chi.emplace_back(k, coeff_list(v, "chi." + k));
    }
  }

  if (j.contains("lambda")) {
    const auto& l = j.at("lambda");
    if (l.is_string()) {
      if (l.get<std::string>() != "scan-all-X") bad("lambda string must be \"scan-all-X\"");
    } else if (l.is_object()) {
      if (l.contains("sample")) {
        c.lambda_mode = LambdaMode::Sample;
        c.lambda_sample = get_or<std::size_t>(l, "sample", 0);
        if (!c.lambda_sample) bad("lambda.sample must be positive");
      } else if (l.contains("weights")) {
        c.lambda_mode = LambdaMode::Explicit;
        if (!l.at("weights").is_array() || l.at("weights").empty()) bad("lambda.weights must be a nonempty list");
        for (const auto& w : l.at("weights")) c.lambdas.push_back(weight(w, "lambda.weights"));
      } else {
        bad("lambda object needs 'sample' or 'weights'");
      }
    } else if (l.is_array()) {
      c.lambda_mode = LambdaMode::Explicit;
      c.lambdas.push_back(weight(l, "lambda"));
    } else {
      bad("lambda must be \"scan-all-X\", a coordinate list, or an object");
    }
    for (const auto& w : c.lambdas)
      if (w.size() != static_cast<std::size_t>(c.m + c.n)) bad("lambda has the wrong number of coordinates");
  }

  if (!j.contains("tasks") || !j.at("tasks").is_array() || j.at("tasks").empty()) bad("'tasks' must be a nonempty list");
  for (const auto& t : j.at("tasks")) {
    if (!t.is_string()) bad("task names are strings");
    const auto name = t.get<std::string>();
    if (std::find(known_tasks().begin(), known_tasks().end(), name) == known_tasks().end()) bad("unknown task '" + name + "'");
    if (std::find(c.tasks.begin(), c.tasks.end(), name) == c.tasks.end()) c.tasks.push_back(name);
  }
  c.seed = get_or<std::uint64_t>(j, "seed", 0);
  c.jobs = get_or<unsigned>(j, "jobs", 1);
  if (c.jobs < 1) bad("jobs must be >= 1");
  if (j.contains("budgets")) {
    const auto& b = j.at("budgets");
    if (!b.is_object()) bad("budgets must be an object");
    c.dim_budget = get_or<std::uint64_t>(b, "dim_budget", c.dim_budget);
    c.line_budget = get_or<std::uint64_t>(b, "line_budget", c.line_budget);
  }
  c.gamma_samples = get_or<std::size_t>(j, "gamma_samples", c.gamma_samples);
  c.outside_samples = get_or<std::size_t>(j, "outside_samples", c.outside_samples);
  c.random_elements = get_or<std::size_t>(j, "random_elements", c.random_elements);
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return parse_config(j);
}

nlohmann::ordered_json config_echo(const ExperimentConfig& c) {
  nlohmann::ordered_json j;
  j["m"] = c.m;
  j["n"] = c.n;
  j["p"] = c.p;
  j["field_degree"] = c.field_degree;
  auto chi = nlohmann::ordered_json::object();
  for (const auto& [k, v] : c.chi) chi[k] = v;
  j["chi"] = chi;
  switch (c.lambda_mode) {
    case LambdaMode::ScanAll: j["lambda"] = "scan-all-X"; break;
    case LambdaMode::Sample: j["lambda"] = {{"sample", c.lambda_sample}}; break;
    case LambdaMode::Explicit: j["lambda"] = {{"weights", c.lambdas}}; break;
  }
  j["seed"] = c.seed;
  j["dim_budget"] = c.dim_budget;
  j["line_budget"] = c.line_budget;
  return j;
}

}  // namespace glmn::app
