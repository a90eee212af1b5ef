#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "config.hpp"
#include "report.hpp"
#include "tasks.hpp"

namespace fs = std::filesystem;
using namespace glmn::app;
using nlohmann::json;

namespace {

std::string cli() {
  const char* p = std::getenv("GLMN_CLI");
  REQUIRE_MESSAGE(p, "GLMN_CLI not set");
  return p;
}

std::string configs() {
  const char* p = std::getenv("GLMN_CONFIGS");
  REQUIRE_MESSAGE(p, "GLMN_CONFIGS not set");
  return p;
}

fs::path scratch(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("glmn_cli_test_" + std::to_string(::getpid())) / name;
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

int run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" + cli() + "' " + args + " >/dev/null 2>&1";
  const int st = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(st));
  return WEXITSTATUS(st);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path write_config(const fs::path& dir, const std::string& text) {
  const fs::path p = dir / "config.json";
  std::ofstream(p) << text;
  return p;
}

void expect_config_error(const std::string& text) {
  CAPTURE(text);
  CHECK_THROWS_AS(parse_config(json::parse(text)), ConfigError);
}

}  // namespace

TEST_CASE("config parsing") {
  const auto c = parse_config(json::parse(
      R"j({"p":3,"field_degree":2,"m":2,"n":1,"chi":{"E(1,1)":[1,1]},"lambda":{"sample":4},
          "tasks":["verma-scan"],"seed":9,"budgets":{"dim_budget":50}})j"));
  CHECK(c.p == 3);
  CHECK(c.field_degree == 2);
  CHECK(c.m == 2);
  CHECK(c.lambda_mode == LambdaMode::Sample);
  CHECK(c.lambda_sample == 4);
  CHECK(c.seed == 9);
  CHECK(c.dim_budget == 50);
  CHECK(c.line_budget == 10000);
  REQUIRE(c.chi.size() == 1);
  CHECK(c.chi[0].first == "E(1,1)");

  expect_config_error(R"j({"p":5,"m":1,"n":1,"tasks":["verma-scan"],"bogus":1})j");
  expect_config_error(R"j({"p":5,"m":1,"tasks":["verma-scan"]})j");
  expect_config_error(R"j({"p":5,"m":1,"n":1,"tasks":[]})j");
  expect_config_error(R"j({"p":5,"m":1,"n":1,"tasks":["no-such-task"]})j");
  expect_config_error(R"j({"p":5,"m":1,"n":1,"tasks":["verma-scan"],"lambda":"everything"})j");
  expect_config_error(R"j({"p":5,"m":1,"n":1,"tasks":["verma-scan"],"lambda":{"weights":[]}})j");
  expect_config_error(R"j({"p":"five","m":1,"n":1,"tasks":["verma-scan"]})j");
}

TEST_CASE("settings reject bad algebra input") {
  auto bad_setting = [](const std::string& text) {
    CAPTURE(text);
    CHECK_THROWS_AS(make_setting(parse_config(json::parse(text))), ConfigError);
  };
  bad_setting(R"j({"p":4,"m":1,"n":1,"tasks":["verma-scan"]})j");
  bad_setting(R"j({"p":5,"m":1,"n":1,"chi":{"E(1,2)":[1]},"tasks":["verma-scan"]})j");
  bad_setting(R"j({"p":5,"m":1,"n":1,"chi":{"E(3,1)":[1]},"tasks":["verma-scan"]})j");
  bad_setting(R"j({"p":5,"m":1,"n":1,"lambda":[1],"tasks":["verma-scan"]})j");
  // outside X for chi = 0: coordinates must lie in F_p... they always do, so use a nonzero chi
  bad_setting(R"j({"p":5,"m":1,"n":1,"chi":{"E(1,1)":[1]},"lambda":[0,0],"tasks":["verma-scan"]})j");

  const Setting s = make_setting(parse_config(json::parse(R"j({"p":5,"m":2,"n":1,"lambda":{"sample":7},
      "tasks":["verma-scan"],"seed":3})j")));
  CHECK(s.lambdas.size() == 7);
  CHECK(std::is_sorted(s.lambda_index.begin(), s.lambda_index.end()));
  const Setting again = make_setting(parse_config(json::parse(R"j({"p":5,"m":2,"n":1,"lambda":{"sample":7},
      "tasks":["verma-scan"],"seed":3})j")));
  CHECK(again.lambda_index == s.lambda_index);
}

TEST_CASE("report rendering") {
  Report r;
  r["task"] = "verma-scan";
  r["status"] = "pass";
  r["rows"] = Report::array();
  r["rows"].push_back({{"lambda", "(1,2)"}, {"simple", true}, {"note", "a, \"b\""}});
  r["rows"].push_back({{"lambda", "(3,4)"}, {"simple", false}, {"note", ""}});
  const std::string js = emit(r, Format::Json);
  CHECK(parse_report(js) == r);
  const std::string csv = emit(r, Format::Csv);
  CHECK(csv.find("\"a, \"\"b\"\"\"") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  const std::string tab = render_table(r["rows"]);
  CHECK(tab.find("(3,4)") != std::string::npos);
  CHECK(parse_format("json") == Format::Json);
  CHECK(extension(Format::Table) == "txt");
  CHECK_THROWS(parse_format("xml"));
}

TEST_CASE("exit codes from statuses") {
  auto rep = [](const char* st) {
    Report r;
    r["status"] = st;
    return r;
  };
  CHECK(exit_code({rep("pass"), rep("pass")}) == 0);
  CHECK(exit_code({rep("pass"), rep("fail")}) == 1);
  CHECK(exit_code({rep("error")}) == 1);
  CHECK(exit_code({rep("fail"), rep("refused")}) == 2);
  CHECK(exit_code({rep("invalid")}) == 2);
}

TEST_CASE("parallel rows keep their order") {
  for (unsigned jobs : {1u, 3u}) {
    const auto rows = parallel_rows(25, jobs, [](std::size_t i) { return Report{{"i", i}}; });
    REQUIRE(rows.size() == 25);
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i]["i"] == i);
  }
  CHECK_THROWS_AS(parallel_rows(10, 2,
                                [](std::size_t i) -> Report {
                                  if (i == 4) throw std::runtime_error("boom");
                                  return Report{};
                                }),
                  std::runtime_error);
}

TEST_CASE("cli runs and is deterministic") {
  const std::string cfg = configs() + "/gl11_chi0.json";
  const fs::path a = scratch("a"), b = scratch("b"), c = scratch("c");
  CHECK(run("run -c '" + cfg + "' -f json -o '" + a.string() + "'") == 0);
  CHECK(run("run -c '" + cfg + "' -f json -o '" + b.string() + "'") == 0);
  CHECK(run("run -c '" + cfg + "' -f json -j 4 -o '" + c.string() + "'") == 0);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(a)) {
    const auto name = e.path().filename();
    CAPTURE(name.string());
    REQUIRE(fs::exists(b / name));
    CHECK(slurp(e.path()) == slurp(b / name));
    CHECK(slurp(e.path()) == slurp(c / name));
    ++files;
  }
  CHECK(files == 6);  // five tasks and the summary
  const Report summary = parse_report(slurp(a / "summary.json"));
  CHECK(summary.dump().find("\"fail\"") == std::string::npos);
  const Report vs = parse_report(slurp(a / "verma-scan.json"));
  CHECK(vs["status"] == "pass");
  CHECK(vs["rows"].size() == 25);
  CHECK(vs["field"]["p"] == 5);

  // a different seed changes nothing for exhaustive tasks but is echoed
  const fs::path d = scratch("d");
  CHECK(run("scan -c '" + cfg + "' -f csv --seed 5 -o '" + d.string() + "'") == 0);
  CHECK(fs::exists(d / "verma-scan.csv"));
}

TEST_CASE("cli exit codes") {
  const fs::path dir = scratch("codes");
  CHECK(run("run -c '" + (dir / "missing.json").string() + "'") == 2);
  CHECK(run("frobnicate") == 2);
  CHECK(run("run -c '" + write_config(dir, "{not json").string() + "'") == 2);
  CHECK(run("run -c '" + write_config(dir, R"j({"p":5,"m":1,"n":1,"tasks":["nope"]})j").string() + "'") == 2);
  const fs::path ok = write_config(dir, R"j({"p":5,"m":2,"n":1,"lambda":[0,0,0],"tasks":["verma-scan"]})j");
  CHECK(run("run -c '" + ok.string() + "'") == 0);
  CHECK(run("run -c '" + ok.string() + "' --dim-budget 5") == 2);
  CHECK(run("run -c '" + ok.string() + "'", "GLMN_DIM_BUDGET=5") == 2);
  // the flag beats the environment
  CHECK(run("run -c '" + ok.string() + "' --dim-budget 100", "GLMN_DIM_BUDGET=5") == 0);
  CHECK(run("run -c '" + ok.string() + "' -f yaml") == 2);
}

TEST_CASE("module dumps from the cli") {
  const fs::path dir = scratch("dump");
  const fs::path cfg = write_config(dir, R"j({"p":5,"m":1,"n":1,"lambda":[1,3],"tasks":["verma-scan"]})j");
  const fs::path out = dir / "modules";
  CHECK(run("scan -c '" + cfg.string() + "' --dump-module '" + out.string() + "' -o '" + (dir / "o").string() + "'") ==
        0);
  std::size_t n = 0;
  for (const auto& e : fs::directory_iterator(out)) {
    CHECK(slurp(e.path()).rfind("glmn-module 1\n", 0) == 0);
    ++n;
  }
  CHECK(n >= 1);
}
