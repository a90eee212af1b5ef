// glmn: experiment runner for restricted gl(m|n) computations.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "config.hpp"
#include "glmn/version.hpp"
#include "report.hpp"
#include "tasks.hpp"

namespace {

using namespace glmn::app;

std::optional<std::uint64_t> env_number(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    throw ConfigError(std::string("environment variable ") + name + " is not a number");
  }
}

struct Flags {
  std::string config, out, format = "table";
  std::optional<std::uint64_t> seed, jobs, dim_budget, line_budget;
  std::optional<std::string> dump_module, dump_element;
};

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << text;
}

int execute(const Flags& f, const std::optional<std::string>& forced_task) {
  RunOptions opt;
  opt.config = load_config(f.config);
  auto& c = opt.config;
  // precedence: flag, then environment, then config file
  if (auto v = env_number("GLMN_JOBS")) c.jobs = static_cast<unsigned>(*v);
  if (auto v = env_number("GLMN_DIM_BUDGET")) c.dim_budget = *v;
  if (auto v = env_number("GLMN_LINE_BUDGET")) c.line_budget = *v;
  if (f.seed) c.seed = *f.seed;
  if (f.jobs) c.jobs = static_cast<unsigned>(*f.jobs);
  if (f.dim_budget) c.dim_budget = *f.dim_budget;
  if (f.line_budget) c.line_budget = *f.line_budget;
  if (c.jobs < 1) c.jobs = 1;
  if (forced_task) c.tasks = {*forced_task};
  opt.dump_module_dir = f.dump_module;
  const Format fmt = parse_format(f.format);

  const Setting setting = make_setting(c);
  if (f.dump_element) write_file(*f.dump_element, dump_pbar_element(setting));

  std::vector<Report> reports;
  Report summary;
  summary["schema"] = glmn::kReportSchema;
  summary["version"] = glmn::kVersion;
  summary["input"] = config_echo(c);
  summary["tasks"] = Report::array();
  for (const auto& task : c.tasks) {
    const auto t0 = std::chrono::steady_clock::now();
    Report r = run_task(task, opt, setting);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!f.out.empty()) write_file(std::filesystem::path(f.out) / (task + "." + extension(fmt)), emit(r, fmt));
    if (f.out.empty() || fmt == Format::Table) std::cout << emit(r, Format::Table) << '\n';
    std::cerr << task << ": " << r.at("status").get<std::string>() << " (" << secs << " s)\n";
    Report line;
    line["task"] = task;
    line["status"] = r.at("status");
    if (r.contains("error")) line["error"] = r.at("error");
    summary["tasks"].push_back(line);
    reports.push_back(std::move(r));
  }
  const int code = exit_code(reports);
  summary["exit_code"] = code;
  if (!f.out.empty()) {
    write_file(std::filesystem::path(f.out) / ("summary." + extension(fmt)),
               fmt == Format::Json ? summary.dump(2) + "\n"
               : fmt == Format::Csv ? render_csv(summary["tasks"])
                                    : render_table(summary["tasks"]));
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"glmn: baby Verma modules and simplicity checks for restricted gl(m|n) over finite fields"};
  app.set_version_flag("--version", std::string(glmn::kVersion));
  app.require_subcommand(1);
  Flags f;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config,-c", f.config, "experiment config (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--out,-o", f.out, "directory for report files (one per task plus a summary)");
    sub->add_option("--format,-f", f.format, "report format")->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--seed", f.seed, "override the config seed");
    sub->add_option("--jobs,-j", f.jobs, "worker threads (env GLMN_JOBS)");
    sub->add_option("--dim-budget", f.dim_budget, "largest module dimension to build (env GLMN_DIM_BUDGET)");
    sub->add_option("--line-budget", f.line_budget, "lines enumerated per maximal-vector space (env GLMN_LINE_BUDGET)");
    sub->add_option("--dump-module", f.dump_module, "directory receiving one text dump per built module");
    sub->add_option("--dump-element", f.dump_element, "file receiving the normal form of the pbar product");
  };
  struct Sub {
    const char* name;
    const char* help;
    std::optional<std::string> task;
  };
  const Sub subs[] = {{"run", "run every task listed in the config", std::nullopt},
                      {"scan", "simplicity scan over the chosen weights", "verma-scan"},
                      {"kw", "Kac-Weisfeiler dimension check", "kw-verify"},
                      {"levi", "standard Levi form scan", "levi-scan"},
                      {"check", "structure identities of gl(m|n)", "structure-check"}};
  std::optional<std::string> forced;
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    add_common(sub);
    sub->callback([&forced, task = s.task] { forced = task; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    return execute(f, forced);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
