#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "indvar/report.hpp"

namespace {

int run_file(const std::string& path, const indvar::RunOverrides& overrides,
             const std::string& format) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "indvar: cannot open '" << path << "'\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  indvar::dsl::SpecFile spec;
  indvar::dsl::BoundSpec bound;
  try {
    spec = indvar::dsl::parse_spec(buf.str());
    bound = indvar::dsl::bind_spec(spec);
  } catch (const indvar::dsl::ParseError& e) {
    std::cerr << "indvar: " << e.what() << "\n";
    return 2;
  } catch (const indvar::dsl::NameError& e) {
    std::cerr << "indvar: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "indvar: " << e.what() << "\n";
    return 2;
  }

  indvar::Report report = indvar::run_checks(bound, overrides, path);
  std::cout << indvar::emit_report(report, format == "structured"
                                               ? indvar::ReportFormat::Structured
                                               : indvar::ReportFormat::Text);
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"indvar — certificate checks for filtered families of affine varieties"};
  app.require_subcommand(1);

  std::string file;
  std::string format = "text";
  indvar::RunOverrides overrides;
  int depth = -1, degbound = -1;
  long seed = -1, steps = -1;

  CLI::App* run = app.add_subcommand("run", "parse a spec file and execute its checks");
  run->add_option("file", file, "spec file (.ind)")->required();
  run->add_option("--depth", depth, "override truncation depth for every check");
  run->add_option("--degbound", degbound, "override the degree bound");
  run->add_option("--seed", seed, "override the random seed");
  run->add_option("--steps", steps, "reduction step limit per computation");
  run->add_option("--report", format, "output format: text|structured")
      ->check(CLI::IsMember({"text", "structured"}));
  run->add_option("--jobs", overrides.jobs, "run independent checks concurrently");

  CLI11_PARSE(app, argc, argv);

  if (depth >= 0) overrides.depth = depth;
  if (degbound >= 0) overrides.degbound = degbound;
  if (seed >= 0) overrides.seed = seed;
  if (steps >= 0) overrides.step_limit = steps;

  return run_file(file, overrides, format);
}
