#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "alp/config.hpp"
#include "alp/snapshot.hpp"
#include "alp/verify.hpp"

namespace {

namespace fs = std::filesystem;

int cmd_run(const std::string& config_path, const std::string& output_dir, long seed,
            int steps_override, bool quiet) {
  std::string text;
  if (const auto* p = alp::cli::find_preset(config_path)) {
    text = p->text;
  } else {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "error: cannot open config or preset '" << config_path << "'\n";
      return 2;
    }
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }

  alp::sim::SimConfig cfg;
  try {
    cfg = alp::cli::resolve_config(alp::cli::ConfigDocument::parse(text));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (!output_dir.empty()) cfg.output_dir = output_dir;
  if (cfg.output_dir.empty()) {
    if (const char* env = std::getenv("ALP_OUTPUT_DIR")) cfg.output_dir = env;
    else cfg.output_dir = "out";
  }
  if (seed >= 0) cfg.init.seed = unsigned(seed);
  if (steps_override >= 0) cfg.steps_override = steps_override;
  cfg.quiet = quiet;

  alp::sim::Model model(cfg.kind, alp::fields::Grid(cfg.dim, cfg.shape, cfg.lengths), cfg.algebra,
                        cfg.closure, cfg.params, cfg.dealias);

  fs::create_directories(cfg.output_dir);
  {
    // echo the resolved configuration next to the outputs
    std::ofstream rc(fs::path(cfg.output_dir) / "resolved_config.ini");
    rc << alp::cli::to_document(cfg).serialize();
  }
  if (!quiet) {
    std::cout << "model " << alp::sim::to_string(cfg.kind) << ", grid " << cfg.shape[0];
    for (int i = 1; i < cfg.dim; ++i) std::cout << "x" << cfg.shape[i];
    std::cout << ", dt " << cfg.dt << ", output " << cfg.output_dir << "\n";
  }

  alp::sim::RunResult res = alp::sim::run_simulation(model, cfg);
  {
    std::ofstream csv(fs::path(cfg.output_dir) / "diagnostics.csv");
    csv << alp::sim::diagnostics_csv_header(model, cfg.loops) << "\n";
    for (const auto& r : res.records) csv << alp::sim::diagnostics_csv_row(r) << "\n";
  }
  if (res.final_state) alp::io::write_state(cfg.output_dir, "final", *res.final_state);
  if (res.exit_code != 0) {
    std::cerr << "error: " << res.error << "\n";
    return res.exit_code;
  }
  if (!quiet)
    std::cout << "wrote " << res.records.size() << " diagnostic records to " << cfg.output_dir
              << "/diagnostics.csv\n";
  return 0;
}

int cmd_verify(const std::string& suite, bool quick) {
  try {
    auto checks = alp::verify::run_suite(suite, quick);
    return alp::verify::report(checks, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_presets() {
  for (const auto& p : alp::cli::presets())
    std::cout << p.name << "  -  " << p.description << " [" << p.runtime_class << "]\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"affine Lie-Poisson fluid models: run, verify, presets"};
  app.require_subcommand(1);

  std::string config_path, output_dir, suite = "all";
  long seed = -1;
  int steps_override = -1;
  bool quiet = false, quick = false;

  auto* run = app.add_subcommand("run", "run a simulation from a config file or preset name");
  run->add_option("config", config_path, "config file path or preset name")->required();
  run->add_option("--output-dir", output_dir, "output directory");
  run->add_option("--seed", seed, "override the initial-data seed");
  run->add_option("--steps-override", steps_override, "run exactly this many steps");
  run->add_flag("--quiet", quiet, "suppress progress output");

  auto* verify = app.add_subcommand("verify", "run property suites");
  verify->add_option("suite", suite, "liealg|affine|fields|models|circulation|all");
  verify->add_flag("--quick", quick, "shorter circulation runs");

  app.add_subcommand("presets", "list shipped experiment presets");

  CLI11_PARSE(app, argc, argv);

  if (app.got_subcommand("run")) return cmd_run(config_path, output_dir, seed, steps_override, quiet);
  if (app.got_subcommand("verify")) return cmd_verify(suite, quick);
  if (app.got_subcommand("presets")) return cmd_presets();
  return 1;
}
