#include "q5/runner.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

struct Flags {
  std::string config;
  std::vector<std::string> sets;
};

// flag values become dotted overrides so file and flags share one path
void flag(CLI::App* app, std::vector<std::pair<std::string, std::string>>& bound, const std::string& name,
          const std::string& key, const std::string& help) {
  bound.emplace_back(key, "");
  auto& slot = bound.back().second;
  app->add_option(name, slot, help);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qu5it simulator for the Agassi model"};
  app.set_version_flag("--version", q5::runner::tool_version());
  app.require_subcommand(1);
  app.fallthrough();

  Flags f;
  std::vector<std::pair<std::string, std::string>> bound;
  bound.reserve(32);
  app.add_option("-c,--config", f.config, "JSON config file")->check(CLI::ExistingFile);
  app.add_option("--set", f.sets, "override a config field, dotted.key=value (repeatable)");
  flag(&app, bound, "--omega", "model.omega", "number of modes");
  flag(&app, bound, "--preset", "model.preset", "coupling preset set-0..set-4");
  flag(&app, bound, "--state", "state.label", "initial state A or B");
  flag(&app, bound, "--digits", "state.digits", "explicit initial digits, comma separated");
  flag(&app, bound, "--t-max", "evolution.t_max", "final time");
  flag(&app, bound, "--points", "evolution.points", "time grid points");
  flag(&app, bound, "--n-trot", "evolution.n_trot", "Trotter step counts, comma separated");
  flag(&app, bound, "--backend", "evolution.backend", "native or controlled");
  flag(&app, bound, "--shots", "evolution.shots", "measurement shots per time point");
  flag(&app, bound, "--seed", "evolution.seed", "PRNG seed");
  flag(&app, bound, "--threads", "evolution.threads", "worker threads");
  flag(&app, bound, "--time", "evolution.t", "evaluation time for signprob");
  flag(&app, bound, "--inject", "verify.inject", "none or sigma14");
  flag(&app, bound, "-o,--output", "output.path", "output file, - for stdout");
  flag(&app, bound, "--format", "output.format", "csv or json");
  flag(&app, bound, "--emit-circuit", "output.emit_circuit", "write the evolve circuit IR to this file");

  for (const auto& name : q5::runner::command_names()) app.add_subcommand(name, "run " + name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    std::vector<std::string> overrides = f.sets;
    for (const auto& [key, value] : bound)
      if (!value.empty()) overrides.push_back(key + "=" + value);
    const auto cfg = q5::runner::load_config(f.config, overrides);
    const std::string cmd = app.get_subcommands().front()->get_name();
    const auto result = q5::runner::run_command(cmd, cfg);
    const std::string text = q5::runner::render(result, cfg.format);
    if (cfg.output == "-") {
      std::cout << text;
    } else {
      std::ofstream os(cfg.output, std::ios::binary);
      if (!os) throw std::runtime_error("cannot write '" + cfg.output + "'");
      os << text;
    }
    for (const auto& c : result.checks)
      std::cerr << c.status() << ' ' << c.name << ' ' << q5::runner::fmt12(c.measured) << '\n';
    return result.ok() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
