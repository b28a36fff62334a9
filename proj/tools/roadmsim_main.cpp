#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "roadmsim/error.hpp"
#include "roadmsim/report.hpp"

namespace {

int exit_code_for(const roadmsim::Error& err) {
  switch (err.code()) {
    case roadmsim::ErrorCode::config_parse:
    case roadmsim::ErrorCode::config_invalid:
    case roadmsim::ErrorCode::unresolved_reference:
    case roadmsim::ErrorCode::unknown_scenario:
      return 2;
    default:
      return 3;
  }
}

void emit(const roadmsim::CommandOutput& output, const std::string& output_dir,
          const std::string& command) {
  const std::string rendered = roadmsim::render_output(output);
  std::fputs(rendered.c_str(), stdout);
  if (output_dir.empty()) return;
  std::filesystem::create_directories(output_dir);
  const std::filesystem::path path = std::filesystem::path(output_dir) / (command + ".csv");
  std::ofstream file(path, std::ios::binary);
  file << rendered;
  if (!file) {
    throw roadmsim::Error(roadmsim::ErrorCode::invalid_argument,
                          "cannot write " + path.string());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multiband CDC-ROADM planning and simulation toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  std::string output_dir;
  std::string format = "csv";
  uint64_t seed = 0;
  app.add_option("-c,--config", config_path, "configuration file (JSON, comments allowed)")
      ->check(CLI::ExistingFile);
  app.add_option("--seed", seed, "override the configured random seed");
  app.add_option("--out", output_dir, "also write the report into this directory");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"csv"}));

  CLI::App* plan =
      app.add_subcommand("plan", "channel counts per (band, signal class) pair");
  CLI::App* adddrop =
      app.add_subcommand("adddrop", "add/drop-ratio grid over MCS client counts");
  std::vector<int> clients_override;
  adddrop->add_option("--clients", clients_override, "client port counts to evaluate")
      ->check(CLI::NonNegativeNumber);
  CLI::App* budget =
      app.add_subcommand("budget", "drop-path power budget of the probe super-channel");
  CLI::App* route =
      app.add_subcommand("route", "provision the configured demands over the topology");
  CLI::App* scenario =
      app.add_subcommand("scenario", "margins of the test signals per routing scenario");
  std::string selector = "all";
  scenario->add_option("id", selector, "scenario id (1, 2, 3) or 'all'");
  bool no_traces = false;
  scenario->add_flag("--no-traces", no_traces, "omit per-element trace records");
  CLI::App* sweep =
      app.add_subcommand("sweep", "probe margin versus node input power");
  double start_override = 0.0;
  double stop_override = 0.0;
  double step_override = 0.0;
  CLI::Option* start_opt = sweep->add_option("--start", start_override, "first power, dBm");
  CLI::Option* stop_opt = sweep->add_option("--stop", stop_override, "last power, dBm");
  CLI::Option* step_opt =
      sweep->add_option("--step", step_override, "step, dB")->check(CLI::PositiveNumber);
  for (CLI::App* sub : {plan, adddrop, budget, route, scenario, sweep}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    roadmsim::RunConfig config = config_path.empty() ? roadmsim::default_run_config()
                                                     : roadmsim::load_config(config_path);
    if (app.count("--seed") > 0) roadmsim::apply_seed(config, seed);
    if (!output_dir.empty()) config.output_dir = output_dir;

    if (plan->parsed()) {
      emit(roadmsim::cmd_plan(config), config.output_dir, "plan");
    } else if (adddrop->parsed()) {
      const std::vector<int>& clients =
          clients_override.empty() ? config.adddrop_clients : clients_override;
      emit(roadmsim::cmd_adddrop(config, clients), config.output_dir, "adddrop");
    } else if (budget->parsed()) {
      emit(roadmsim::cmd_budget(config), config.output_dir, "budget");
    } else if (route->parsed()) {
      emit(roadmsim::cmd_route(config), config.output_dir, "route");
    } else if (scenario->parsed()) {
      emit(roadmsim::cmd_scenario(config, selector, !no_traces), config.output_dir,
           "scenario");
    } else if (sweep->parsed()) {
      if (start_opt->count() > 0) config.sweep.start_dbm = start_override;
      if (stop_opt->count() > 0) config.sweep.stop_dbm = stop_override;
      if (step_opt->count() > 0) config.sweep.step_db = step_override;
      emit(roadmsim::cmd_sweep(config), config.output_dir, "sweep");
    }
    return 0;
  } catch (const roadmsim::Error& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return exit_code_for(err);
  } catch (const std::exception& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return 3;
  }
}
