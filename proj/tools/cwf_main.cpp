#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "cwf/parallel.hpp"
#include "cwf/report.hpp"
#include "cwf/runner.hpp"

namespace {

// a config argument is a path to a JSON file or the name of a registered
// scenario (which runs that scenario's default config)
cwf::ScenarioConfig resolve_config(const std::string& arg) {
  std::ifstream is(arg);
  if (is) {
    std::ostringstream buf;
    buf << is.rdbuf();
    return cwf::parse_config(buf.str());
  }
  return cwf::default_config(arg);
}

int emit(const cwf::VerificationReport& rep, const std::string& output) {
  std::cout << cwf::report_summary(rep);
  if (!output.empty()) {
    std::ofstream os(output, std::ios::binary);
    if (!os) {
      std::cerr << "cwf: cannot open " << output << "\n";
      return 2;
    }
    os << cwf::report_json(rep);
  }
  return rep.overall_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"characteristic forms on spaces of connections"};
  app.require_subcommand(1);

  std::string config_arg;
  std::string output;
  int threads = 0;
  std::uint64_t seed = 0;

  auto add_run_options = [&](CLI::App* cmd) {
    cmd->add_option("config", config_arg,
                    "config file path or registered scenario name")
        ->required();
    cmd->add_option("--output", output, "write the JSON report to this path");
    cmd->add_option("--threads", threads, "worker thread count");
    cmd->add_option("--seed", seed, "override the config seed");
  };

  CLI::App* verify =
      app.add_subcommand("verify", "run a scenario's check suite");
  CLI::App* sweep =
      app.add_subcommand("sweep", "run a scenario's convergence sweep");
  add_run_options(verify);
  add_run_options(sweep);
  app.add_subcommand("list-scenarios", "list registered scenario names");
  app.add_subcommand("dump-schema", "print the config file schema");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("list-scenarios")) {
      for (const std::string& name : cwf::scenario_names())
        std::cout << name << "\n";
      return 0;
    }
    if (app.got_subcommand("dump-schema")) {
      std::cout << cwf::config_schema();
      return 0;
    }
    cwf::ScenarioConfig cfg = resolve_config(config_arg);
    if (verify->count("--seed") + sweep->count("--seed") > 0) cfg.seed = seed;
    if (threads > 0) cwf::par::set_thread_count(threads);
    const cwf::VerificationReport rep = app.got_subcommand("verify")
                                            ? cwf::run_suite(cfg)
                                            : cwf::convergence_sweep(cfg);
    return emit(rep, output);
  } catch (const std::exception& e) {
    std::cerr << "cwf: " << e.what() << "\n";
    return 2;
  }
}
