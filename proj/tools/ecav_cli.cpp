// Command-line driver: run, sweep and spectrum subcommands.
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "ecav/driver.hpp"

int main(int argc, char** argv)
{
  CLI::App app{"1D DG Euler solver with entropy correction artificial viscosity"};
  app.require_subcommand(1);

  std::string config;
  std::string grid;
  std::string out;

  auto* run = app.add_subcommand("run", "integrate one configuration");
  run->add_option("--config", config, "config file")->required();
  run->add_option("--out", out, "output directory (overrides output.dir)");

  auto* sweep = app.add_subcommand("sweep", "run a parameter grid and write a convergence table");
  sweep->add_option("--config", config, "base config file")->required();
  sweep->add_option("--grid", grid, "grid file")->required();
  sweep->add_option("--out", out, "output directory (overrides output.dir)");

  auto* spectrum = app.add_subcommand("spectrum", "evolve, then compute the linearized spectrum");
  spectrum->add_option("--config", config, "config file")->required();
  spectrum->add_option("--out", out, "output directory (overrides output.dir)");

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError& e)
  {
    const int code = app.exit(e);
    return code == 0 ? 0 : ecav::exit_config_error;
  }

  const std::optional<std::string> out_dir = out.empty() ? std::nullopt : std::optional<std::string>(out);
  try
  {
    if (*run)
      return ecav::run_command(config, out_dir);
    if (*sweep)
      return ecav::sweep_command(config, grid, out_dir);
    return ecav::spectrum_command(config, out_dir);
  }
  catch (const std::exception& e)
  {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
