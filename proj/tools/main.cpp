#include <functional>
#include <iostream>

#include "commands.hpp"
#include "json.hpp"
#include "sigma/error.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Roots of power series with coefficients in a finite set"};
  app.require_subcommand(1);
  std::function<int()> run;
  cli::register_commands(app, run);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitUsage;
  }
  try {
    return run();
  } catch (const sigma::Error& e) {
    std::cerr << nlohmann::json{{"error", std::string(sigma::to_string(e.kind()))}, {"message", e.what()}}.dump() << "\n";
    return e.kind() == sigma::ErrorKind::InvalidInput ? cli::kExitUsage : cli::kExitError;
  } catch (const std::exception& e) {
    std::cerr << nlohmann::json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
    return cli::kExitError;
  }
}
