#pragma once

#include <string>
#include <functional>
#include <vector>

#include "CLI11.hpp"

namespace cli {

/// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitOut = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitError = 3;
inline constexpr int kExitUsage = 64;

struct SetArgs {
  std::string spec;
  bool symmetrize = false;
  std::string extra;
};

struct CommonArgs {
  int threads = 0;
  std::string manifest;
};

void add_set_options(CLI::App& app, SetArgs& set, bool required = true);
void add_common_options(CLI::App& app, CommonArgs& common);

/// Registers every subcommand; the selected one stores its runner in `run`.
void register_commands(CLI::App& app, std::function<int()>& run);

}  // namespace cli
