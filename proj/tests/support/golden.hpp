#pragma once

#include <string>
#include <vector>

namespace nsatz::testing {

/// Runs every case of golden/cases.json against the CLI binary with the
/// golden directory as working directory and compares stdout byte for byte
/// plus the exit code. Returns one message per failing case.
std::vector<std::string> run_golden_cases(const std::string& cli_path,
                                          const std::string& golden_dir);

/// CLI path and golden directory from the NSATZ_CLI / NSATZ_GOLDEN_DIR
/// environment (set by ctest); throws when unset.
std::string cli_path_from_env();
std::string golden_dir_from_env();

}  // namespace nsatz::testing
