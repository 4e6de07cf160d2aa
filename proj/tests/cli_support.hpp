#pragma once

#include <cstdio>
#include <memory>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

// Spawns the installed CLI binary (path injected by the build) and captures
// stdout plus the exit code; stderr is dropped so diagnostics cannot pollute
// the captured stream.
namespace clisupport {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

inline RunResult run_command(const std::string& command) {
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    throw std::runtime_error("popen failed for: " + command);
  }
  RunResult result;
  char buffer[4096];
  size_t got = 0;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.out.append(buffer, got);
  }
  const int status = pclose(pipe);
  if (WIFEXITED(status)) {
    result.exit_code = WEXITSTATUS(status);
  }
  return result;
}

inline RunResult run_cli(const std::string& arguments,
                         const std::string& env_prefix = "") {
  std::string command = env_prefix;
  if (!command.empty()) command += " ";
  command += std::string(CYCLIC_ES_CLI_PATH) + " " + arguments +
             " 2>/dev/null";
  return run_command(command);
}

}  // namespace clisupport
