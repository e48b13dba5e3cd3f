#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "weakring/cli.hpp"

namespace cli_run {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

/// In-process run.
inline Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Outcome o;
  o.code = weakring::run_cli(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

inline std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) {
    if (c == '\'') q += "'\\''";
    else q += c;
  }
  return q + "'";
}

/// Runs the installed binary as a subprocess; stderr is discarded.
inline Outcome spawn(const std::vector<std::string>& args, const std::string& env = {}) {
  std::string cmd = env.empty() ? "" : env + " ";
  cmd += quote(WEAKRING_CLI_PATH);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>/dev/null";
  Outcome o;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return o;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) o.out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

/// Drops the timing footer so two runs can be compared byte for byte.
inline std::string without_footer(const std::string& report) {
  std::string out;
  std::istringstream in(report);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("wall-time:", 0) == 0) continue;
    if (line.find("\"wall_time_ms\":") != std::string::npos) continue;
    out += line + "\n";
  }
  return out;
}

}  // namespace cli_run
