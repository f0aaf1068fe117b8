#pragma once

#include <cstdio>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace testsupport {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs a shell command, capturing stdout (plus stderr when merged).
inline RunResult run_command(const std::string& cmd, bool merge_stderr = false) {
  RunResult r;
  std::string full = cmd + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

inline std::string shell_quote(const std::string& s) { return "'" + s + "'"; }

// Builds "<exe> 'arg1' 'arg2' ..." — arguments must not contain single quotes.
inline std::string command_line(const std::string& exe, const std::vector<std::string>& args) {
  std::string cmd = exe;
  for (const std::string& a : args) cmd += " " + shell_quote(a);
  return cmd;
}

}  // namespace testsupport
