#pragma once

// Spawn the CLI binary and capture stdout + exit code.

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace proc {

#ifndef DISRUPTIX_CLI_PATH
#error "DISRUPTIX_CLI_PATH must point at the disruptix binary"
#endif

struct Result {
    int exit_code = -1;
    std::string output;
};

inline std::string shell_quote(const std::string& s) {
    std::string quoted = "'";
    for (char c : s) {
        if (c == '\'')
            quoted += "'\\''";
        else
            quoted += c;
    }
    return quoted + "'";
}

// env_prefix: e.g. "DISRUPTIX_CONFIG=/tmp/cfg "; stderr is dropped unless
// merge_stderr is set, keeping stdout byte-comparable.
inline Result run_cli(const std::vector<std::string>& args, bool merge_stderr = false,
                      const std::string& env_prefix = {}) {
    std::string command = env_prefix + shell_quote(DISRUPTIX_CLI_PATH);
    for (const auto& arg : args) command += ' ' + shell_quote(arg);
    command += merge_stderr ? " 2>&1" : " 2>/dev/null";

    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed: " + command);
    Result result;
    std::array<char, 4096> buffer;
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace proc
