#pragma once

#include <array>
#include <cstdio>
#include <string>

#include <sys/wait.h>

// Runs the CLI binary through the shell, capturing stdout only. Diagnostics
// go to the null device so golden comparisons see pure data output.
struct CliResult {
    int exit_code = -1;
    std::string output;
};

inline CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + std::string(WORDLAB_CLI_PATH) + " " + args +
                      " 2>/dev/null";
    CliResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.output.append(buf.data(), got);
    int status = pclose(pipe);
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}
