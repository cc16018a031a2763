#pragma once

// Runs the bbw-tilt executable and captures stdout and the exit code.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>

struct CliRun {
    int exit_code;
    std::string out;
};

inline CliRun run_cli(const std::string& args) {
    const std::string command = std::string(BBW_TILT_EXE) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed: " + command);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return CliRun{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}
