#pragma once

// Spawns the installed CLI binary and captures exit code + combined output.

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

struct CliResult {
    int exit_code;
    std::string output;
};

inline std::string cli_path() {
#ifdef EXCITON1D_CLI_PATH
    return EXCITON1D_CLI_PATH;
#else
    const char* env = std::getenv("EXCITON1D_CLI");
    if (!env)
        throw std::runtime_error("EXCITON1D_CLI not set");
    return env;
#endif
}

inline CliResult run_cli(const std::string& args) {
    const std::string cmd = "'" + cli_path() + "' " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        throw std::runtime_error("popen failed for: " + cmd);
    std::string output;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        output.append(buf, got);
    const int status = pclose(pipe);
    const int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return {code, output};
}

// value of a "key=..." line in CLI output; throws when missing
inline double cli_value(const std::string& output, const std::string& key) {
    const std::string needle = key + "=";
    size_t pos = 0;
    while (pos < output.size()) {
        const size_t end = output.find('\n', pos);
        const std::string line = output.substr(pos, end - pos);
        if (line.rfind(needle, 0) == 0)
            return std::strtod(line.c_str() + needle.size(), nullptr);
        if (end == std::string::npos)
            break;
        pos = end + 1;
    }
    throw std::runtime_error("key not found in CLI output: " + key + "\n" + output);
}

inline std::string cli_line(const std::string& output, const std::string& prefix) {
    size_t pos = 0;
    while (pos < output.size()) {
        const size_t end = output.find('\n', pos);
        const std::string line = output.substr(pos, end - pos);
        if (line.rfind(prefix, 0) == 0)
            return line;
        if (end == std::string::npos)
            break;
        pos = end + 1;
    }
    return {};
}
