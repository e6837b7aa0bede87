#pragma once

// Minimal subprocess capture for driving the installed CLI from tests.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace subprocess {

struct Result {
    int status = -1;
    std::string out;
};

inline std::string cli_binary() {
    const char* bin = std::getenv("CONTRACTIX_BIN");
    return bin ? bin : "";
}

inline std::filesystem::path data_dir() {
    const char* dir = std::getenv("CONTRACTIX_DATA");
    return dir ? std::filesystem::path(dir) : std::filesystem::path();
}

inline Result run(const std::string& args, const std::string& stdin_data = "") {
    namespace fs = std::filesystem;
    Result result;
    std::string cmd = cli_binary() + " " + args + " 2>/dev/null";

    fs::path stdin_file;
    if (!stdin_data.empty()) {
        stdin_file = fs::temp_directory_path() /
                     ("contractix_stdin_" + std::to_string(::getpid()) + ".txt");
        std::ofstream(stdin_file) << stdin_data;
        cmd += " < " + stdin_file.string();
    }

    std::FILE* pipe = ::popen(cmd.c_str(), "r");
    if (pipe) {
        char buf[4096];
        std::size_t got;
        while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
        int rc = ::pclose(pipe);
        result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    }
    if (!stdin_file.empty()) fs::remove(stdin_file);
    return result;
}

}  // namespace subprocess
