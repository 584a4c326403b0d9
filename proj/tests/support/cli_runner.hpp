#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace wceg::testsupport {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::filesystem::path scratch_dir() {
    static std::filesystem::path dir = [] {
        auto base = std::filesystem::temp_directory_path() /
                    ("wceg-tests-" + std::to_string(static_cast<long>(::getpid())));
        std::filesystem::create_directories(base);
        return base;
    }();
    return dir;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

// Runs the installed CLI with the given argument string, capturing both
// streams. Argument strings are compile-time constants in the tests, so no
// quoting gymnastics are needed.
inline CliResult run_cli(const std::string& args) {
    static int counter = 0;
    auto out_path = scratch_dir() / ("out" + std::to_string(counter) + ".txt");
    auto err_path = scratch_dir() / ("err" + std::to_string(counter) + ".txt");
    ++counter;
    std::string command = std::string(WCEG_CLI_BINARY) + " " + args + " > " +
                          out_path.string() + " 2> " + err_path.string();
    int status = std::system(command.c_str());
    CliResult result;
    result.exit_code = WEXITSTATUS(status);
    result.out = read_file(out_path);
    result.err = read_file(err_path);
    return result;
}

}  // namespace wceg::testsupport
