#include "semiq/util/subprocess.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "semiq/error.hpp"
#include "semiq/rng.hpp"

namespace semiq::util {

std::string substitute_template(const std::string& command_template,
                                const std::map<std::string, std::string>& values) {
    std::string out;
    out.reserve(command_template.size());
    std::size_t i = 0;
    while (i < command_template.size()) {
        if (command_template[i] == '{') {
            const std::size_t close = command_template.find('}', i);
            if (close != std::string::npos) {
                const std::string key = command_template.substr(i + 1, close - i - 1);
                const auto it = values.find(key);
                if (it != values.end()) {
                    out += it->second;
                    i = close + 1;
                    continue;
                }
            }
        }
        out += command_template[i++];
    }
    return out;
}

std::filesystem::path temp_root() {
    if (const char* env = std::getenv("SEMIQ_TMPDIR"); env != nullptr && *env != '\0') {
        return std::filesystem::path(env);
    }
    return std::filesystem::temp_directory_path();
}

ScopedTempDir::ScopedTempDir(const std::string& prefix) {
    const auto root = temp_root();
    std::filesystem::create_directories(root);
    static std::atomic<std::uint64_t> counter{0};
    // pid + counter + clock keeps concurrent adapters apart
    const auto stamp = mix_seed(static_cast<std::uint64_t>(::getpid()),
                                counter.fetch_add(1) ^ static_cast<std::uint64_t>(
                                    std::chrono::steady_clock::now().time_since_epoch().count()));
    std::ostringstream name;
    name << prefix << "-" << std::hex << stamp;
    path_ = root / name.str();
    std::filesystem::create_directory(path_);
}

ScopedTempDir::~ScopedTempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);  // best effort
}

CommandResult run_command(const std::string& command, const std::filesystem::path& workdir) {
    const auto out_path = workdir / "cmd.stdout";
    const auto err_path = workdir / "cmd.stderr";

    std::ostringstream full;
    full << "cd " << workdir.string() << " && { " << command << " ; } > " << out_path.string()
         << " 2> " << err_path.string();

    const int status = std::system(full.str().c_str());

    CommandResult result;
    if (status == -1) {
        result.exit_code = -1;
    } else if (WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
    } else {
        result.exit_code = 128 + (WIFSIGNALED(status) ? WTERMSIG(status) : 0);
    }

    auto slurp = [](const std::filesystem::path& p) {
        std::ifstream f(p);
        std::ostringstream ss;
        ss << f.rdbuf();
        return ss.str();
    };
    result.out = slurp(out_path);
    result.err = slurp(err_path);

    std::error_code ec;
    std::filesystem::remove(out_path, ec);
    std::filesystem::remove(err_path, ec);
    return result;
}

}  // namespace semiq::util
