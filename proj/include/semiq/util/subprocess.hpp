#pragma once

#include <filesystem>
#include <map>
#include <string>

namespace semiq::util {

struct CommandResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

/// Substitutes {key} placeholders in a command template. Unknown placeholders
/// are left untouched.
std::string substitute_template(const std::string& command_template,
                                const std::map<std::string, std::string>& values);

/// Runs a shell command, capturing stdout/stderr. Never throws on nonzero
/// exit; the caller decides.
CommandResult run_command(const std::string& command, const std::filesystem::path& workdir);

/// Unique scratch directory, removed on destruction. Honors SEMIQ_TMPDIR.
class ScopedTempDir {
  public:
    explicit ScopedTempDir(const std::string& prefix);
    ~ScopedTempDir();

    ScopedTempDir(const ScopedTempDir&) = delete;
    ScopedTempDir& operator=(const ScopedTempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

  private:
    std::filesystem::path path_;
};

/// SEMIQ_TMPDIR if set, otherwise the system temp directory.
std::filesystem::path temp_root();

}  // namespace semiq::util
