#pragma once

#include <atomic>
#include <filesystem>
#include <map>
#include <string>
#include <unistd.h>

#include "moiredb/hash.hpp"
#include "moiredb/png_io.hpp"

namespace moiredb::test {

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag = "moiredb") {
        static std::atomic<int> counter{0};
        path_ = std::filesystem::temp_directory_path() /
                (tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const noexcept { return path_; }
    std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

/// File name -> FNV-1a of its bytes, for whole-tree comparisons.
inline std::map<std::string, std::uint64_t> tree_hashes(const std::filesystem::path& dir) {
    std::map<std::string, std::uint64_t> out;
    for (const auto& entry : std::filesystem::recursive_directory_iterator(dir)) {
        if (entry.is_regular_file()) {
            out[std::filesystem::relative(entry.path(), dir).string()] = fnv1a64(read_file(entry.path()));
        }
    }
    return out;
}

}  // namespace moiredb::test
