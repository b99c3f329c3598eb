#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

namespace moiredb {

/// Base of every error the library raises at runtime (I/O, bad file contents).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A file exists but its contents do not follow the expected layout.
class FormatError : public Error {
public:
    using Error::Error;
};

/// Filesystem failure; the message always carries the offending path.
class IoError : public Error {
public:
    IoError(const std::filesystem::path& path, const std::string& what)
        : Error(path.string() + ": " + what), path_(path) {}

    const std::filesystem::path& path() const noexcept { return path_; }

private:
    std::filesystem::path path_;
};

/// Stored content disagrees with its recorded hash or spec.
class IntegrityError : public Error {
public:
    IntegrityError(std::size_t index, const std::string& what)
        : Error("entry " + std::to_string(index) + ": " + what), index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

}  // namespace moiredb
