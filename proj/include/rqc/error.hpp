#pragma once

#include <stdexcept>
#include <string>

namespace rqc {

/// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// Formula text could not be parsed. Carries a 1-based source position and
/// a hint describing what the parser expected at that point.
class ParseError : public Error {
public:
    ParseError(int line, int column, std::string expected, std::string found)
        : Error(format(line, column, expected, found)),
          line_(line),
          column_(column),
          expected_(std::move(expected)),
          found_(std::move(found)) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    const std::string& expected() const noexcept { return expected_; }
    const std::string& found() const noexcept { return found_; }

private:
    static std::string format(int line, int column, const std::string& expected,
                              const std::string& found) {
        return std::to_string(line) + ":" + std::to_string(column) + ": expected " + expected +
               ", found " + found;
    }

    int line_;
    int column_;
    std::string expected_;
    std::string found_;
};

/// A contract document failed schema or content validation. `path` points at
/// the offending location (dotted keys with [index] for array elements).
class DocumentError : public Error {
public:
    DocumentError(std::string path, const std::string& message)
        : Error(path.empty() ? message : path + ": " + message), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

} // namespace rqc
