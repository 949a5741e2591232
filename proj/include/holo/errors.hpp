#pragma once

#include <stdexcept>
#include <string>

namespace holo {

// Base of all library errors. cls() is the machine-parsable class the CLI
// prints as "error[<cls>]: message".
class Error : public std::runtime_error {
public:
    Error(std::string cls, const std::string& msg)
        : std::runtime_error(msg), cls_(std::move(cls)) {}

    const std::string& cls() const noexcept { return cls_; }

private:
    std::string cls_;
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& m) : Error("config", m) {}
};

struct ShapeError : Error {
    explicit ShapeError(const std::string& m) : Error("shape", m) {}
};

struct InputError : Error {
    explicit InputError(const std::string& m) : Error("input", m) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& m) : Error("domain", m) {}
};

struct ParamError : Error {
    explicit ParamError(const std::string& m) : Error("param", m) {}
};

struct IoError : Error {
    explicit IoError(const std::string& m) : Error("io", m) {}
};

// Corrupt or malformed file contents; carries the byte offset when known.
class FormatError : public Error {
public:
    explicit FormatError(const std::string& m, long long byte_offset = -1)
        : Error("format", byte_offset >= 0
                              ? m + " (byte offset " + std::to_string(byte_offset) + ")"
                              : m),
          byte_offset_(byte_offset) {}

    long long byte_offset() const noexcept { return byte_offset_; }

private:
    long long byte_offset_;
};

// Non-finite values appearing mid-solve; carries the iteration index.
class NumericalError : public Error {
public:
    NumericalError(const std::string& m, int iteration)
        : Error("numerical", m + " (iteration " + std::to_string(iteration) + ")"),
          iteration_(iteration) {}

    int iteration() const noexcept { return iteration_; }

private:
    int iteration_;
};

}  // namespace holo
