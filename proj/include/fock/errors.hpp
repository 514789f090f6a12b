#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace fock {

// Domain failure with a stable machine-readable kind name next to the
// human-readable message. The CLI maps any Error onto exit status 1 and
// prints the kind on standard error.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

// Parse failure carrying the byte offset of the offending input position.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, const std::string& message)
        : Error("SyntaxError", message), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace fock
