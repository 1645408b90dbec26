#pragma once

#include <stdexcept>
#include <string>

namespace sphdyn {

// Errors caused by invalid inputs at the library boundary (degenerate maps,
// caps exceeded, out-of-range parameters). The CLI maps these to exit 1.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Violations of internal contracts. Should never escape a correct build.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace sphdyn
