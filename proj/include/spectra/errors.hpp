#pragma once

#include <stdexcept>
#include <string>

namespace spectra {

// Thrown when a (beta, nu, ...) combination has no implemented backend,
// as opposed to plain bad input (std::invalid_argument / std::domain_error).
class unsupported_error : public std::runtime_error {
public:
    explicit unsupported_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace spectra
