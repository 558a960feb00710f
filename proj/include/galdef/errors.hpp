#pragma once

#include <stdexcept>
#include <string>

namespace galdef {

// Domain-rule violation (bad ell, q^2 = 1 where forbidden, ...). CLI exit code 4.
struct invalid_parameters : std::runtime_error {
    explicit invalid_parameters(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or insufficient input data (newform files, schema). CLI exit code 3.
struct data_error : std::runtime_error {
    explicit data_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal consistency assertion failed; indicates a bug, not bad input.
struct invariant_violation : std::logic_error {
    explicit invariant_violation(const std::string& msg) : std::logic_error(msg) {}
};

// Requested computation exceeds the dense-representation budget.
struct too_large : std::runtime_error {
    explicit too_large(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace galdef
