#pragma once

#include <stdexcept>
#include <string>

namespace fqgamma {

// Invalid mathematical input: poles, non-coprime arguments, malformed
// polynomials, reducible field moduli, and similar. CLI exit code 2.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured resource guard tripped (field size, enumeration size,
// adaptive-cutoff ceiling). The computation was refused, not attempted.
// CLI exit code 3.
struct guard_error : std::runtime_error {
    explicit guard_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A series did not carry enough known coefficients to decide the question
// asked of it. Distinct from domain_error so callers can retry at higher
// precision. CLI exit code 2.
struct precision_error : std::runtime_error {
    explicit precision_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fqgamma
