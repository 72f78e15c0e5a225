#ifndef LERAY_ERRORS_HPP
#define LERAY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace leray {

// Bad input: malformed files, precondition violations, out-of-range vertices.
// The CLI maps this to exit code 1.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap was exceeded (facet-count caps for the subset DPs,
// permutation-oracle cap, window-enumeration cap). CLI exit code 2.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency check backed by a proved identity failed.
// CLI exit code 3.
struct InvariantViolation : std::runtime_error {
    explicit InvariantViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace leray

#endif
