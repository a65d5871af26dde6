#ifndef RM3_ERRORS_HPP_
#define RM3_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace rm3 {

// Base for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or structurally invalid input (CLI exit code 2).
struct input_error : error {
    explicit input_error(const std::string& msg) : error(msg) {}
};

// Parameters hit a degenerate locus: bad specialization, vanishing
// denominator, excluded parameter values (CLI exit code 3).
struct degenerate_error : error {
    explicit degenerate_error(const std::string& msg) : error(msg) {}
};

// A verification or internal consistency check failed (CLI exit code 1).
struct inconsistency_error : error {
    explicit inconsistency_error(const std::string& msg) : error(msg) {}
};

// No element of the cubic ring factors the given zeta numerator.
struct rm_failure_error : inconsistency_error {
    explicit rm_failure_error(const std::string& msg) : inconsistency_error(msg) {}
};

// More than one non-conjugate factorization was found.
struct ambiguity_error : inconsistency_error {
    explicit ambiguity_error(const std::string& msg) : inconsistency_error(msg) {}
};

}  // namespace rm3

#endif  // RM3_ERRORS_HPP_
