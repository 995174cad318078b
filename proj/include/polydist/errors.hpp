#ifndef POLYDIST_ERRORS_HPP
#define POLYDIST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polydist {

// Thrown when an iterative method fails (bracket failure, no dimension jump,
// degenerate fit that cannot be recovered). Input validation problems use
// std::invalid_argument / std::domain_error instead; the CLI maps the two
// families to different exit codes.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace polydist

#endif
