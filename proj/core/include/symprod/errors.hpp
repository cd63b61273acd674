#ifndef SYMPROD_ERRORS_HPP
#define SYMPROD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symprod {

// A caller violated a documented precondition (e.g. exp of a series with a
// nonzero constant term).
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Evaluation outside the domain of a Laurent polynomial (zero substituted
// for a variable that occurs with a negative exponent).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Malformed or invalid input document.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A mathematical identity that must hold by construction failed. Never caused
// by user data; always an implementation bug.
class identity_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A brute-force construction would exceed the configured dimension bound.
class bound_exceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

} // namespace symprod

#endif
