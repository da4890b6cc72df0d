#pragma once

#include <stdexcept>
#include <string>

namespace uepopt {

// A constraint of the optimization problem cannot be satisfied; the message
// names the binding constraint (e.g. "C3").
class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

// An iterative numerical routine failed to converge; the message carries
// diagnostics (inputs, last iterate, residual).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// A file or config could not be parsed; the message names the location.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace uepopt
