#pragma once

#include <stdexcept>
#include <string>

namespace strobe {

// Thrown when an element norm leaves the sanity window: iteration must abort
// loudly, never continue on a silently rescaled value.
class NumericalInstabilityError : public std::runtime_error {
public:
    explicit NumericalInstabilityError(const std::string& what) : std::runtime_error(what) {}
};

// Integration hit a non-finite state; carries the last theta that was still good.
class IntegrationError : public std::runtime_error {
public:
    IntegrationError(const std::string& what, double last_good_theta)
        : std::runtime_error(what), last_good_theta_(last_good_theta) {}
    double last_good_theta() const { return last_good_theta_; }

private:
    double last_good_theta_;
};

// An operation was handed input outside its supported domain (e.g. closure
// arithmetic on a config without exact angle annotations).
class UnsupportedInputError : public std::invalid_argument {
public:
    explicit UnsupportedInputError(const std::string& what) : std::invalid_argument(what) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace strobe
