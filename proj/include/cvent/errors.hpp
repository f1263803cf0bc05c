#pragma once

#include <stdexcept>
#include <string>

namespace cvent {

/// A covariance matrix violates the uncertainty principle (some nu_k < 1).
class UnphysicalState : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mode labels collide when combining states.
class DuplicateMode : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A mode selection names labels the target state does not have.
class InvalidSelection : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Non-symmetric, non-finite, or wrongly shaped covariance input.
class MalformedState : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// PPT requested for a partition where it is only a necessary condition.
class UnsupportedPartition : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace cvent
