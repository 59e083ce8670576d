#pragma once

#include <stdexcept>
#include <string>

namespace chipfire {

/// Malformed arguments or input files.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A group computation was asked of a disconnected graph.
class NotConnectedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exponential oracle was asked to run past its size guard.
class SizeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace chipfire
