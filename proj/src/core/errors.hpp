#ifndef OPTICROUTE_CORE_ERRORS_HPP
#define OPTICROUTE_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace opticroute {

// Error taxonomy mirrored one-to-one by the C API status codes.

// A point, source, or trajectory falls outside the field's rectangle, or a
// value violates a mathematical domain (lambda <= 0, b <= 1, ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A caller-supplied parameter is malformed (bad step size, unsorted levels,
// too few trials, unparsable expression, ...).
class ParamError : public std::runtime_error {
 public:
  explicit ParamError(const std::string& what) : std::runtime_error(what) {}
};

// An operation was invoked before its prerequisites were established
// (e.g. evaluating an energy model before its table is built).
class StateError : public std::runtime_error {
 public:
  explicit StateError(const std::string& what) : std::runtime_error(what) {}
};

// An iterative method failed to converge (stagnated descent, unbracketed
// shooting angle, miss above tolerance).
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Shortest path could not reach the destination under the edge-length cap.
class UnreachableError : public std::runtime_error {
 public:
  explicit UnreachableError(const std::string& what) : std::runtime_error(what) {}
};

// File could not be read, written, or parsed.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace opticroute

#endif
