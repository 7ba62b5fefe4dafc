#pragma once

#include <stdexcept>
#include <string>

namespace scembed {

/// Malformed user input: bad manifests, unknown languages, unreadable files,
/// impossible queries. The CLI maps these to exit code 1.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A broken internal invariant: non-finite loss, a solver that cannot route
/// all mass. The CLI maps these to exit code 2.
class InternalError : public std::runtime_error {
 public:
  explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace scembed
