#pragma once

#include <stdexcept>
#include <string>

namespace mcrpc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidInstanceError : Error {
  using Error::Error;
};

struct IndexError : Error {
  using Error::Error;
};

struct CrossingPairError : Error {
  using Error::Error;
};

struct SizeLimitError : Error {
  using Error::Error;
};

struct IterationLimitError : Error {
  using Error::Error;
};

struct NonUniformWeightsError : Error {
  using Error::Error;
};

struct EmptyInstanceError : Error {
  using Error::Error;
};

struct Fig5ReconstructionError : Error {
  using Error::Error;
};

// Carries the offending location so file diagnostics can point at it.
struct ParseError : Error {
  ParseError(const std::string& where, const std::string& what)
      : Error(where + ": " + what), location(where), detail(what) {}
  std::string location;
  std::string detail;
};

}  // namespace mcrpc
