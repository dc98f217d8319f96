#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace cubesum {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ZeroInput : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class NonIntegralResult : public Error {
 public:
  using Error::Error;
};

/// Every coefficient satisfies the equation (both sides vanish identically).
class Indeterminate : public Error {
 public:
  using Error::Error;
};

class VectorlikePair : public Error {
 public:
  using Error::Error;
};

class NotASolution : public Error {
 public:
  using Error::Error;
};

/// A family generator was called with parameters its construction excludes.
/// The message names the violated condition.
class ExcludedParameters : public Error {
 public:
  using Error::Error;
};

/// a=9 parameters outside the canonical domain; carries the equivalent
/// canonical pair when one exists.
class NonCanonicalParameters : public Error {
 public:
  NonCanonicalParameters(const std::string& what,
                         std::optional<std::pair<long, long>> canonical)
      : Error(what), canonical_(canonical) {}

  const std::optional<std::pair<long, long>>& canonical() const { return canonical_; }

 private:
  std::optional<std::pair<long, long>> canonical_;
};

class OutOfTheoremScope : public Error {
 public:
  using Error::Error;
};

class InvalidCoefficient : public Error {
 public:
  using Error::Error;
};

class SingularCurve : public Error {
 public:
  using Error::Error;
};

}  // namespace cubesum
