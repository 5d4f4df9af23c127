#pragma once

#include <stdexcept>
#include <string>

namespace rowmotion {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CycleError : public Error {
 public:
  using Error::Error;
};

/// A cover pair is implied by the transitive closure of the others.
class NotReducedError : public Error {
 public:
  using Error::Error;
};

class UnknownElementError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive operation was asked to run past its configured bound.
class SizeCapError : public Error {
 public:
  using Error::Error;
};

/// A state or word was used with the wrong kind (antichain, ideal, filter).
class KindError : public Error {
 public:
  using Error::Error;
};

class NotGradedError : public Error {
 public:
  using Error::Error;
};

class RankRangeError : public Error {
 public:
  using Error::Error;
};

/// A labeling is not a point of the polytope an operation requires.
class MembershipError : public Error {
 public:
  using Error::Error;
};

class SpaceMismatchError : public Error {
 public:
  using Error::Error;
};

class TruncatedOrbitError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace rowmotion
