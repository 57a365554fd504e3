#pragma once

#include <stdexcept>
#include <string>

namespace roaddiv {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Road (or derived curve) too short, self-overlapping or otherwise unusable.
class DegenerateRoadError : public Error {
 public:
  using Error::Error;
};

/// Numerical evaluation produced NaN or infinity.
class NonFiniteError : public Error {
 public:
  using Error::Error;
};

/// Two inputs that must have matching point counts do not.
class ShapeMismatchError : public Error {
 public:
  using Error::Error;
};

class EmptySegmentsError : public Error {
 public:
  using Error::Error;
};

class BadNormalizationError : public Error {
 public:
  using Error::Error;
};

class CompressorError : public Error {
 public:
  using Error::Error;
};

/// Trace and road ids do not agree.
class RoadMismatchError : public Error {
 public:
  using Error::Error;
};

/// A trace position could not be projected onto the road.
class ProjectionFailureError : public Error {
 public:
  using Error::Error;
};

class PoolTooSmallError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string file, long line = -1)
      : Error(line >= 0 ? file + ":" + std::to_string(line) + ": " + what : file + ": " + what),
        file_(std::move(file)),
        line_(line) {}

  const std::string& file() const { return file_; }
  long line() const { return line_; }

 private:
  std::string file_;
  long line_;
};

class SchemaMismatchError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace roaddiv
