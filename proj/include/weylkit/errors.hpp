#ifndef WEYLKIT_ERRORS_HPP
#define WEYLKIT_ERRORS_HPP

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>

namespace weylkit {

/// Input that violates a documented precondition (bad picture, bad parameter).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical procedure could not produce a certified answer.
class NumericFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Query point too close to the curve for the winding number to be well posed.
class PointOnCurve : public NumericFailure {
 public:
  using NumericFailure::NumericFailure;
};

/// Curve collapses to (almost) a point; holes are undefined.
class DegenerateCurve : public NumericFailure {
 public:
  using NumericFailure::NumericFailure;
};

class ConvergenceFailure : public NumericFailure {
 public:
  using NumericFailure::NumericFailure;
};

class MissingMultiplicity : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class FlagMissing : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class SizeOutOfRange : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class UnknownName : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class InvalidPicture : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Symbol text rejected by the parser. Carries the byte offset of the
/// offending token and the set of tokens that would have been accepted.
class ParseError : public InvalidInput {
 public:
  ParseError(std::size_t offset, std::set<std::string> expected, const std::string& what)
      : InvalidInput(format(offset, expected, what)), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::set<std::string>& expected() const { return expected_; }

 private:
  static std::string format(std::size_t offset, const std::set<std::string>& expected,
                            const std::string& what) {
    std::string msg = "parse error at byte " + std::to_string(offset) + ": " + what;
    if (!expected.empty()) {
      msg += " (expected one of:";
      for (const auto& e : expected) msg += " " + e;
      msg += ")";
    }
    return msg;
  }

  std::size_t offset_;
  std::set<std::string> expected_;
};

}  // namespace weylkit

#endif  // WEYLKIT_ERRORS_HPP
