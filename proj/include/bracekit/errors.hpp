#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bracekit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `offset()` is the byte offset (or line number,
/// for line-oriented formats) of the first offending position.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : Error(message + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// An exhaustive routine hit its configured limit. Distinct from a negative
/// answer: callers must not treat it as one.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string what, std::uint64_t partial)
      : Error("budget exceeded in " + what + " after " + std::to_string(partial) + " items"),
        what_(std::move(what)),
        partial_(partial) {}

  const std::string& operation() const noexcept { return what_; }
  std::uint64_t partial_count() const noexcept { return partial_; }

 private:
  std::string what_;
  std::uint64_t partial_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotMatchingCovered : public PreconditionError {
 public:
  NotMatchingCovered() : PreconditionError("graph is not matching covered") {}
};

class TooSmall : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class UnknownFixture : public Error {
 public:
  explicit UnknownFixture(const std::string& name) : Error("unknown fixture: " + name) {}
};

}  // namespace bracekit
