#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace segcode {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of a binary operation have different dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A vertex label, index or permutation is out of range or malformed.
class LabelError : public Error {
 public:
  using Error::Error;
};

/// A brute-force search was asked to go beyond its configured size limit.
class CapExceededError : public Error {
 public:
  CapExceededError(const std::string& what, std::size_t cap)
      : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// A vector is zero or its 1-entries are not one contiguous block.
class NotSegmentError : public Error {
 public:
  explicit NotSegmentError(const std::string& what, std::size_t index = npos)
      : Error(what), index_(index) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  /// Column index for matrix validation, npos for a lone vector.
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Input violates a side condition (empty set, too few elements, p == q).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

class NotConnectedError : public Error {
 public:
  using Error::Error;
};

class ZeroColumnError : public Error {
 public:
  explicit ZeroColumnError(std::size_t index)
      : Error("column " + std::to_string(index) + " is zero"), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class DuplicateColumnError : public Error {
 public:
  DuplicateColumnError(std::size_t first, std::size_t second)
      : Error("columns " + std::to_string(first) + " and " + std::to_string(second) +
              " are equal"),
        first_(first),
        second_(second) {}

  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

/// A linear operator is singular or does not permute the segment set.
class NotStrongOperatorError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; indicates a library bug.
class InternalInvariantError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. line() is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace segcode
