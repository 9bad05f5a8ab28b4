#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace kodim {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A manifold description failed structural validation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `offset` is the byte position of the failure and
/// `expected` lists the tokens that would have been accepted there.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& message);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
  std::string detail_;
};

}  // namespace kodim
