#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace prefrep {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unknown relation/attribute, arity mismatch, or an ill-typed constraint or query.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// A comparison between values of different domains, or an order comparison on constants.
class TypeError : public Error {
 public:
  using Error::Error;
};

/// Precondition violation on an operation argument (unknown fact, bad choice sequence, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Priority rejected by validation. For cycles, `cycle()` lists the facts on one cycle.
class PriorityError : public Error {
 public:
  explicit PriorityError(const std::string& what, std::vector<std::string> cycle = {})
      : Error(what), cycle_(std::move(cycle)) {}
  const std::vector<std::string>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<std::string> cycle_;
};

/// Repair enumeration exceeded its cap. Distinguishes "too many" from "none".
class EnumerationLimitError : public Error {
 public:
  explicit EnumerationLimitError(std::size_t cap)
      : Error("repair enumeration exceeded the limit of " + std::to_string(cap)), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// Input shape not supported by a specialised algorithm (e.g. the single-FD PCQA path).
class UnsupportedShapeError : public Error {
 public:
  using Error::Error;
};

/// Text input could not be parsed. `line()` is 1-based; 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace prefrep
