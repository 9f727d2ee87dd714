#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace ariadne {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries the 1-based line number of the offending line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An index (vertex, strategy) outside its valid range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Arguments that violate a documented precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A function evaluated outside its mathematical domain (e.g. a barrier outside its band).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The oracle refused an instance above its size cap.
class OracleRefused : public Error {
 public:
  using Error::Error;
};

/// A proven-invariant was observed to fail during a run. Carries a JSON diagnostic dump.
class InvariantFault : public Error {
 public:
  InvariantFault(const std::string& what, std::string dump)
      : Error(what), dump_(std::move(dump)) {}
  const std::string& dump() const noexcept { return dump_; }

 private:
  std::string dump_;
};

}  // namespace ariadne
