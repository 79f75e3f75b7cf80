#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace ecg {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A solver ran out of its vertex, node or time budget. Never a wrong answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

enum class ParseErrorKind {
  malformed_header,
  malformed_body,
  vertex_out_of_range,
  duplicate_edge,
  self_loop,
  non_symmetric_rotation,
  missing_outer_face,
};

const char* to_string(ParseErrorKind kind);

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, const std::string& what, int line = 0);

  ParseErrorKind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  ParseErrorKind kind_;
  int line_;
};

/// Input graph contains an induced P4 a-b-c-d.
class NotCograph : public Error {
 public:
  explicit NotCograph(std::array<int, 4> p4);
  const std::array<int, 4>& witness() const { return p4_; }

 private:
  std::array<int, 4> p4_;
};

/// Input graph contains an induced P4 or C4, listed in path/cycle order.
class NotTriviallyPerfect : public Error {
 public:
  NotTriviallyPerfect(std::array<int, 4> witness, bool is_cycle);
  const std::array<int, 4>& witness() const { return witness_; }
  bool is_cycle() const { return is_cycle_; }

 private:
  std::array<int, 4> witness_;
  bool is_cycle_;
};

class TriangleSeparatorPresent : public Error {
 public:
  explicit TriangleSeparatorPresent(std::array<int, 3> triangle);
  const std::array<int, 3>& witness() const { return triangle_; }

 private:
  std::array<int, 3> triangle_;
};

class Disconnected : public Error {
 public:
  using Error::Error;
};

class InvalidEmbedding : public Error {
 public:
  using Error::Error;
};

class InvalidDecomposition : public Error {
 public:
  using Error::Error;
};

/// A runtime check on an algorithm's own output failed. Indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ecg
