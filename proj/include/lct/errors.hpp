#pragma once

#include <stdexcept>
#include <string>

namespace lct {

// Base for every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A vertex id outside 0..n-1.
class invalid_vertex : public error {
 public:
  using error::error;
};

// Two paths whose union is neither a path nor a cycle.
class not_composable : public error {
 public:
  using error::error;
};

// Operation needs a cycle but the graph is a forest.
class no_cycle : public error {
 public:
  using error::error;
};

// Input exceeds the exhaustive-search ceiling of an operation.
class size_limit : public error {
 public:
  size_limit(const std::string& what, int limit)
      : error(what + " (limit " + std::to_string(limit) + ")"), limit_(limit) {}
  int limit() const noexcept { return limit_; }

 private:
  int limit_;
};

// Caller violated a documented precondition.
class precondition_error : public error {
 public:
  using error::error;
};

// Malformed textual input; line is 1-based, 0 when unknown.
class parse_error : public error {
 public:
  parse_error(const std::string& what, int line)
      : error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace lct
