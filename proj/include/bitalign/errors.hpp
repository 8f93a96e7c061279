#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bitalign {

// Base for every error raised by the library. Derived types carry the
// structured fields callers branch on; what() is human readable.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class WidthMismatch : public Error {
 public:
  WidthMismatch(std::size_t a, std::size_t b)
      : Error("bit row width mismatch: " + std::to_string(a) + " vs " +
              std::to_string(b)) {}
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

// Read of a table coordinate the storage predicate excludes. The improved
// traceback must never trigger this; see CompressedTable::pruned_access_count.
class PrunedAccess : public Error {
 public:
  PrunedAccess(std::size_t d, std::size_t j)
      : Error("pruned table entry accessed at d=" + std::to_string(d) +
              " j=" + std::to_string(j)),
        d_(d),
        j_(j) {}
  std::size_t d() const noexcept { return d_; }
  std::size_t j() const noexcept { return j_; }

 private:
  std::size_t d_;
  std::size_t j_;
};

class FrontierViolation : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  explicit NotFound(std::size_t k)
      : Error("no alignment within " + std::to_string(k) + " edits"), k_(k) {}
  std::size_t k() const noexcept { return k_; }

 private:
  std::size_t k_;
};

class StuckTraceback : public Error {
 public:
  using Error::Error;
};

class InvalidScript : public Error {
 public:
  using Error::Error;
};

class EmptyPattern : public Error {
 public:
  EmptyPattern() : Error("pattern must not be empty") {}
};

class WindowFailed : public Error {
 public:
  WindowFailed(std::size_t window, std::size_t k)
      : Error("window " + std::to_string(window) +
              " has no alignment within k=" + std::to_string(k)),
        window_(window),
        k_(k) {}
  std::size_t window() const noexcept { return window_; }
  std::size_t k() const noexcept { return k_; }

 private:
  std::size_t window_;
  std::size_t k_;
};

class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

class MalformedFasta : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class UnknownOperator : public Error {
 public:
  explicit UnknownOperator(char op)
      : Error(std::string("unknown CIGAR operator '") + op + "'"), op_(op) {}
  char op() const noexcept { return op_; }

 private:
  char op_;
};

class MalformedCigar : public Error {
 public:
  using Error::Error;
};

}  // namespace bitalign
