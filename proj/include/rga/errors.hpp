#pragma once

#include <stdexcept>
#include <string>

namespace rga {

// Thrown when an enumeration-based routine would exceed its configured size
// cap. Carries the offending instance size so callers can report or adjust
// instead of hanging on an exponential search.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, int instance_size, int cap)
      : std::runtime_error(what + ": size " + std::to_string(instance_size) +
                           " exceeds cap " + std::to_string(cap)),
        instance_size_(instance_size),
        cap_(cap) {}

  int instance_size() const { return instance_size_; }
  int cap() const { return cap_; }

 private:
  int instance_size_;
  int cap_;
};

// Malformed text input (edge lists, CSV). line() is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace rga
