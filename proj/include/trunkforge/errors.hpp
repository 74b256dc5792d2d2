#pragma once

#include <stdexcept>
#include <string>

namespace trunkforge {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unknown or malformed token while reading a word.
struct LexError : Error {
  int token_index;  // 1-based
  LexError(const std::string& msg, int index) : Error(msg), token_index(index) {}
};

// Slice-legality violation. event_index is 1-based; events.size()+1 means the
// word ended with strands still open.
struct ValidationError : Error {
  int event_index;
  ValidationError(const std::string& msg, int index) : Error(msg), event_index(index) {}
};

// Operation requires a single-component word and none was supplied.
struct MultiComponentError : Error {
  int count;
  MultiComponentError(const std::string& msg, int n) : Error(msg), count(n) {}
};

struct UnknownNameError : Error {
  using Error::Error;
};

struct InapplicableMoveError : Error {
  using Error::Error;
};

struct BudgetExceededError : Error {
  using Error::Error;
};

// Two independent computation routes disagreed. Always a bug, never an
// input condition.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace trunkforge
