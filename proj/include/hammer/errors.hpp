// Error types shared across the toolchain.
#pragma once

#include <stdexcept>
#include <string>

namespace hammer {

struct HammerError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : HammerError {
  int line;
  int col;
  ParseError(const std::string& msg, int line_, int col_)
      : HammerError(msg + " (line " + std::to_string(line_) + ", column " +
                    std::to_string(col_) + ")"),
        line(line_), col(col_) {}
};

// infer_type could not assign a type; callers usually degrade to "not a Prop".
struct Untypeable : HammerError {
  using HammerError::HammerError;
};

// Head reduction hit its step budget; the term is treated as opaque.
struct BudgetExceeded : HammerError {
  using HammerError::HammerError;
};

struct UnknownName : HammerError {
  using HammerError::HammerError;
};

struct ArityClash : HammerError {
  using HammerError::HammerError;
};

struct NonTelescopeConstructor : HammerError {
  using HammerError::HammerError;
};

struct NotAProp : HammerError {
  using HammerError::HammerError;
};

struct UnknownLemma : HammerError {
  using HammerError::HammerError;
};

struct MissingTable : HammerError {
  using HammerError::HammerError;
};

struct NotPropositional : HammerError {
  using HammerError::HammerError;
};

struct SpawnFailed : HammerError {
  using HammerError::HammerError;
};

}  // namespace hammer
