// Error taxonomy for the exact Lie-theory toolkit.
//
// Every failure the library can signal is a LieError carrying a stable code.
// The CLI maps codes onto process exit codes: malformed input -> 2,
// unsupported input (e.g. spectra outside the exactly representable class,
// dimension caps) -> 3, everything else that represents a violated
// mathematical precondition or property -> 1.
#pragma once

#include <stdexcept>
#include <string>

namespace liedual {

enum class Err {
  DIM_MISMATCH,
  SINGULAR,
  NON_SYMMETRIC,
  NOT_IN_SPAN,
  NOT_INVOLUTION,
  NOT_AUTOMORPHISM,
  NOT_COMMUTING,
  NOT_CARTAN,
  NOT_COMPACT,
  NOT_SEMISIMPLE,
  NOT_SIMPLE_SUMMAND,
  THETA_NOT_STABLE,
  NOT_IRREDUCIBLE,
  UNRECOGNIZED_PATTERN,
  ROOT_NOT_GAUSSIAN,
  NOT_IN_V,
  NON_INTEGER_GRADING,
  NOT_GRADE_REVERSING,
  NOT_IN_GAMMA,
  NOT_RIEMANNIAN,
  NOT_INVARIANT,
  BAD_PARAMS,
  UNKNOWN_WITNESS,
  MALFORMED,
  UNSUPPORTED,
  INTERNAL,
};

const char* err_name(Err e);

class LieError : public std::runtime_error {
 public:
  LieError(Err code, const std::string& detail)
      : std::runtime_error(std::string(err_name(code)) +
                           (detail.empty() ? "" : ": " + detail)),
        code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& detail = "") {
  throw LieError(code, detail);
}

inline void require(bool cond, Err code, const std::string& detail = "") {
  if (!cond) fail(code, detail);
}

}  // namespace liedual
