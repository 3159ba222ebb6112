#ifndef FSIM_ERRORS_HPP
#define FSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fsim {

enum class ErrorKind {
  SingularTime,
  UndefinedPoint,
  OnSurface,
  NotAttractive,
  Degenerate,
  StepUnderflow,
  StepBudget,
  NoSignChange,
  InsufficientSamples,
  GapInDomain,
  LimitMismatch,
  OutOfDomain,
  TooSparse,
  IntervalTouchesSingularity,
  NonFinite,
  Parse,
  InvalidArgument,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace fsim

#endif
