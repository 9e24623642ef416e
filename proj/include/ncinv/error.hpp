#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ncinv {

enum class ErrorKind {
  InvalidArgument,
  InvalidAlgebra,
  FieldMismatch,
  SubspaceNotContained,
  CharTwo,
  ZeroParameter,
  UnsupportedCharacteristic,
  SizeBudgetExceeded,
  Unstable,
  InvalidRank,
  InvalidNodes,
  NonDivisible,
  CenterNotSplit,
  CenterNotTwoDim,
  NotCentralSimple,
  NonSquareDim,
  DegreeMismatch,
  NotSemisimple,
  UnknownDegree,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every ncinv operation. The kind is stable and is
/// what callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Three-valued answer for decisions that are only partially algorithmic.
enum class Decision { No, Yes, Unknown };

inline Decision decide(bool b) { return b ? Decision::Yes : Decision::No; }
std::string_view to_string(Decision d);

}  // namespace ncinv
