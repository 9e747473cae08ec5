#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hecke_lab {

enum class ErrorCode {
  InvalidRank,
  InvalidType,
  DecorationNotClassConstant,
  LatticeNotIntermediate,
  NotInLattice,
  DatumMismatch,
  HilbertBasisOverflow,
  NotAFullOrbit,
  NegativePowersPresent,
  ArithmeticOverflow,
  CharacterExtends,
  NoIndexTwoStructure,
  NotSimplyLaced,
  NotSplitAtV0,
  RelationsFail,
  UnhandledCase,
  InvalidInput,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// RelationsFail and UnhandledCase mean a broken internal invariant rather
  /// than bad input.
  bool is_internal() const noexcept {
    return code_ == ErrorCode::RelationsFail || code_ == ErrorCode::UnhandledCase ||
           code_ == ErrorCode::ArithmeticOverflow;
  }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(to_string(code)) + ": " + what);
}

}  // namespace hecke_lab
