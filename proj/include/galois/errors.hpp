#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace galois {

enum class ErrorKind {
  ZeroPolynomial,
  ConstantPolynomial,
  DivisionByZero,
  ZeroInverse,
  NotPrime,
  NotIrreducible,
  NotMonic,
  TowerMismatch,
  NotASubgroup,
  NotNormal,
  NotADivisor,
  DegreeCap,
  OrderCap,
  Budget,
  SearchExhausted,
  ParseError,
  InternalInvariant,
};

std::string_view error_kind_name(ErrorKind kind);

/// Base of every exception thrown by the engine. The kind decides the CLI
/// exit code, the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void check_invariant(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::InternalInvariant, what);
}

}  // namespace galois
