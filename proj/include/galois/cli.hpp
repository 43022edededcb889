#pragma once

// Command-line front end: a recursive-descent parser for polynomial
// expressions and the subcommand dispatcher.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "galois/errors.hpp"
#include "galois/numbers.hpp"
#include "galois/poly.hpp"

namespace galois {

/// ParseError with the byte offset of the offending token and what would
/// have been accepted there.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::vector<std::string> expected, const std::string& found);

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

/// Syntax tree of an expression over integers, a/b, names, + - * / ^ and
/// parentheses. `^` takes a nonnegative integer literal and binds tighter
/// than unary minus; juxtaposition is not multiplication.
struct Expr {
  enum class Op { Number, Name, Add, Sub, Mul, Div, Neg, Pow };
  Op op = Op::Number;
  Rational value;           // Number
  std::string name;         // Name
  unsigned long exponent = 0;  // Pow
  std::vector<Expr> args;
  std::size_t position = 0;
};

inline constexpr unsigned long kMaxExponent = 4096;
inline constexpr std::size_t kMaxNesting = 200;
inline constexpr long kMaxInputDegree = 4096;
inline constexpr long kMaxInputBits = 1L << 20;

Expr parse_expr(std::string_view src);

/// Upper bound on the degree in `var`; names other than `var` count as 0.
long degree_bound(const Expr& e, std::string_view var);

/// Rough bound on the bit size of the largest coefficient.
long bit_bound(const Expr& e);

/// DegreeCap or Budget when evaluating `e` as a polynomial in `var` over Q
/// could pass the input limits.
void check_input_size(const Expr& e, std::string_view var, bool rational);

/// Bottom-up evaluation. `leaf` maps Number and Name nodes to values and
/// `divide(a, b, node)` handles `/`.
template <class R, class Leaf, class Divide>
R evaluate(const Expr& e, const Leaf& leaf, const Divide& divide) {
  switch (e.op) {
    case Expr::Op::Number:
    case Expr::Op::Name:
      return leaf(e);
    case Expr::Op::Add:
      return evaluate<R>(e.args[0], leaf, divide) + evaluate<R>(e.args[1], leaf, divide);
    case Expr::Op::Sub:
      return evaluate<R>(e.args[0], leaf, divide) - evaluate<R>(e.args[1], leaf, divide);
    case Expr::Op::Mul:
      return evaluate<R>(e.args[0], leaf, divide) * evaluate<R>(e.args[1], leaf, divide);
    case Expr::Op::Div:
      return divide(evaluate<R>(e.args[0], leaf, divide), evaluate<R>(e.args[1], leaf, divide), e);
    case Expr::Op::Neg:
      return -evaluate<R>(e.args[0], leaf, divide);
    case Expr::Op::Pow: {
      R base = evaluate<R>(e.args[0], leaf, divide);
      R acc = scalar_like(base, 1);
      for (unsigned long k = e.exponent; k > 0; k >>= 1) {
        if (k & 1) acc = acc * base;
        if (k > 1) base = base * base;
      }
      return acc;
    }
  }
  fail(ErrorKind::InternalInvariant, "unknown expression node");
}

Rational convert_scalar(const Rational& q, const Rational& zero);
/// DivisionByZero when the denominator vanishes mod p.
FpScalar convert_scalar(const Rational& q, const FpScalar& zero);

/// A polynomial in t over Q. DegreeCap past kMaxInputDegree.
QPoly parse_poly_q(std::string_view src);

/// A polynomial in t reduced mod p. DivisionByZero when a denominator
/// vanishes mod p.
FpPoly parse_poly_fp(std::string_view src, std::uint64_t p);

/// 0 success, 1 domain error, 2 parse or usage error, 3 cap or budget
/// exceeded, 4 internal invariant violated.
int exit_code(ErrorKind kind);

/// Runs one command line; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace galois
