#include <cctype>

#include "galois/cli.hpp"

namespace galois {
namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : s_(src) {}

  Expr parse() {
    Expr e = expression();
    skip_space();
    if (i_ < s_.size()) error(operators(false));
    return e;
  }

 private:
  void skip_space() {
    while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t' || s_[i_] == '\n' || s_[i_] == '\r')) ++i_;
  }

  bool accept(char c) {
    skip_space();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  std::vector<std::string> operators(bool closing) const {
    std::vector<std::string> out;
    if (!after_exponent_) out.push_back("^");
    out.insert(out.end(), {"*", "/", "+", "-"});
    out.push_back(closing || depth_ > 0 ? ")" : "end of input");
    return out;
  }

  [[noreturn]] void error(std::vector<std::string> expected) const {
    std::string found = "end of input";
    if (i_ < s_.size()) {
      const auto c = static_cast<unsigned char>(s_[i_]);
      found = std::isprint(c) ? "'" + std::string(1, s_[i_]) + "'" : "byte " + std::to_string(c);
    }
    throw SyntaxError(i_, std::move(expected), found);
  }

  static Expr node(Expr::Op op, std::size_t pos, std::vector<Expr> args) {
    Expr e;
    e.op = op;
    e.position = pos;
    e.args = std::move(args);
    return e;
  }

  Expr expression() {
    Expr lhs = term();
    for (;;) {
      skip_space();
      const std::size_t pos = i_;
      if (accept('+')) {
        lhs = node(Expr::Op::Add, pos, {std::move(lhs), term()});
      } else if (accept('-')) {
        lhs = node(Expr::Op::Sub, pos, {std::move(lhs), term()});
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = unary();
    for (;;) {
      skip_space();
      const std::size_t pos = i_;
      if (accept('*')) {
        lhs = node(Expr::Op::Mul, pos, {std::move(lhs), unary()});
      } else if (accept('/')) {
        lhs = node(Expr::Op::Div, pos, {std::move(lhs), unary()});
      } else {
        return lhs;
      }
    }
  }

  Expr unary() {
    skip_space();
    const std::size_t pos = i_;
    if (accept('-')) {
      enter();
      Expr e = node(Expr::Op::Neg, pos, {unary()});
      --depth_unary_;
      return e;
    }
    if (accept('+')) {
      enter();
      Expr e = unary();
      --depth_unary_;
      return e;
    }
    return power();
  }

  void enter() {
    if (++depth_unary_ > kMaxNesting) error({"shallower nesting"});
  }

  Expr power() {
    Expr base = atom();
    after_exponent_ = false;
    skip_space();
    const std::size_t pos = i_;
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ == start) error({"nonnegative integer exponent"});
    const std::string digits(s_.substr(start, i_ - start));
    if (digits.size() > 6 || std::stoul(digits) > kMaxExponent) {
      i_ = start;
      error({"exponent at most " + std::to_string(kMaxExponent)});
    }
    Expr e = node(Expr::Op::Pow, pos, {std::move(base)});
    e.exponent = std::stoul(digits);
    after_exponent_ = true;
    return e;
  }

  Expr atom() {
    skip_space();
    after_exponent_ = false;
    const std::size_t pos = i_;
    if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      Expr e;
      e.op = Expr::Op::Number;
      e.position = pos;
      e.value = Rational(Integer(std::string(s_.substr(pos, i_ - pos)), 10));
      expect_operator();
      return e;
    }
    if (i_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      Expr e;
      e.op = Expr::Op::Name;
      e.position = pos;
      e.name = std::string(s_.substr(pos, i_ - pos));
      expect_operator();
      return e;
    }
    if (accept('(')) {
      if (++depth_ > kMaxNesting) {
        i_ = pos;
        error({"shallower nesting"});
      }
      Expr inner = expression();
      if (!accept(')')) {
        skip_space();
        error(operators(true));
      }
      --depth_;
      expect_operator();
      return inner;
    }
    error({"number", "name", "("});
  }

  // Juxtaposition such as "2t" or "t(t+1)" is rejected here.
  void expect_operator() {
    skip_space();
    if (i_ >= s_.size()) return;
    const auto c = static_cast<unsigned char>(s_[i_]);
    if (std::isalnum(c) || c == '_' || c == '(') error(operators(false));
  }

  std::string_view s_;
  std::size_t i_ = 0;
  std::size_t depth_ = 0;
  std::size_t depth_unary_ = 0;
  bool after_exponent_ = false;
};

FpScalar from_integer(const Integer& n, std::uint64_t p) {
  const Integer mod(static_cast<unsigned long>(p));
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), mod.get_mpz_t());
  return FpScalar(static_cast<std::int64_t>(mpz_get_ui(r.get_mpz_t())), p);
}

}  // namespace

long bit_bound(const Expr& e) {
  constexpr long cap = 1L << 40;
  switch (e.op) {
    case Expr::Op::Number:
      return static_cast<long>(mpz_sizeinbase(e.value.get_num_mpz_t(), 2) + mpz_sizeinbase(e.value.get_den_mpz_t(), 2));
    case Expr::Op::Name:
      return 1;
    case Expr::Op::Add:
    case Expr::Op::Sub:
      return std::max(bit_bound(e.args[0]), bit_bound(e.args[1])) + 1;
    case Expr::Op::Mul:
    case Expr::Op::Div:
      return std::min(cap, bit_bound(e.args[0]) + bit_bound(e.args[1]) + 13);
    case Expr::Op::Neg:
      return bit_bound(e.args[0]);
    case Expr::Op::Pow:
      return std::min(cap, (bit_bound(e.args[0]) + 13) * static_cast<long>(e.exponent));
  }
  return 0;
}

void check_input_size(const Expr& e, std::string_view var, bool rational) {
  if (degree_bound(e, var) > kMaxInputDegree) {
    fail(ErrorKind::DegreeCap, "input degree may exceed " + std::to_string(kMaxInputDegree));
  }
  if (rational && bit_bound(e) > kMaxInputBits) {
    fail(ErrorKind::Budget, "input coefficients may exceed " + std::to_string(kMaxInputBits) + " bits");
  }
}

Rational convert_scalar(const Rational& q, const Rational&) { return q; }

FpScalar convert_scalar(const Rational& q, const FpScalar& zero) {
  const std::uint64_t p = zero.modulus();
  const FpScalar den = from_integer(q.get_den(), p);
  if (den.residue() == 0) {
    fail(ErrorKind::DivisionByZero, "denominator " + q.get_den().get_str() + " vanishes mod " + std::to_string(p));
  }
  return from_integer(q.get_num(), p) / den;
}

namespace {

template <class K>
Poly<K> parse_poly(std::string_view src, const K& zero) {
  const Expr e = parse_expr(src);
  check_input_size(e, "t", characteristic(zero) == 0);
  auto leaf = [&](const Expr& x) {
    if (x.op == Expr::Op::Number) return Poly<K>::constant(convert_scalar(x.value, zero));
    if (x.name != "t") throw SyntaxError(x.position, {"t"}, "'" + x.name + "'");
    return Poly<K>::identity(zero);
  };
  auto divide = [&](const Poly<K>& a, const Poly<K>& b, const Expr& at) {
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero at position " + std::to_string(at.position));
    if (b.deg() != 0) throw SyntaxError(at.position, {"constant divisor"}, "'/' by a polynomial");
    return a * Poly<K>::constant(inverse(b[0]));
  };
  return evaluate<Poly<K>>(e, leaf, divide);
}

}  // namespace

SyntaxError::SyntaxError(std::size_t position, std::vector<std::string> expected, const std::string& found)
    : Error(ErrorKind::ParseError, "at position " + std::to_string(position) + ": expected " + join(expected) +
                                       ", found " + found),
      position_(position),
      expected_(std::move(expected)) {}

Expr parse_expr(std::string_view src) { return Parser(src).parse(); }

long degree_bound(const Expr& e, std::string_view var) {
  constexpr long cap = 1L << 40;
  switch (e.op) {
    case Expr::Op::Number:
      return 0;
    case Expr::Op::Name:
      return e.name == var ? 1 : 0;
    case Expr::Op::Add:
    case Expr::Op::Sub:
      return std::max(degree_bound(e.args[0], var), degree_bound(e.args[1], var));
    case Expr::Op::Mul:
      return std::min(cap, degree_bound(e.args[0], var) + degree_bound(e.args[1], var));
    case Expr::Op::Div:
    case Expr::Op::Neg:
      return degree_bound(e.args[0], var);
    case Expr::Op::Pow:
      return std::min(cap, degree_bound(e.args[0], var) * static_cast<long>(e.exponent));
  }
  return 0;
}

QPoly parse_poly_q(std::string_view src) { return parse_poly<Rational>(src, Rational(0)); }

FpPoly parse_poly_fp(std::string_view src, std::uint64_t p) { return parse_poly<FpScalar>(src, FpScalar(0, p)); }

}  // namespace galois
