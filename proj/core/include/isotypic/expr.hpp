#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "isotypic/errors.hpp"
#include "isotypic/rational.hpp"

namespace isotypic {

/// Parsed arithmetic expression. The grammar covers what is needed to write
/// group words, field scalars and group-algebra elements the way they are
/// printed by hand:
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/')? unary)*        juxtaposition multiplies
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' exponent)?             exponent: [+-]int, {int}, (int)
///   primary := integer | ident | ident '(' expr ')' | '(' expr ')' | '{' expr '}'
///
/// `ident(expr)` becomes a Call node; evaluators decide whether the name is
/// a function or a symbol to multiply by.
struct Expr {
  enum class Kind { number, symbol, call, neg, add, sub, mul, div, pow };
  Kind kind = Kind::number;
  Rational number;
  std::string name;
  long exponent = 1;
  std::vector<Expr> args;
};

Expr parse_expression(std::string_view text);

/// Splits an identifier such as "xy" into a sequence of known symbols,
/// preferring longer matches. Returns an empty vector when no split exists.
std::vector<std::string> split_identifier(const std::string& ident, const std::vector<std::string>& known);

/// Evaluates an expression against an environment providing
///   V number(const Rational&), V symbol(const std::string&),
///   V call(const std::string&, V), V add(V, V), V sub(V, V), V mul(V, V),
///   V div(V, V), V neg(V), V pow(V, long).
template <class V, class Env>
V evaluate_expr(const Expr& e, Env& env) {
  switch (e.kind) {
    case Expr::Kind::number:
      return env.number(e.number);
    case Expr::Kind::symbol:
      return env.symbol(e.name);
    case Expr::Kind::call:
      return env.call(e.name, evaluate_expr<V>(e.args[0], env));
    case Expr::Kind::neg:
      return env.neg(evaluate_expr<V>(e.args[0], env));
    case Expr::Kind::add:
      return env.add(evaluate_expr<V>(e.args[0], env), evaluate_expr<V>(e.args[1], env));
    case Expr::Kind::sub:
      return env.sub(evaluate_expr<V>(e.args[0], env), evaluate_expr<V>(e.args[1], env));
    case Expr::Kind::mul:
      return env.mul(evaluate_expr<V>(e.args[0], env), evaluate_expr<V>(e.args[1], env));
    case Expr::Kind::div:
      return env.div(evaluate_expr<V>(e.args[0], env), evaluate_expr<V>(e.args[1], env));
    case Expr::Kind::pow:
      return env.pow(evaluate_expr<V>(e.args[0], env), e.exponent);
  }
  throw ValidationError("unreachable expression kind");
}

}  // namespace isotypic
