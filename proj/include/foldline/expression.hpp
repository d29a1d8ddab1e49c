#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "foldline/semifield.hpp"

namespace foldline {

/// Subtraction-free expression: positive integers, identifiers, + * / and
/// ^ with a nonnegative integer exponent. Used for chain certificate data
/// and for coordinates given on the command line.
struct Expr {
  enum class Op { constant, variable, add, mul, div, pow };
  Op op = Op::constant;
  std::int64_t value = 0;    // constant, or exponent for pow
  std::string name;          // variable
  std::vector<Expr> args;
};

Expr parse_expression(std::string_view text);
/// Identifiers in order of first appearance.
void collect_identifiers(const Expr& e, std::vector<std::string>& out);

/// Evaluates in any semifield; integer constants n become the n-fold sum of
/// the unit, so 2 evaluates to 0 in the tropical models.
template <Semifield K, class Lookup>
K evaluate(const Expr& e, const Lookup& lookup, const K& one) {
  switch (e.op) {
    case Expr::Op::constant:
      return nfold_sum(static_cast<int>(e.value), one);
    case Expr::Op::variable:
      return lookup(e.name);
    case Expr::Op::add:
      return evaluate<K>(e.args[0], lookup, one) + evaluate<K>(e.args[1], lookup, one);
    case Expr::Op::mul:
      return evaluate<K>(e.args[0], lookup, one) * evaluate<K>(e.args[1], lookup, one);
    case Expr::Op::div:
      return evaluate<K>(e.args[0], lookup, one) / evaluate<K>(e.args[1], lookup, one);
    case Expr::Op::pow: {
      K base = evaluate<K>(e.args[0], lookup, one);
      K out = one;
      for (std::int64_t k = 0; k < e.value; ++k) out = out * base;
      return out;
    }
  }
  throw Error(ErrorKind::internal, "bad expression node");
}

}  // namespace foldline
