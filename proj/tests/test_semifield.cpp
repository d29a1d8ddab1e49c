#include <gtest/gtest.h>

#include <map>
#include <random>

#include "foldline/expression.hpp"
#include "foldline/polynomial.hpp"
#include "foldline/semifield.hpp"

using namespace foldline;

namespace {

VariableSetPtr xyz() { return make_variables({"x", "y", "z"}); }

// Random subtraction-free expression over x, y, z, small constants.
Expr random_expr(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 5 : 1);
  Expr e;
  switch (pick(rng)) {
    case 0:
      e.op = Expr::Op::constant;
      e.value = std::uniform_int_distribution<int>(1, 3)(rng);
      return e;
    case 1:
      e.op = Expr::Op::variable;
      e.name = std::string(1, "xyz"[std::uniform_int_distribution<int>(0, 2)(rng)]);
      return e;
    case 2:
      e.op = Expr::Op::add;
      break;
    case 3:
      e.op = Expr::Op::mul;
      break;
    case 4:
      e.op = Expr::Op::div;
      break;
    default:
      e.op = Expr::Op::pow;
      e.value = std::uniform_int_distribution<int>(0, 2)(rng);
      e.args.push_back(random_expr(rng, depth - 1));
      return e;
  }
  e.args.push_back(random_expr(rng, depth - 1));
  e.args.push_back(random_expr(rng, depth - 1));
  return e;
}

// Plain min-plus evaluation written independently of the library models.
std::int64_t min_plus(const Expr& e, const std::map<std::string, std::int64_t>& at) {
  switch (e.op) {
    case Expr::Op::constant:
      return 0;
    case Expr::Op::variable:
      return at.at(e.name);
    case Expr::Op::add:
      return std::min(min_plus(e.args[0], at), min_plus(e.args[1], at));
    case Expr::Op::mul:
      return min_plus(e.args[0], at) + min_plus(e.args[1], at);
    case Expr::Op::div:
      return min_plus(e.args[0], at) - min_plus(e.args[1], at);
    case Expr::Op::pow:
      return e.value * min_plus(e.args[0], at);
  }
  return 0;
}

// Plain rational evaluation with mpq_class.
mpq_class rational(const Expr& e, const std::map<std::string, mpq_class>& at) {
  switch (e.op) {
    case Expr::Op::constant:
      return e.value;
    case Expr::Op::variable:
      return at.at(e.name);
    case Expr::Op::add:
      return rational(e.args[0], at) + rational(e.args[1], at);
    case Expr::Op::mul:
      return rational(e.args[0], at) * rational(e.args[1], at);
    case Expr::Op::div:
      return rational(e.args[0], at) / rational(e.args[1], at);
    case Expr::Op::pow: {
      mpq_class b = rational(e.args[0], at), out = 1;
      for (int k = 0; k < e.value; ++k) out *= b;
      return out;
    }
  }
  return 0;
}

}  // namespace

TEST(Semifield, TropicalOperations) {
  EXPECT_EQ(TropInt{3} + TropInt{-2}, TropInt{-2});
  EXPECT_EQ(TropInt{3} * TropInt{-2}, TropInt{1});
  EXPECT_EQ(TropInt{3} / TropInt{-2}, TropInt{5});
  EXPECT_EQ(iota(0), TropInt{0});
  EXPECT_EQ(iota_inv(iota(7)), 7);
  EXPECT_EQ((TropNat(4) / TropNat(1)).value(), 3);
  try {
    (void)(TropNat(1) / TropNat(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::tropnat_underflow);
  }
  try {
    iota_nat(-1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::tropnat_underflow);
  }
}

TEST(Semifield, PosRational) {
  EXPECT_EQ(PosRational(1, 2) + PosRational(1, 3), PosRational(5, 6));
  EXPECT_EQ(PosRational(2, 3) / PosRational(4, 9), PosRational(3, 2));
  EXPECT_THROW(PosRational(0), Error);
  EXPECT_THROW(PosRational(-1, 2), Error);
  EXPECT_EQ(to_string(PosRational(6, 4)), "3/2");
}

TEST(Semifield, NfoldSum) {
  EXPECT_EQ(nfold_sum(2, PosRational(3)), PosRational(6));
  EXPECT_EQ(nfold_sum(2, TropInt{3}), TropInt{3});
  auto v = make_variables({"c"});
  auto c = SymRat::variable(v, "c");
  auto two_c = nfold_sum(2, c);
  EXPECT_TRUE(sym_equal(two_c, SymRat::constant(v, 2) * c));
  EXPECT_EQ(two_c.to_string(), "2*c");
  EXPECT_THROW(nfold_sum(0, TropInt{1}), Error);
  EXPECT_EQ(to_string(nfold_sum(3, SemifieldValue(PosRational(1, 3)))), "1");
}

TEST(Semifield, SymEqualExamples) {
  auto v = xyz();
  auto x = SymRat::variable(v, "x"), y = SymRat::variable(v, "y");
  EXPECT_TRUE(sym_equal(x + y, y + x));
  EXPECT_TRUE(sym_equal(x * y / (x + x), x * y / (SymRat::constant(v, 2) * x)));
  auto abcd = make_variables({"a", "b", "c", "d"});
  auto a = SymRat::variable(abcd, "a"), b = SymRat::variable(abcd, "b"), c = SymRat::variable(abcd, "c"),
       d = SymRat::variable(abcd, "d");
  EXPECT_FALSE(sym_equal(a * b + a * d + c * d, a * b + a * d + c * d + a * b * d));
  EXPECT_THROW(sym_equal(x, a), Error);
}

TEST(Semifield, ClassicIdentities) {
  auto v = xyz();
  auto x = SymRat::variable(v, "x"), y = SymRat::variable(v, "y"), z = SymRat::variable(v, "z");
  // the 3-move is an involution
  auto s = x + z;
  auto x1 = y * z / s, y1 = s, z1 = x * y / s;
  auto s1 = x1 + z1;
  EXPECT_TRUE(sym_equal(y1 * z1 / s1, x));
  EXPECT_TRUE(sym_equal(s1, y));
  EXPECT_TRUE(sym_equal(x1 * y1 / s1, z));
  EXPECT_TRUE(x1 * y1 / s1 == z);
  EXPECT_TRUE(sym_equal((x + y) * (x + y), x * x + nfold_sum(2, x * y) + y * y));
}

TEST(Semifield, RandomExpressionsAgainstOracles) {
  std::mt19937_64 rng(17);
  auto v = xyz();
  for (int trial = 0; trial < 300; ++trial) {
    const Expr e = random_expr(rng, 4);
    std::map<std::string, std::int64_t> ti;
    std::map<std::string, mpq_class> qi;
    for (const char* n : {"x", "y", "z"}) {
      ti[n] = std::uniform_int_distribution<int>(-9, 9)(rng);
      qi[n] = mpq_class(std::uniform_int_distribution<int>(1, 9)(rng), std::uniform_int_distribution<int>(1, 5)(rng));
      qi[n].canonicalize();
    }
    const auto t = evaluate<TropInt>(e, [&](const std::string& n) { return TropInt{ti[n]}; }, TropInt{0});
    EXPECT_EQ(t.value, min_plus(e, ti));

    const auto q = evaluate<PosRational>(e, [&](const std::string& n) { return PosRational(qi[n]); }, PosRational(1));
    EXPECT_EQ(q.value(), rational(e, qi));

    // SymRat evaluation is a homomorphism to the rationals
    const auto s = evaluate<SymRat>(e, [&](const std::string& n) { return SymRat::variable(v, n); },
                                    SymRat::constant(v, 1));
    const std::vector<mpq_class> point{qi["x"], qi["y"], qi["z"]};
    EXPECT_EQ(s.evaluate(point), rational(e, qi));
    EXPECT_TRUE(s.numerator().nonnegative());
    EXPECT_TRUE(s.denominator().nonnegative());
  }
}

TEST(Semifield, ParsedExpressions) {
  auto e = parse_expression("a*b^2*c/(a*b^2+a*d^2+c*d^2+2*a*b*d)");
  std::vector<std::string> ids;
  collect_identifiers(e, ids);
  EXPECT_EQ(ids, (std::vector<std::string>{"a", "b", "c", "d"}));
  std::map<std::string, std::int64_t> at{{"a", 4}, {"b", 3}, {"c", 2}, {"d", 1}};
  EXPECT_EQ(min_plus(e, at), 4 + 6 + 2 - std::min({4 + 6, 4 + 2, 2 + 2, 4 + 3 + 1}));
  EXPECT_THROW(parse_expression("a-b"), Error);
  EXPECT_THROW(parse_expression("(a+b"), Error);
}

TEST(Semifield, TaggedValues) {
  SemifieldValue a = TropInt{2}, b = TropInt{5};
  EXPECT_TRUE(equal(add(a, b), SemifieldValue(TropInt{2})));
  EXPECT_TRUE(equal(div(a, b), SemifieldValue(TropInt{-3})));
  EXPECT_EQ(model_of(a), Model::tropz);
  try {
    add(a, SemifieldValue(PosRational(1)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::model_mismatch);
  }
  EXPECT_EQ(parse_model("sym"), Model::sym);
  EXPECT_THROW(parse_model("reals"), Error);
}

TEST(Polynomial, Arithmetic) {
  auto x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  auto p = (x + y) * (x + y);
  EXPECT_EQ(p.terms().size(), 3u);
  EXPECT_EQ(p.degree(), 2u);
  auto q = p.divide_exact(x + y);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, x + y);
  EXPECT_FALSE(p.divide_exact(x + y + y).has_value());
  EXPECT_TRUE((p - p).is_zero());
  auto r = p * mpz_class(6);
  EXPECT_EQ(r.content(), 6);
  const std::vector<std::string> names{"x", "y"};
  EXPECT_EQ((x * y * y).to_string(names), "x*y^2");
  const std::vector<mpz_class> pt{2, 3};
  EXPECT_EQ(p.evaluate(std::span<const mpz_class>(pt)), 25);
  EXPECT_EQ((x + y).pow(3).evaluate(std::span<const mpz_class>(pt)), 125);
}
