#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "foldline/error.hpp"
#include "foldline/polynomial.hpp"

namespace foldline {

// Four semifield models. In each, `+`, `*` and `/` are the semifield
// operations: for the tropical models they are min, integer +, integer -.

/// Tropical integers: the set iota(Z).
struct TropInt {
  std::int64_t value = 0;
  friend bool operator==(TropInt, TropInt) = default;
};

inline TropInt operator+(TropInt a, TropInt b) { return {a.value < b.value ? a.value : b.value}; }
inline TropInt operator*(TropInt a, TropInt b) { return {a.value + b.value}; }
inline TropInt operator/(TropInt a, TropInt b) { return {a.value - b.value}; }

/// Tropical naturals iota(N). Division is partial: going negative throws
/// ErrorKind::tropnat_underflow.
class TropNat {
 public:
  TropNat() = default;
  explicit TropNat(std::int64_t v);
  std::int64_t value() const { return value_; }
  friend bool operator==(TropNat, TropNat) = default;

 private:
  std::int64_t value_ = 0;
};

inline TropNat operator+(TropNat a, TropNat b) { return TropNat(a.value() < b.value() ? a.value() : b.value()); }
inline TropNat operator*(TropNat a, TropNat b) { return TropNat(a.value() + b.value()); }
TropNat operator/(TropNat a, TropNat b);

TropInt iota(std::int64_t n);
TropNat iota_nat(std::int64_t n);
inline std::int64_t iota_inv(TropInt a) { return a.value; }
inline std::int64_t iota_inv(TropNat a) { return a.value(); }

/// Strictly positive exact rationals.
class PosRational {
 public:
  PosRational() : q_(1) {}
  explicit PosRational(mpq_class q);
  PosRational(long num, long den = 1);
  const mpq_class& value() const { return q_; }
  friend bool operator==(const PosRational& a, const PosRational& b) { return a.q_ == b.q_; }

 private:
  mpq_class q_;
};

inline PosRational operator+(const PosRational& a, const PosRational& b) { return PosRational(mpq_class(a.value() + b.value())); }
inline PosRational operator*(const PosRational& a, const PosRational& b) { return PosRational(mpq_class(a.value() * b.value())); }
inline PosRational operator/(const PosRational& a, const PosRational& b) { return PosRational(mpq_class(a.value() / b.value())); }

struct VariableSet {
  std::vector<std::string> names;
  std::size_t index_of(const std::string& name) const;
};
using VariableSetPtr = std::shared_ptr<const VariableSet>;
VariableSetPtr make_variables(std::vector<std::string> names);

/// Subtraction-free rational function in a declared set of variables.
///
/// Stored as scale * prod f_k^{e_k} with a positive rational scale, integer
/// exponents and pairwise distinct polynomial factors that are primitive
/// with positive coefficients. Identical factors cancel on multiplication
/// and division; sums factor out the common part of both operands and
/// trial-divide the new polynomial by the factors already present. The
/// factorization is not unique, so equality falls back to comparing
/// num(a) den(b) with num(b) den(a) after expansion.
class SymRat {
 public:
  using FactorPtr = std::shared_ptr<const Polynomial>;
  struct Factor {
    FactorPtr poly;
    int exponent = 0;
  };

  SymRat() = default;
  static SymRat constant(VariableSetPtr vars, const mpq_class& c);
  static SymRat variable(VariableSetPtr vars, std::size_t index);
  static SymRat variable(VariableSetPtr vars, const std::string& name);
  /// Builds num/den from polynomials with nonnegative coefficients.
  static SymRat fraction(VariableSetPtr vars, const Polynomial& num, const Polynomial& den);

  const VariableSetPtr& variables() const { return vars_; }
  const mpq_class& scale() const { return scale_; }
  const std::vector<Factor>& factors() const { return factors_; }

  /// Expanded numerator and denominator (integer polynomials).
  Polynomial numerator() const;
  Polynomial denominator() const;

  mpq_class evaluate(std::span<const mpq_class> point) const;
  /// "poly / poly", monomials written like 2*a*b^2.
  std::string to_string() const;

  friend SymRat operator+(const SymRat& a, const SymRat& b);
  friend SymRat operator*(const SymRat& a, const SymRat& b);
  friend SymRat operator/(const SymRat& a, const SymRat& b);
  friend bool operator==(const SymRat& a, const SymRat& b);

 private:
  VariableSetPtr vars_;
  mpq_class scale_{1};
  std::vector<Factor> factors_;  // sorted by polynomial, exponents nonzero

  friend class SymRatBuilder;
};

/// num(a) den(b) == num(b) den(a); throws model_mismatch across variable sets.
bool sym_equal(const SymRat& a, const SymRat& b);

template <class K>
concept Semifield = std::copyable<K> && requires(const K& a, const K& b) {
  { a + b } -> std::same_as<K>;
  { a * b } -> std::same_as<K>;
  { a / b } -> std::same_as<K>;
  { a == b } -> std::convertible_to<bool>;
};

/// The multiplicative identity of the model `like` belongs to.
inline TropInt one_like(const TropInt&) { return {0}; }
inline TropNat one_like(const TropNat&) { return TropNat(0); }
inline PosRational one_like(const PosRational&) { return PosRational(1); }
inline SymRat one_like(const SymRat& s) { return SymRat::constant(s.variables(), 1); }

/// a added to itself k times.
template <Semifield K>
K nfold_sum(int k, const K& a) {
  if (k < 1) throw Error(ErrorKind::usage, "nfold_sum needs k >= 1");
  K out = a;
  for (int i = 1; i < k; ++i) out = out + a;
  return out;
}

std::string to_string(const TropInt& a);
std::string to_string(const TropNat& a);
std::string to_string(const PosRational& a);
inline std::string to_string(const SymRat& a) { return a.to_string(); }

enum class Model { rat, tropz, tropn, sym };
Model parse_model(const std::string& name);
std::string to_string(Model m);

/// Tagged value used at the CLI and serialization boundary.
using SemifieldValue = std::variant<PosRational, TropInt, TropNat, SymRat>;

Model model_of(const SemifieldValue& v);
SemifieldValue add(const SemifieldValue& a, const SemifieldValue& b);
SemifieldValue mul(const SemifieldValue& a, const SemifieldValue& b);
SemifieldValue div(const SemifieldValue& a, const SemifieldValue& b);
SemifieldValue nfold_sum(int k, const SemifieldValue& a);
bool equal(const SemifieldValue& a, const SemifieldValue& b);
std::string to_string(const SemifieldValue& v);

}  // namespace foldline
