#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace foldline {

/// Sparse multivariate polynomial with integer coefficients over a fixed
/// number of variables. Terms are kept sorted by exponent vector in
/// descending lexicographic order with no zero coefficients.
class Polynomial {
 public:
  using Exponents = std::vector<std::uint32_t>;
  struct Term {
    Exponents exponents;
    mpz_class coefficient;
  };

  explicit Polynomial(std::size_t variables = 0) : vars_(variables) {}
  static Polynomial constant(std::size_t variables, const mpz_class& c);
  static Polynomial variable(std::size_t variables, std::size_t index);
  static Polynomial monomial(Exponents exponents, const mpz_class& c);

  std::size_t variables() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// Total degree; 0 for the zero polynomial.
  std::uint32_t degree() const;
  bool nonnegative() const;

  /// gcd of the coefficients, made positive (0 for the zero polynomial).
  mpz_class content() const;
  /// Componentwise minimum of the exponent vectors.
  Exponents monomial_content() const;
  /// Exact division by a monomial m*c that divides every term.
  Polynomial divide_monomial(const Exponents& m, const mpz_class& c) const;

  /// The quotient if `divisor` divides this polynomial exactly in Z[x].
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

  Polynomial pow(unsigned e) const;
  mpz_class evaluate(std::span<const mpz_class> point) const;
  mpq_class evaluate(std::span<const mpq_class> point) const;

  std::string to_string(std::span<const std::string> names) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const mpz_class& c);
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  /// Total order used for canonical factor lists.
  friend int compare(const Polynomial& a, const Polynomial& b);

 private:
  static Polynomial combine(std::size_t vars, std::vector<Term> terms);

  std::size_t vars_;
  std::vector<Term> terms_;
};

}  // namespace foldline
