#include "foldline/polynomial.hpp"

#include <algorithm>
#include <map>

#include "foldline/error.hpp"

namespace foldline {

namespace {

bool descending(const Polynomial::Term& a, const Polynomial::Term& b) { return a.exponents > b.exponents; }

void check_same(const Polynomial& a, const Polynomial& b) {
  if (a.variables() != b.variables())
    throw Error(ErrorKind::model_mismatch, "polynomials over different variable counts");
}

}  // namespace

Polynomial Polynomial::combine(std::size_t vars, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), descending);
  Polynomial out(vars);
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().exponents == t.exponents) {
      out.terms_.back().coefficient += t.coefficient;
    } else {
      if (!out.terms_.empty() && out.terms_.back().coefficient == 0) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && out.terms_.back().coefficient == 0) out.terms_.pop_back();
  return out;
}

Polynomial Polynomial::constant(std::size_t variables, const mpz_class& c) {
  Polynomial p(variables);
  if (c != 0) p.terms_.push_back({Exponents(variables, 0), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t variables, std::size_t index) {
  Polynomial p(variables);
  Exponents e(variables, 0);
  e.at(index) = 1;
  p.terms_.push_back({std::move(e), 1});
  return p;
}

Polynomial Polynomial::monomial(Exponents exponents, const mpz_class& c) {
  Polynomial p(exponents.size());
  if (c != 0) p.terms_.push_back({std::move(exponents), c});
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && std::all_of(terms_[0].exponents.begin(), terms_[0].exponents.end(),
                                            [](auto e) { return e == 0; }));
}

bool Polynomial::is_one() const { return is_constant() && !terms_.empty() && terms_[0].coefficient == 1; }

std::uint32_t Polynomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) {
    std::uint32_t s = 0;
    for (auto e : t.exponents) s += e;
    d = std::max(d, s);
  }
  return d;
}

bool Polynomial::nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coefficient > 0; });
}

mpz_class Polynomial::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coefficient.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Polynomial::Exponents Polynomial::monomial_content() const {
  if (terms_.empty()) return Exponents(vars_, 0);
  Exponents m = terms_[0].exponents;
  for (const auto& t : terms_)
    for (std::size_t v = 0; v < vars_; ++v) m[v] = std::min(m[v], t.exponents[v]);
  return m;
}

Polynomial Polynomial::divide_monomial(const Exponents& m, const mpz_class& c) const {
  Polynomial out = *this;
  for (auto& t : out.terms_) {
    for (std::size_t v = 0; v < vars_; ++v) t.exponents[v] -= m[v];
    mpz_divexact(t.coefficient.get_mpz_t(), t.coefficient.get_mpz_t(), c.get_mpz_t());
  }
  return out;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  check_same(*this, divisor);
  if (divisor.is_zero()) throw Error(ErrorKind::division_by_zero, "polynomial division by zero");
  if (is_zero()) return Polynomial(vars_);
  const auto& lead = divisor.terms_.front();
  std::vector<Term> quotient;
  Polynomial rest = *this;
  while (!rest.is_zero()) {
    const auto& top = rest.terms_.front();
    Exponents e(vars_);
    for (std::size_t v = 0; v < vars_; ++v) {
      if (top.exponents[v] < lead.exponents[v]) return std::nullopt;
      e[v] = top.exponents[v] - lead.exponents[v];
    }
    if (!mpz_divisible_p(top.coefficient.get_mpz_t(), lead.coefficient.get_mpz_t())) return std::nullopt;
    mpz_class c = top.coefficient / lead.coefficient;
    auto q = monomial(e, c);
    rest = rest - q * divisor;
    quotient.push_back({std::move(e), std::move(c)});
  }
  return combine(vars_, std::move(quotient));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(vars_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

mpz_class Polynomial::evaluate(std::span<const mpz_class> point) const {
  mpz_class sum = 0, term, p;
  for (const auto& t : terms_) {
    term = t.coefficient;
    for (std::size_t v = 0; v < vars_; ++v) {
      if (t.exponents[v] == 0) continue;
      mpz_pow_ui(p.get_mpz_t(), point[v].get_mpz_t(), t.exponents[v]);
      term *= p;
    }
    sum += term;
  }
  return sum;
}

mpq_class Polynomial::evaluate(std::span<const mpq_class> point) const {
  mpq_class sum = 0;
  for (const auto& t : terms_) {
    mpq_class term = t.coefficient;
    for (std::size_t v = 0; v < vars_; ++v)
      for (std::uint32_t k = 0; k < t.exponents[v]; ++k) term *= point[v];
    sum += term;
  }
  sum.canonicalize();
  return sum;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    mpz_class c = t.coefficient;
    if (k > 0) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    c = abs(c);
    std::string mono;
    for (std::size_t v = 0; v < vars_; ++v) {
      if (t.exponents[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[v];
      if (t.exponents[v] > 1) mono += "^" + std::to_string(t.exponents[v]);
    }
    if (mono.empty()) out += c.get_str();
    else if (c == 1) out += mono;
    else out += c.get_str() + "*" + mono;
  }
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  check_same(a, b);
  std::vector<Polynomial::Term> terms;
  terms.reserve(a.terms_.size() + b.terms_.size());
  terms.insert(terms.end(), a.terms_.begin(), a.terms_.end());
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return Polynomial::combine(a.vars_, std::move(terms));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  check_same(a, b);
  std::vector<Polynomial::Term> terms;
  terms.reserve(a.terms_.size() + b.terms_.size());
  terms.insert(terms.end(), a.terms_.begin(), a.terms_.end());
  for (const auto& t : b.terms_) terms.push_back({t.exponents, -t.coefficient});
  return Polynomial::combine(a.vars_, std::move(terms));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same(a, b);
  const std::size_t n = a.vars_;
  std::map<Polynomial::Exponents, mpz_class, std::greater<>> acc;
  Polynomial::Exponents e(n);
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) {
      for (std::size_t v = 0; v < n; ++v) e[v] = x.exponents[v] + y.exponents[v];
      auto [it, inserted] = acc.try_emplace(e, 0);
      mpz_addmul(it->second.get_mpz_t(), x.coefficient.get_mpz_t(), y.coefficient.get_mpz_t());
    }
  Polynomial out(n);
  out.terms_.reserve(acc.size());
  for (auto& [exps, c] : acc)
    if (c != 0) out.terms_.push_back({exps, std::move(c)});
  return out;
}

Polynomial operator*(const Polynomial& a, const mpz_class& c) {
  if (c == 0) return Polynomial(a.vars_);
  Polynomial out = a;
  for (auto& t : out.terms_) t.coefficient *= c;
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (a.terms_[k].exponents != b.terms_[k].exponents || a.terms_[k].coefficient != b.terms_[k].coefficient)
      return false;
  return true;
}

int compare(const Polynomial& a, const Polynomial& b) {
  if (a.vars_ != b.vars_) return a.vars_ < b.vars_ ? -1 : 1;
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    const auto& x = a.terms_[k];
    const auto& y = b.terms_[k];
    if (x.exponents != y.exponents) return x.exponents < y.exponents ? -1 : 1;
    if (int c = cmp(x.coefficient, y.coefficient); c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

}  // namespace foldline
