#include "foldline/semifield.hpp"

#include <algorithm>
#include <map>

namespace foldline {

TropNat::TropNat(std::int64_t v) : value_(v) {
  if (v < 0) throw Error(ErrorKind::tropnat_underflow, "tropical natural " + std::to_string(v) + " is negative");
}

TropNat operator/(TropNat a, TropNat b) {
  if (a.value() < b.value())
    throw Error(ErrorKind::tropnat_underflow, "tropical division " + std::to_string(a.value()) + " - " +
                                                  std::to_string(b.value()) + " leaves N");
  return TropNat(a.value() - b.value());
}

TropInt iota(std::int64_t n) { return {n}; }
TropNat iota_nat(std::int64_t n) { return TropNat(n); }

PosRational::PosRational(mpq_class q) : q_(std::move(q)) {
  q_.canonicalize();
  if (q_ <= 0) throw Error(ErrorKind::nonpositive_rational, q_.get_str() + " is not a positive rational");
}

PosRational::PosRational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::division_by_zero, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
  if (q_ <= 0) throw Error(ErrorKind::nonpositive_rational, q_.get_str() + " is not a positive rational");
}

std::size_t VariableSet::index_of(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw Error(ErrorKind::parse, "unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - names.begin());
}

VariableSetPtr make_variables(std::vector<std::string> names) {
  return std::make_shared<const VariableSet>(VariableSet{std::move(names)});
}

namespace {

struct PolyLess {
  bool operator()(const SymRat::FactorPtr& a, const SymRat::FactorPtr& b) const { return compare(*a, *b) < 0; }
};

void check_vars(const SymRat& a, const SymRat& b) {
  if (!a.variables() || !b.variables())
    throw Error(ErrorKind::model_mismatch, "uninitialized symbolic value");
  if (a.variables() != b.variables() && a.variables()->names != b.variables()->names)
    throw Error(ErrorKind::model_mismatch, "symbolic values over different variable sets");
}

const std::vector<mpz_class>& probe_point(std::size_t n) {
  // Distinct primes; a factor can only divide p exactly if its value here
  // divides p's value.
  static const std::vector<mpz_class> primes = [] {
    std::vector<mpz_class> out;
    for (long c = 2; out.size() < 64; ++c) {
      bool prime = true;
      for (long d = 2; d * d <= c; ++d)
        if (c % d == 0) prime = false;
      if (prime) out.emplace_back(c);
    }
    return out;
  }();
  if (n > primes.size()) throw Error(ErrorKind::internal, "too many variables");
  return primes;
}

mpq_class power(const mpq_class& base, int e) {
  mpq_class out = 1;
  const int n = e < 0 ? -e : e;
  for (int k = 0; k < n; ++k) out *= base;
  if (e < 0) out = 1 / out;
  return out;
}

}  // namespace

class SymRatBuilder {
 public:
  explicit SymRatBuilder(VariableSetPtr vars) : vars_(std::move(vars)) {}

  void multiply(const SymRat& s, int sign) {
    scale_ = sign > 0 ? mpq_class(scale_ * s.scale_) : mpq_class(scale_ / s.scale_);
    for (const auto& f : s.factors_) add_factor(f.poly, sign * f.exponent);
  }

  void scale_by(const mpq_class& c) { scale_ *= c; }

  void add_factor(const SymRat::FactorPtr& f, int e) {
    if (e == 0) return;
    auto [it, inserted] = factors_.try_emplace(f, 0);
    it->second += e;
    if (it->second == 0) factors_.erase(it);
  }

  /// Multiplies by p^e, splitting off content, monomials and known factors.
  void absorb(const Polynomial& p, int e, const std::vector<SymRat::FactorPtr>& candidates) {
    if (p.is_zero()) throw Error(ErrorKind::division_by_zero, "zero polynomial in a symbolic value");
    if (!p.nonnegative()) throw Error(ErrorKind::model_mismatch, "polynomial has negative coefficients");
    const std::size_t n = vars_->names.size();
    mpz_class c = p.content();
    scale_ *= power(mpq_class(c), e);
    auto mono = p.monomial_content();
    for (std::size_t v = 0; v < n; ++v)
      if (mono[v] > 0) add_factor(std::make_shared<const Polynomial>(Polynomial::variable(n, v)),
                                  static_cast<int>(mono[v]) * e);
    Polynomial rest = p.divide_monomial(mono, c);
    if (rest.is_one()) return;

    const auto& point = probe_point(n);
    std::span<const mpz_class> pt(point.data(), n);
    mpz_class rest_value = rest.evaluate(pt);
    for (const auto& cand : candidates) {
      if (cand->terms().size() < 2) continue;
      const mpz_class cand_value = cand->evaluate(pt);
      while (cand->degree() <= rest.degree() &&
             mpz_divisible_p(rest_value.get_mpz_t(), cand_value.get_mpz_t())) {
        auto q = rest.divide_exact(*cand);
        if (!q || !q->nonnegative()) break;
        add_factor(cand, e);
        rest = std::move(*q);
        if (rest.is_one()) return;
        rest_value /= cand_value;
      }
    }
    add_factor(std::make_shared<const Polynomial>(std::move(rest)), e);
  }

  SymRat build() {
    SymRat out;
    out.vars_ = vars_;
    scale_.canonicalize();
    out.scale_ = scale_;
    out.factors_.reserve(factors_.size());
    for (auto& [f, e] : factors_) out.factors_.push_back({f, e});
    return out;
  }

 private:
  VariableSetPtr vars_;
  mpq_class scale_{1};
  std::map<SymRat::FactorPtr, int, PolyLess> factors_;
};

SymRat SymRat::constant(VariableSetPtr vars, const mpq_class& c) {
  if (c <= 0) throw Error(ErrorKind::nonpositive_rational, "symbolic constants must be positive");
  SymRat s;
  s.vars_ = std::move(vars);
  s.scale_ = c;
  s.scale_.canonicalize();
  return s;
}

SymRat SymRat::variable(VariableSetPtr vars, std::size_t index) {
  const std::size_t n = vars->names.size();
  if (index >= n) throw Error(ErrorKind::parse, "variable index out of range");
  SymRat s;
  s.vars_ = std::move(vars);
  s.factors_.push_back({std::make_shared<const Polynomial>(Polynomial::variable(n, index)), 1});
  return s;
}

SymRat SymRat::variable(VariableSetPtr vars, const std::string& name) {
  auto index = vars->index_of(name);
  return variable(std::move(vars), index);
}

SymRat SymRat::fraction(VariableSetPtr vars, const Polynomial& num, const Polynomial& den) {
  SymRatBuilder b(vars);
  b.absorb(num, 1, {});
  b.absorb(den, -1, {});
  return b.build();
}

Polynomial SymRat::numerator() const {
  const std::size_t n = vars_->names.size();
  Polynomial out = Polynomial::constant(n, scale_.get_num());
  for (const auto& f : factors_)
    if (f.exponent > 0) out = out * f.poly->pow(static_cast<unsigned>(f.exponent));
  return out;
}

Polynomial SymRat::denominator() const {
  const std::size_t n = vars_->names.size();
  Polynomial out = Polynomial::constant(n, scale_.get_den());
  for (const auto& f : factors_)
    if (f.exponent < 0) out = out * f.poly->pow(static_cast<unsigned>(-f.exponent));
  return out;
}

mpq_class SymRat::evaluate(std::span<const mpq_class> point) const {
  mpq_class out = scale_;
  for (const auto& f : factors_) out *= power(f.poly->evaluate(point), f.exponent);
  out.canonicalize();
  return out;
}

std::string SymRat::to_string() const {
  const auto& names = vars_->names;
  auto wrap = [&](const Polynomial& p) {
    auto text = p.to_string(names);
    return p.terms().size() > 1 ? "(" + text + ")" : text;
  };
  const auto den = denominator();
  if (den.is_one()) return numerator().to_string(names);
  return wrap(numerator()) + " / " + wrap(den);
}

SymRat operator*(const SymRat& a, const SymRat& b) {
  check_vars(a, b);
  SymRatBuilder out(a.vars_);
  out.multiply(a, 1);
  out.multiply(b, 1);
  return out.build();
}

SymRat operator/(const SymRat& a, const SymRat& b) {
  check_vars(a, b);
  SymRatBuilder out(a.vars_);
  out.multiply(a, 1);
  out.multiply(b, -1);
  return out.build();
}

SymRat operator+(const SymRat& a, const SymRat& b) {
  check_vars(a, b);
  const std::size_t n = a.vars_->names.size();
  SymRatBuilder out(a.vars_);
  Polynomial pa = Polynomial::constant(n, 1), pb = Polynomial::constant(n, 1);
  std::vector<SymRat::FactorPtr> shared_denominators, others;

  // Walk both sorted factor lists; the common part min(ea, eb) stays factored.
  auto ia = a.factors_.begin(), ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    SymRat::FactorPtr f;
    int ea = 0, eb = 0;
    if (ib == b.factors_.end() || (ia != a.factors_.end() && compare(*ia->poly, *ib->poly) < 0)) {
      f = ia->poly;
      ea = (ia++)->exponent;
    } else if (ia == a.factors_.end() || compare(*ib->poly, *ia->poly) < 0) {
      f = ib->poly;
      eb = (ib++)->exponent;
    } else {
      f = ia->poly;
      ea = (ia++)->exponent;
      eb = (ib++)->exponent;
    }
    const int g = std::min(ea, eb);
    out.add_factor(f, g);
    if (ea - g > 0) pa = pa * f->pow(static_cast<unsigned>(ea - g));
    if (eb - g > 0) pb = pb * f->pow(static_cast<unsigned>(eb - g));
    (g < 0 ? shared_denominators : others).push_back(f);
  }

  const mpz_class& na = a.scale_.get_num();
  const mpz_class& da = a.scale_.get_den();
  const mpz_class& nb = b.scale_.get_num();
  const mpz_class& db = b.scale_.get_den();
  Polynomial sum = pa * mpz_class(na * db) + pb * mpz_class(nb * da);
  out.scale_by(mpq_class(1, 1) / mpq_class(mpz_class(da * db)));
  shared_denominators.insert(shared_denominators.end(), others.begin(), others.end());
  out.absorb(sum, 1, shared_denominators);
  return out.build();
}

bool sym_equal(const SymRat& a, const SymRat& b) {
  check_vars(a, b);
  SymRat q = a / b;
  if (q.factors().empty()) return q.scale() == 1;
  return q.numerator() == q.denominator();
}

bool operator==(const SymRat& a, const SymRat& b) { return sym_equal(a, b); }

std::string to_string(const TropInt& a) { return std::to_string(a.value); }
std::string to_string(const TropNat& a) { return std::to_string(a.value()); }
std::string to_string(const PosRational& a) { return a.value().get_str(); }

Model parse_model(const std::string& name) {
  if (name == "rat") return Model::rat;
  if (name == "tropz") return Model::tropz;
  if (name == "tropn") return Model::tropn;
  if (name == "sym") return Model::sym;
  throw Error(ErrorKind::usage, "unknown semifield '" + name + "' (expected rat|tropz|tropn|sym)");
}

std::string to_string(Model m) {
  switch (m) {
    case Model::rat: return "rat";
    case Model::tropz: return "tropz";
    case Model::tropn: return "tropn";
    case Model::sym: return "sym";
  }
  return "?";
}

Model model_of(const SemifieldValue& v) { return static_cast<Model>(v.index()); }

namespace {

template <class Op>
SemifieldValue binary(const SemifieldValue& a, const SemifieldValue& b, Op op) {
  return std::visit(
      [&](const auto& x, const auto& y) -> SemifieldValue {
        using X = std::decay_t<decltype(x)>;
        using Y = std::decay_t<decltype(y)>;
        if constexpr (std::is_same_v<X, Y>) {
          return op(x, y);
        } else {
          throw Error(ErrorKind::model_mismatch, "operands belong to different semifield models");
        }
      },
      a, b);
}

}  // namespace

SemifieldValue add(const SemifieldValue& a, const SemifieldValue& b) {
  return binary(a, b, [](const auto& x, const auto& y) { return x + y; });
}
SemifieldValue mul(const SemifieldValue& a, const SemifieldValue& b) {
  return binary(a, b, [](const auto& x, const auto& y) { return x * y; });
}
SemifieldValue div(const SemifieldValue& a, const SemifieldValue& b) {
  return binary(a, b, [](const auto& x, const auto& y) { return x / y; });
}
SemifieldValue nfold_sum(int k, const SemifieldValue& a) {
  return std::visit([&](const auto& x) -> SemifieldValue { return nfold_sum(k, x); }, a);
}
bool equal(const SemifieldValue& a, const SemifieldValue& b) {
  if (a.index() != b.index()) throw Error(ErrorKind::model_mismatch, "operands belong to different semifield models");
  return std::visit(
      [&](const auto& x) {
        using X = std::decay_t<decltype(x)>;
        return x == std::get<X>(b);
      },
      a);
}
std::string to_string(const SemifieldValue& v) {
  return std::visit([](const auto& x) { return to_string(x); }, v);
}

}  // namespace foldline
