#include "foldline/expression.hpp"

#include <algorithm>
#include <cctype>

namespace foldline {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = sum();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw Error(ErrorKind::parse, what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static Expr node(Expr::Op op, Expr a, Expr b) {
    Expr e;
    e.op = op;
    e.args.push_back(std::move(a));
    e.args.push_back(std::move(b));
    return e;
  }

  Expr sum() {
    Expr e = product();
    while (eat('+')) e = node(Expr::Op::add, std::move(e), product());
    return e;
  }

  Expr product() {
    Expr e = power();
    for (;;) {
      if (eat('*')) e = node(Expr::Op::mul, std::move(e), power());
      else if (eat('/')) e = node(Expr::Op::div, std::move(e), power());
      else return e;
    }
  }

  Expr power() {
    Expr base = atom();
    if (!eat('^')) return base;
    skip();
    const bool braced = eat('{');
    skip();
    std::int64_t exponent = integer();
    if (braced && !eat('}')) fail("expected '}'");
    Expr e;
    e.op = Expr::Op::pow;
    e.value = exponent;
    e.args.push_back(std::move(base));
    return e;
  }

  std::int64_t integer() {
    skip();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected an integer");
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > (std::int64_t{1} << 40)) fail("integer too large");
    }
    return v;
  }

  Expr atom() {
    skip();
    if (eat('(')) {
      Expr e = sum();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      Expr e;
      e.value = integer();
      if (e.value < 1) fail("constants must be positive");
      return e;
    }
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      Expr e;
      e.op = Expr::Op::variable;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        e.name += text_[pos_++];
      return e;
    }
    fail("expected a number, identifier or '('");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expression(std::string_view text) { return Parser(text).parse(); }

void collect_identifiers(const Expr& e, std::vector<std::string>& out) {
  if (e.op == Expr::Op::variable) {
    if (std::find(out.begin(), out.end(), e.name) == out.end()) out.push_back(e.name);
    return;
  }
  for (const auto& a : e.args) collect_identifiers(a, out);
}

}  // namespace foldline
