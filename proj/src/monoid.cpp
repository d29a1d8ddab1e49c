#include "foldline/monoid.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace foldline {

namespace {

std::vector<TropNat> to_nat(const std::vector<std::int64_t>& c) {
  std::vector<TropNat> out;
  out.reserve(c.size());
  for (auto v : c) out.emplace_back(v);
  return out;
}

std::vector<std::int64_t> from_nat(const std::vector<TropNat>& c) {
  std::vector<std::int64_t> out;
  out.reserve(c.size());
  for (const auto& v : c) out.push_back(v.value());
  return out;
}

}  // namespace

Monoid::Monoid(CartanDatum datum) : chamber_(std::move(datum)) {
  const auto& g = chamber_.group();
  for (std::size_t i = 0; i < rank(); ++i) {
    start_.push_back(make_route(g.w0_word_starting_with(i)));
    end_.push_back(make_route(g.w0_word_ending_with(i)));
  }
  const Word& base = base_word();
  WeylElement prefix = g.identity();
  for (std::size_t letter : base) {
    std::vector<std::int64_t> unit(rank(), 0);
    unit[letter] = 1;
    gammas_.push_back(prefix.apply(unit));
    prefix = prefix * g.reflection(letter);
  }
  for (std::size_t i = 0; i < rank(); ++i) {
    std::vector<std::int64_t> unit(rank(), 0);
    unit[i] = 1;
    const auto image = g.longest().apply(unit);
    const auto it = std::find(image.begin(), image.end(), -1);
    dual_.push_back(static_cast<std::size_t>(it - image.begin()));
  }
}

Monoid::Route Monoid::make_route(const Word& word) const {
  return {word, braid_path(datum(), base_word(), word), braid_path(datum(), word, base_word())};
}

MonoidElement Monoid::element(const std::vector<std::int64_t>& base_coords) const {
  if (base_coords.size() != length())
    throw Error(ErrorKind::usage, "expected " + std::to_string(length()) + " coordinates, got " +
                                      std::to_string(base_coords.size()));
  for (auto v : base_coords)
    if (v < 0) throw Error(ErrorKind::tropnat_underflow, "monoid coordinates must be nonnegative");
  return {base_coords};
}

MonoidElement Monoid::normal_form(const Word& word, const std::vector<std::int64_t>& coords) const {
  chamber_.require_reduced(word);
  if (coords.size() != word.size()) throw Error(ErrorKind::usage, "coordinate count does not match the word");
  const auto cp = chamber_.canonical(DecoratedWord<TropNat>{word, to_nat(coords)});
  return {from_nat(cp.coords)};
}

std::vector<std::int64_t> Monoid::coords_on(const MonoidElement& m, const Word& word) const {
  return from_nat(chamber_.realize(ChamberPoint<TropNat>{base_word(), to_nat(m.coords)}, word).coords);
}

DecoratedWord<TropNat> Monoid::on_route(const MonoidElement& m, const Route& r) const {
  return apply_path(datum(), DecoratedWord<TropNat>{base_word(), to_nat(m.coords)}, r.from_base);
}

MonoidElement Monoid::back(const DecoratedWord<TropNat>& dw, const Route& r) const {
  return {from_nat(apply_path(datum(), dw, r.to_base).coords)};
}

MonoidElement Monoid::left_mul_gen(MonoidGenerator g, const MonoidElement& m) const {
  if (g.n < 0)
    throw Error(ErrorKind::negative_exponent, "xi_i^n with n < 0 does not act on M0+");
  const auto& r = start_.at(g.i);
  auto dw = on_route(m, r);
  dw.coords.front() = TropNat(std::min(g.n, dw.coords.front().value()));
  return back(dw, r);
}

MonoidElement Monoid::left_mul_gen_via(MonoidGenerator g, const MonoidElement& m, const Word& start_word) const {
  if (g.n < 0)
    throw Error(ErrorKind::negative_exponent, "xi_i^n with n < 0 does not act on M0+");
  chamber_.require_reduced(start_word);
  if (start_word.empty() || start_word.front() != g.i)
    throw Error(ErrorKind::usage, "word does not start with the generator's letter");
  auto c = coords_on(m, start_word);
  c.front() = std::min(g.n, c.front());
  return normal_form(start_word, c);
}

MonoidElement Monoid::right_mul_gen(const MonoidElement& m, MonoidGenerator g) const {
  if (g.n < 0)
    throw Error(ErrorKind::negative_exponent, "xi_i^n with n < 0 does not act on M0+");
  const auto& r = end_.at(g.i);
  auto dw = on_route(m, r);
  dw.coords.back() = TropNat(std::min(g.n, dw.coords.back().value()));
  return back(dw, r);
}

MonoidElement Monoid::mul(const MonoidElement& m1, const MonoidElement& m2) const {
  MonoidElement out = m2;
  const Word& base = base_word();
  for (std::size_t k = base.size(); k-- > 0;) out = left_mul_gen({base[k], m1.coords[k]}, out);
  return out;
}

MonoidElement Monoid::sigma(const MonoidElement& m, const DiagramAutomorphism& s) const {
  return {from_nat(chamber_.sigma_action(ChamberPoint<TropNat>{base_word(), to_nat(m.coords)}, s).coords)};
}

bool Monoid::is_sigma_fixed(const MonoidElement& m, const DiagramAutomorphism& s) const {
  return sigma(m, s) == m;
}

MonoidElement Monoid::frobenius(std::int64_t e, const MonoidElement& m) const {
  if (e < 1) throw Error(ErrorKind::usage, "Frobenius exponent must be >= 1");
  MonoidElement out = m;
  for (auto& v : out.coords) v *= e;
  return out;
}

std::vector<std::int64_t> Monoid::weight(const MonoidElement& m) const {
  std::vector<std::int64_t> w(rank(), 0);
  for (std::size_t k = 0; k < gammas_.size(); ++k)
    for (std::size_t i = 0; i < rank(); ++i) w[i] += m.coords[k] * gammas_[k][i];
  return w;
}

std::int64_t Monoid::weight_coefficient(const MonoidElement& m, std::size_t i) const { return weight(m).at(i); }

std::int64_t Monoid::l_scan(const MonoidElement& m, std::size_t i) const {
  const std::int64_t bound = weight_coefficient(m, i) + 1;
  for (std::int64_t a = 0; a <= bound; ++a)
    if (left_mul_gen({i, a}, m) == m) return a;
  throw Error(ErrorKind::internal, "l_i scan exceeded the weight bound");
}

std::int64_t Monoid::l_coordinate(const MonoidElement& m, std::size_t i) const {
  return on_route(m, start_.at(i)).coords.front().value();
}

std::int64_t Monoid::r_scan(const MonoidElement& m, std::size_t i) const {
  const std::int64_t bound = weight_coefficient(m, dual_.at(i)) + 1;
  for (std::int64_t a = 0; a <= bound; ++a)
    if (right_mul_gen(m, {i, a}) == m) return a;
  throw Error(ErrorKind::internal, "r_i scan exceeded the weight bound");
}

std::int64_t Monoid::r_coordinate(const MonoidElement& m, std::size_t i) const {
  return on_route(m, end_.at(i)).coords.back().value();
}

MonoidElement Monoid::raise_to(const MonoidElement& m, std::size_t i, std::int64_t n) const {
  if (n < 0) throw Error(ErrorKind::negative_exponent, "raise_to needs n >= 0");
  const auto& r = start_.at(i);
  auto dw = on_route(m, r);
  if (dw.coords.front().value() != 0)
    throw Error(ErrorKind::not_in_fiber, "raise_to needs l_i(m) = 0, got " + std::to_string(dw.coords.front().value()));
  dw.coords.front() = TropNat(n);
  return back(dw, r);
}

MonoidElement Monoid::lower_to_zero(const MonoidElement& m, std::size_t i) const { return left_mul_gen({i, 0}, m); }

MonoidElement Monoid::raise(const MonoidElement& m, std::size_t i) const {
  const auto& r = start_.at(i);
  auto dw = on_route(m, r);
  dw.coords.front() = TropNat(dw.coords.front().value() + 1);
  return back(dw, r);
}

std::string to_string(const Monoid& monoid, const MonoidElement& m) {
  std::ostringstream os;
  os << word_to_string(monoid.datum(), monoid.base_word(), " ") << " : (";
  for (std::size_t k = 0; k < m.coords.size(); ++k) os << (k ? "," : "") << m.coords[k];
  os << ")";
  return os.str();
}

std::string Monoid::crystal_graph_dot(std::int64_t bound) const {
  if (bound < 0) throw Error(ErrorKind::usage, "crystal bound must be >= 0");
  std::vector<MonoidElement> vertices;
  std::vector<std::int64_t> c(length(), 0);
  while (true) {
    vertices.push_back({c});
    std::size_t k = 0;
    while (k < c.size() && c[k] == bound) c[k++] = 0;
    if (k == c.size()) break;
    ++c[k];
  }
  std::map<std::vector<std::int64_t>, std::size_t> id;
  for (std::size_t v = 0; v < vertices.size(); ++v) id[vertices[v].coords] = v;

  std::ostringstream os;
  os << "digraph crystal {\n";
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    os << "  n" << v << " [label=\"(";
    for (std::size_t k = 0; k < vertices[v].coords.size(); ++k) os << (k ? "," : "") << vertices[v].coords[k];
    os << ")\"];\n";
  }
  for (std::size_t v = 0; v < vertices.size(); ++v)
    for (std::size_t i = 0; i < rank(); ++i) {
      auto it = id.find(raise(vertices[v], i).coords);
      if (it != id.end())
        os << "  n" << v << " -> n" << it->second << " [label=\"" << datum().labels()[i] << "\"];\n";
    }
  os << "}\n";
  return os.str();
}

MonoidElement unfold_element(const Folding& folding, const Monoid& monoid, const Word& folded_word,
                             const std::vector<std::int64_t>& coords) {
  const auto dw = folding.unfold(FoldedDecoratedWord<TropNat>{folded_word, to_nat(coords)});
  return monoid.normal_form(dw.word, from_nat(dw.coords));
}

std::vector<std::int64_t> folded_mul(const Folding& folding, const Monoid& monoid, const Word& folded_word,
                                     const std::vector<std::int64_t>& f1, const std::vector<std::int64_t>& f2) {
  if (!(folding.source() == monoid.datum()))
    throw Error(ErrorKind::usage, "folding and monoid are over different data");
  const auto m = monoid.mul(unfold_element(folding, monoid, folded_word, f1),
                            unfold_element(folding, monoid, folded_word, f2));
  if (!monoid.is_sigma_fixed(m, folding.sigma()))
    throw Error(ErrorKind::internal, "product of sigma-fixed elements is not sigma-fixed");
  const auto folded = folding.fold_coordinates(ChamberPoint<TropNat>{monoid.base_word(), to_nat(m.coords)}, folded_word);
  return from_nat(folded.coords);
}

}  // namespace foldline
