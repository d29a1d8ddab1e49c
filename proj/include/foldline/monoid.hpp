#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "foldline/chamber.hpp"
#include "foldline/folding.hpp"
#include "foldline/semifield.hpp"

namespace foldline {

struct MonoidGenerator {
  std::size_t i = 0;
  std::int64_t n = 0;
};

/// Element of M0+ stored by its coordinates on the base word of w0.
struct MonoidElement {
  std::vector<std::int64_t> coords;
  friend bool operator==(const MonoidElement&, const MonoidElement&) = default;
};

/// The monoid M0+ of a simply laced datum in the N-valued model. Braid
/// paths between the base word and the words starting/ending with each
/// letter are computed once.
class Monoid {
 public:
  explicit Monoid(CartanDatum datum);

  const Chamber& chamber() const { return chamber_; }
  const CartanDatum& datum() const { return chamber_.datum(); }
  const Word& base_word() const { return chamber_.base_word(); }
  std::size_t rank() const { return datum().rank(); }
  std::size_t length() const { return chamber_.length(); }

  MonoidElement element(const std::vector<std::int64_t>& base_coords) const;
  MonoidElement normal_form(const Word& word, const std::vector<std::int64_t>& coords) const;
  /// Coordinates of m on another reduced word of w0.
  std::vector<std::int64_t> coords_on(const MonoidElement& m, const Word& word) const;

  /// xi_i^n m: on a word starting with i, c1 := min(n, c1).
  MonoidElement left_mul_gen(MonoidGenerator g, const MonoidElement& m) const;
  /// Same action computed through a caller-chosen reduced word starting with g.i.
  MonoidElement left_mul_gen_via(MonoidGenerator g, const MonoidElement& m, const Word& start_word) const;
  /// m xi_i^n: on a word ending with i, cN := min(n, cN).
  MonoidElement right_mul_gen(const MonoidElement& m, MonoidGenerator g) const;
  /// m1 m2 = xi^{c1} (... (xi^{cN} m2)) with c the base coordinates of m1.
  MonoidElement mul(const MonoidElement& m1, const MonoidElement& m2) const;

  MonoidElement sigma(const MonoidElement& m, const DiagramAutomorphism& s) const;
  bool is_sigma_fixed(const MonoidElement& m, const DiagramAutomorphism& s) const;
  MonoidElement frobenius(std::int64_t e, const MonoidElement& m) const;

  /// alpha_i coefficient of sum_k c_k gamma_k; an upper bound for l_i, and
  /// for r_j when alpha_i = -w0(alpha_j).
  std::int64_t weight_coefficient(const MonoidElement& m, std::size_t i) const;
  std::vector<std::int64_t> weight(const MonoidElement& m) const;

  /// Least a with xi_i^a m = m, by testing a = 0, 1, ...
  std::int64_t l_scan(const MonoidElement& m, std::size_t i) const;
  /// First coordinate on a word starting with i.
  std::int64_t l_coordinate(const MonoidElement& m, std::size_t i) const;
  std::int64_t r_scan(const MonoidElement& m, std::size_t i) const;
  std::int64_t r_coordinate(const MonoidElement& m, std::size_t i) const;

  /// For l_i(m) = 0: set the first coordinate on a word starting with i to n.
  MonoidElement raise_to(const MonoidElement& m, std::size_t i, std::int64_t n) const;
  MonoidElement lower_to_zero(const MonoidElement& m, std::size_t i) const;
  /// Adds one to the first coordinate on a word starting with i.
  MonoidElement raise(const MonoidElement& m, std::size_t i) const;

  /// Elements with base coordinates <= bound and the raise edges between them.
  std::string crystal_graph_dot(std::int64_t bound) const;

 private:
  struct Route {
    Word word;
    std::vector<BraidMove> from_base, to_base;
  };
  Route make_route(const Word& word) const;
  DecoratedWord<TropNat> on_route(const MonoidElement& m, const Route& r) const;
  MonoidElement back(const DecoratedWord<TropNat>& dw, const Route& r) const;

  Chamber chamber_;
  std::vector<Route> start_, end_;
  std::vector<std::vector<std::int64_t>> gammas_;  // gamma_k for the base word
  std::vector<std::size_t> dual_;                  // -w0(alpha_i) = alpha_{dual_[i]}
};

std::string to_string(const Monoid& monoid, const MonoidElement& m);

/// Product on folded coordinates: unfold both factors, multiply in M0+,
/// and read the sigma-fixed result back on f1's folded word.
std::vector<std::int64_t> folded_mul(const Folding& folding, const Monoid& monoid, const Word& folded_word,
                                     const std::vector<std::int64_t>& f1, const std::vector<std::int64_t>& f2);

/// sigma-fixed element of M0+ obtained by unfolding folded coordinates.
MonoidElement unfold_element(const Folding& folding, const Monoid& monoid, const Word& folded_word,
                             const std::vector<std::int64_t>& coords);

}  // namespace foldline
