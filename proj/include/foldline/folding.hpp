#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "foldline/cartan.hpp"
#include "foldline/chamber.hpp"
#include "foldline/semifield.hpp"
#include "foldline/weyl.hpp"

namespace foldline {

/// A reduced word for the longest element of the folded datum (letters are
/// orbit indices) with one coordinate per letter.
template <Semifield K>
struct FoldedDecoratedWord {
  Word word;
  std::vector<K> coords;
};

/// Per folded position j, a reduced word of w_{eta_j} in the letters of eta_j.
using OrbitWordFilling = std::vector<Word>;

/// Repetition counts eps_{j,k} (how often the k-th letter occurs in the block)
/// and eps_j = max_k eps_{j,k}.
struct BlockMultiplicity {
  std::vector<int> per_letter;
  int block = 1;
};

BlockMultiplicity block_multiplicity(const Word& block);

template <Semifield K>
struct BlockReading {
  FoldedDecoratedWord<K> folded;
  OrbitWordFilling filling;
};

/// Folding of a simply laced datum by a diagram automorphism, together with
/// the decorated-word models on both sides.
class Folding {
 public:
  Folding(CartanDatum source, DiagramAutomorphism sigma);
  static Folding from_builtin(const std::string& name);

  const CartanDatum& source() const { return chamber_.datum(); }
  const DiagramAutomorphism& sigma() const { return sigma_; }
  const FoldedDatum& folded() const { return folded_; }
  const Chamber& chamber() const { return chamber_; }
  const WeylGroup& folded_group() const { return folded_group_; }
  std::size_t folded_length() const { return folded_group_.longest_length(); }

  const OrbitLongest& orbit_longest(std::size_t eta) const { return orbit_longest_.at(eta); }
  /// All reduced words of w_eta, sorted.
  const std::vector<Word>& orbit_words(std::size_t eta) const { return orbit_words_.at(eta); }

  void require_folded_reduced(const Word& folded_word) const;
  OrbitWordFilling default_filling(const Word& folded_word) const;
  std::vector<OrbitWordFilling> all_fillings(const Word& folded_word) const;
  void check_filling(const Word& folded_word, const OrbitWordFilling& filling) const;
  Word unfold_word(const Word& folded_word, const OrbitWordFilling& filling) const;
  Word unfold_word(const Word& folded_word) const { return unfold_word(folded_word, default_filling(folded_word)); }

  /// Block j gets c_j where eps_{j,k} = eps_j, and c_j + c_j where eps_j = 2, eps_{j,k} = 1.
  template <Semifield K>
  DecoratedWord<K> unfold(const FoldedDecoratedWord<K>& fdw, const OrbitWordFilling& filling) const {
    require_folded_reduced(fdw.word);
    check_filling(fdw.word, filling);
    if (fdw.coords.size() != fdw.word.size())
      throw Error(ErrorKind::incompatible_filling, "coordinate count does not match the folded word");
    DecoratedWord<K> out;
    for (std::size_t j = 0; j < fdw.word.size(); ++j) {
      const auto mult = block_multiplicity(filling[j]);
      for (std::size_t k = 0; k < filling[j].size(); ++k) {
        out.word.push_back(filling[j][k]);
        out.coords.push_back(mult.per_letter[k] == mult.block ? fdw.coords[j] : nfold_sum(2, fdw.coords[j]));
      }
    }
    return out;
  }

  template <Semifield K>
  DecoratedWord<K> unfold(const FoldedDecoratedWord<K>& fdw) const {
    return unfold(fdw, default_filling(fdw.word));
  }

  /// The component of the unfolded decorated word; independent of the filling.
  template <Semifield K>
  ChamberPoint<K> s_map(const FoldedDecoratedWord<K>& fdw, const OrbitWordFilling& filling) const {
    return chamber_.canonical(unfold(fdw, filling));
  }

  template <Semifield K>
  ChamberPoint<K> s_map(const FoldedDecoratedWord<K>& fdw) const {
    return chamber_.canonical(unfold(fdw));
  }

  /// Splits an unfolded decorated word into orbit blocks and reads one
  /// coordinate per block, checking the (c, 2c, c) / (c, ..., c) pattern.
  template <Semifield K>
  BlockReading<K> read_blocks(const DecoratedWord<K>& dw) const {
    BlockReading<K> out;
    std::size_t pos = 0;
    while (pos < dw.word.size()) {
      const std::size_t eta = folded_.orbit_of.at(dw.word[pos]);
      const std::size_t len = orbit_longest_[eta].length;
      if (pos + len > dw.word.size())
        throw Error(ErrorKind::pattern_violation, "truncated orbit block at position " + std::to_string(pos + 1));
      Word block(dw.word.begin() + pos, dw.word.begin() + pos + len);
      const auto& words = orbit_words_[eta];
      if (!std::binary_search(words.begin(), words.end(), block))
        throw Error(ErrorKind::pattern_violation,
                    "letters at positions " + std::to_string(pos + 1) + ".." + std::to_string(pos + len) +
                        " do not form a reduced word of an orbit's longest element");
      const auto mult = block_multiplicity(block);
      std::size_t lead = 0;
      while (mult.per_letter[lead] != mult.block) ++lead;
      const K c = dw.coords[pos + lead];
      const K twice = nfold_sum(2, c);
      for (std::size_t k = 0; k < len; ++k) {
        const K& expected = mult.per_letter[k] == mult.block ? c : twice;
        if (!(dw.coords[pos + k] == expected))
          throw Error(ErrorKind::pattern_violation,
                      "coordinate " + std::to_string(pos + k + 1) + " breaks the folded block pattern");
      }
      out.folded.word.push_back(eta);
      out.folded.coords.push_back(c);
      out.filling.push_back(std::move(block));
      pos += len;
    }
    require_folded_reduced(out.folded.word);
    return out;
  }

  /// Coordinates of a sigma-fixed component on the folded word `target`.
  template <Semifield K>
  FoldedDecoratedWord<K> fold_coordinates(const ChamberPoint<K>& cp, const Word& target) const {
    require_folded_reduced(target);
    return read_blocks(chamber_.realize(cp, unfold_word(target))).folded;
  }

  template <Semifield K>
  FoldedDecoratedWord<K> folded_transition(const FoldedDecoratedWord<K>& fdw, const Word& target) const;

  /// lambda/rho of a folded component, read on folded words starting/ending with eta.
  template <Semifield K>
  K folded_lambda(const FoldedDecoratedWord<K>& fdw, std::size_t eta) const {
    return folded_transition(fdw, folded_group_.w0_word_starting_with(eta)).coords.front();
  }
  template <Semifield K>
  K folded_rho(const FoldedDecoratedWord<K>& fdw, std::size_t eta) const {
    return folded_transition(fdw, folded_group_.w0_word_ending_with(eta)).coords.back();
  }

  /// lambda_eta / rho_eta of a sigma-fixed component via a source node i in eta.
  template <Semifield K>
  K lambda_eta(const ChamberPoint<K>& cp, std::size_t eta, std::size_t member = 0) const {
    return chamber_.lambda(cp, folded_.orbits.at(eta).at(member));
  }
  template <Semifield K>
  K rho_eta(const ChamberPoint<K>& cp, std::size_t eta, std::size_t member = 0) const {
    return chamber_.rho(cp, folded_.orbits.at(eta).at(member));
  }

 private:
  DiagramAutomorphism sigma_;
  FoldedDatum folded_;
  Chamber chamber_;
  WeylGroup folded_group_;
  std::vector<OrbitLongest> orbit_longest_;
  std::vector<std::vector<Word>> orbit_words_;
};

/// Folded transition between two fixed folded words with the unfolded
/// braid path computed once; cheap to apply to many coordinate vectors.
class FoldedTransitionMap {
 public:
  FoldedTransitionMap(const Folding& folding, Word from, Word to);

  const Word& from() const { return from_; }
  const Word& to() const { return to_; }
  const std::vector<BraidMove>& unfolded_path() const { return path_; }

  template <Semifield K>
  FoldedDecoratedWord<K> apply(const std::vector<K>& coords, Trace<K>* trace = nullptr) const {
    auto start = folding_->unfold(FoldedDecoratedWord<K>{from_, coords}, filling_);
    auto end = apply_path(folding_->source(), start, path_, trace);
    return folding_->read_blocks(end).folded;
  }

 private:
  const Folding* folding_;
  Word from_, to_;
  OrbitWordFilling filling_;
  std::vector<BraidMove> path_;
};

template <Semifield K>
FoldedDecoratedWord<K> Folding::folded_transition(const FoldedDecoratedWord<K>& fdw, const Word& target) const {
  require_folded_reduced(target);
  return FoldedTransitionMap(*this, fdw.word, target).apply(fdw.coords);
}

/// The B2 transition on folded words (long, short, long, short) ->
/// (short, long, short, long) with coordinates (d, c, b, a) -> (d', c', b', a'):
///   d' = ab^2c/eps, c' = eps/alpha, b' = alpha^2/eps, a' = bcd/alpha,
///   alpha = ab + ad + cd, eps = ab^2 + ad^2 + cd^2 + 2abd.
template <Semifield K>
std::array<K, 4> b2_closed_form(const K& d, const K& c, const K& b, const K& a) {
  const K alpha = a * b + a * d + c * d;
  const K eps = a * b * b + a * d * d + c * d * d + nfold_sum(2, a * b * d);
  return {a * b * b * c / eps, eps / alpha, alpha * alpha / eps, b * c * d / alpha};
}

/// The same map on folded words (short, long, short, long) -> (long, short,
/// long, short): coordinates (a, b, c, d) go to (a', b', c', d').
template <Semifield K>
std::array<K, 4> b2_closed_form_reversed(const K& a, const K& b, const K& c, const K& d) {
  auto r = b2_closed_form(d, c, b, a);
  return {r[3], r[2], r[1], r[0]};
}

/// Piecewise-linear form of b2_closed_form on integers:
///   d' = a+2b+c - m2, c' = m2 - m1, b' = 2 m1 - m2, a' = b+c+d - m1,
///   m1 = min(a+b, a+d, c+d), m2 = min(a+2b, a+2d, c+2d).
std::array<std::int64_t, 4> b2_tropical(std::int64_t d, std::int64_t c, std::int64_t b, std::int64_t a);

/// The folded B2 datum realized from A3 (Dstyle:n=2) and from A4 (A4+flip).
class B2Models {
 public:
  B2Models();
  B2Models(const B2Models&) = delete;
  B2Models& operator=(const B2Models&) = delete;
  const Folding& from_a3() const { return a3_; }
  const Folding& from_a4() const { return a4_; }
  /// (long, short, long, short) and (short, long, short, long) as orbit indices.
  const Word& long_first() const { return long_first_; }
  const Word& short_first() const { return short_first_; }
  const FoldedTransitionMap& a3_map() const { return a3_map_; }
  const FoldedTransitionMap& a4_map() const { return a4_map_; }

  /// Transition long_first -> short_first computed in both source models; true iff they agree.
  template <Semifield K>
  bool compare_models(const std::vector<K>& coords) const {
    return coords_equal(a3_map_.apply(coords).coords, a4_map_.apply(coords).coords);
  }

 private:
  Folding a3_, a4_;
  Word long_first_, short_first_;
  FoldedTransitionMap a3_map_, a4_map_;
};

}  // namespace foldline
