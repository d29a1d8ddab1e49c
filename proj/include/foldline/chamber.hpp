#pragma once

#include <optional>
#include <vector>

#include "foldline/cartan.hpp"
#include "foldline/semifield.hpp"
#include "foldline/weyl.hpp"

namespace foldline {

/// A reduced word for w0 with one semifield coordinate per letter.
template <Semifield K>
struct DecoratedWord {
  Word word;
  std::vector<K> coords;
};

template <Semifield K>
struct TraceStep {
  DecoratedWord<K> state;
  std::optional<BraidMove> move;  // move that produced `state`; empty for the start
};

template <Semifield K>
using Trace = std::vector<TraceStep<K>>;

/// Elementary move on a simply laced decorated word. r = 2 swaps two
/// orthogonal letters with their coordinates; r = 3 sends (x, y, z) on p p' p
/// to (yz/(x+z), x+z, xy/(x+z)) on p' p p'.
template <Semifield K>
DecoratedWord<K> apply_move(const CartanDatum& datum, const DecoratedWord<K>& dw, BraidMove move) {
  if (dw.coords.size() != dw.word.size())
    throw Error(ErrorKind::invalid_move, "coordinate count does not match word length");
  if (move.r != 2 && move.r != 3)
    throw Error(ErrorKind::invalid_move, "elementary moves exist only for r = 2 and r = 3");
  DecoratedWord<K> out{apply_braid(datum, dw.word, move), dw.coords};
  const std::size_t k = move.position;
  if (move.r == 2) {
    std::swap(out.coords[k], out.coords[k + 1]);
  } else {
    const K& x = dw.coords[k];
    const K& y = dw.coords[k + 1];
    const K& z = dw.coords[k + 2];
    const K s = x + z;
    out.coords[k] = y * z / s;
    out.coords[k + 1] = s;
    out.coords[k + 2] = x * y / s;
  }
  return out;
}

template <Semifield K>
DecoratedWord<K> apply_path(const CartanDatum& datum, DecoratedWord<K> dw, const std::vector<BraidMove>& path,
                            Trace<K>* trace = nullptr) {
  if (trace) trace->push_back({dw, std::nullopt});
  for (const auto& m : path) {
    dw = apply_move(datum, dw, m);
    if (trace) trace->push_back({dw, m});
  }
  return dw;
}

/// Coordinates transported along a braid-move path to `to`.
template <Semifield K>
DecoratedWord<K> transition(const CartanDatum& datum, const DecoratedWord<K>& from, const Word& to,
                            Trace<K>* trace = nullptr) {
  return apply_path(datum, from, braid_path(datum, from.word, to), trace);
}

template <Semifield K>
DecoratedWord<K> relabel(const DecoratedWord<K>& dw, const DiagramAutomorphism& sigma) {
  DecoratedWord<K> out = dw;
  for (auto& letter : out.word) letter = sigma(letter);
  return out;
}

/// A connected component of the decorated-word graph, stored as its
/// coordinates on the base word.
template <Semifield K>
struct ChamberPoint {
  Word base_word;
  std::vector<K> coords;
};

template <Semifield K>
bool coords_equal(const std::vector<K>& a, const std::vector<K>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!(a[k] == b[k])) return false;
  return true;
}

template <Semifield K>
bool operator==(const ChamberPoint<K>& a, const ChamberPoint<K>& b) {
  return a.base_word == b.base_word && coords_equal(a.coords, b.coords);
}

/// Decorated-word model of a simply laced datum, with the lexicographically
/// least reduced word of w0 as base point.
class Chamber {
 public:
  explicit Chamber(CartanDatum datum);

  const CartanDatum& datum() const { return group_.datum(); }
  const WeylGroup& group() const { return group_; }
  const Word& base_word() const { return base_; }
  std::size_t length() const { return base_.size(); }

  bool is_reduced(const Word& w) const { return group_.is_reduced_for(w, group_.longest()); }
  void require_reduced(const Word& w) const;

  template <Semifield K>
  DecoratedWord<K> transition(const DecoratedWord<K>& from, const Word& to, Trace<K>* trace = nullptr) const {
    require_reduced(from.word);
    require_reduced(to);
    return foldline::transition(datum(), from, to, trace);
  }

  template <Semifield K>
  ChamberPoint<K> canonical(const DecoratedWord<K>& dw) const {
    return {base_, transition(dw, base_).coords};
  }

  template <Semifield K>
  DecoratedWord<K> realize(const ChamberPoint<K>& cp, const Word& word) const {
    return transition(DecoratedWord<K>{cp.base_word, cp.coords}, word);
  }

  /// First coordinate on a reduced word starting with i.
  template <Semifield K>
  K lambda(const ChamberPoint<K>& cp, std::size_t i) const {
    return realize(cp, group_.w0_word_starting_with(i)).coords.front();
  }

  /// Last coordinate on a reduced word ending with i.
  template <Semifield K>
  K rho(const ChamberPoint<K>& cp, std::size_t i) const {
    return realize(cp, group_.w0_word_ending_with(i)).coords.back();
  }

  template <Semifield K>
  ChamberPoint<K> sigma_action(const ChamberPoint<K>& cp, const DiagramAutomorphism& sigma) const {
    return canonical(relabel(DecoratedWord<K>{cp.base_word, cp.coords}, sigma));
  }

  template <Semifield K>
  bool is_sigma_fixed(const ChamberPoint<K>& cp, const DiagramAutomorphism& sigma) const {
    return sigma_action(cp, sigma) == cp;
  }

 private:
  WeylGroup group_;
  Word base_;
};

}  // namespace foldline
