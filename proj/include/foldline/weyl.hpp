#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "foldline/cartan.hpp"

namespace foldline {

/// A word is a sequence of node indices of a CartanDatum.
using Word = std::vector<std::size_t>;

/// Weyl group element as an integer matrix acting on the root lattice in the
/// basis of simple roots: column j holds the coordinates of w(alpha_j).
class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(std::size_t rank);  // identity

  std::size_t rank() const { return rank_; }
  std::int64_t at(std::size_t row, std::size_t col) const { return m_[row * rank_ + col]; }
  std::int64_t& at(std::size_t row, std::size_t col) { return m_[row * rank_ + col]; }
  const std::vector<std::int64_t>& entries() const { return m_; }

  std::vector<std::int64_t> apply(const std::vector<std::int64_t>& root) const;
  bool is_identity() const;

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<std::int64_t> m_;
};

/// Weyl group of a Cartan datum: simple reflections, positive roots, lengths.
class WeylGroup {
 public:
  explicit WeylGroup(CartanDatum datum);

  const CartanDatum& datum() const { return datum_; }
  std::size_t rank() const { return datum_.rank(); }
  const WeylElement& reflection(std::size_t i) const { return reflections_[i]; }
  const std::vector<std::vector<std::int64_t>>& positive_roots() const { return positive_roots_; }
  WeylElement identity() const { return WeylElement(rank()); }

  WeylElement product(const Word& word) const;
  /// Number of positive roots sent to negative roots.
  std::size_t length(const WeylElement& w) const;
  /// l(w s_i) < l(w), i.e. w(alpha_i) < 0.
  bool right_descent(const WeylElement& w, std::size_t i) const;
  bool left_descent(const WeylElement& w, std::size_t i) const;

  const WeylElement& longest() const { return longest_; }
  std::size_t longest_length() const { return longest_length_; }

  /// Reduced word obtained by peeling off the smallest right descent.
  Word greedy_word(const WeylElement& w) const;
  /// Lexicographically least reduced word (smallest left descent first).
  Word lex_least_word(const WeylElement& w) const;
  /// A reduced word for w0 whose first letter is i.
  Word w0_word_starting_with(std::size_t i) const;
  /// A reduced word for w0 whose last letter is i.
  Word w0_word_ending_with(std::size_t i) const;

  bool is_reduced_for(const Word& word, const WeylElement& w) const;

 private:
  CartanDatum datum_;
  std::vector<WeylElement> reflections_;
  std::vector<std::vector<std::int64_t>> positive_roots_;
  WeylElement longest_;
  std::size_t longest_length_ = 0;
};

/// A braid move: the segment [position, position + r) is replaced by its swap.
struct BraidMove {
  std::size_t position = 0;
  int r = 0;
  friend bool operator==(const BraidMove&, const BraidMove&) = default;
};

struct Neighbor {
  Word word;
  BraidMove move;
};

/// True when word[k .. k+r) alternates p, p', p, ... with r = h(p, p').
bool is_braid_segment(const CartanDatum& datum, const Word& word, std::size_t k, int r);
Word apply_braid(const CartanDatum& datum, const Word& word, BraidMove move);
/// All words one braid move away, sorted lexicographically.
std::vector<Neighbor> braid_neighbors(const CartanDatum& datum, const Word& word);

struct WordGraphEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  BraidMove move;
};

/// All reduced words of an element and the braid moves between them.
struct WordGraph {
  std::vector<Word> vertices;  // sorted lexicographically
  std::vector<WordGraphEdge> edges;  // from < to
  std::size_t index_of(const Word& w) const;
  bool connected() const;
};

inline constexpr std::size_t kDefaultWordCap = 1'000'000;

/// Depth-first enumeration over length-decreasing suffixes. Only letters in
/// `alphabet` are used when it is non-empty.
std::vector<Word> reduced_words(const WeylGroup& group, const WeylElement& w,
                                std::size_t cap = kDefaultWordCap, const std::vector<std::size_t>& alphabet = {});
WordGraph enumerate_reduced_words(const WeylGroup& group, const WeylElement& w,
                                  std::size_t cap = kDefaultWordCap);

/// Shortest braid-move path between two reduced words of the same element,
/// found by bidirectional breadth-first search with on-demand neighbors.
std::vector<BraidMove> braid_path(const CartanDatum& datum, const Word& from, const Word& to);

/// Longest element of the parabolic subgroup generated by an orbit.
struct OrbitLongest {
  WeylElement element;
  std::size_t length = 0;
  Word word;
};

/// Supports the three orbit shapes that foldings produce: a single node,
/// pairwise orthogonal nodes, and a joined pair {i, i'} (word i i' i).
OrbitLongest orbit_longest(const WeylGroup& group, const std::vector<std::size_t>& orbit);

std::string word_to_string(const CartanDatum& datum, const Word& word, const std::string& sep = "");
/// Accepts comma or space separated labels, or a run of labels matched greedily
/// (longest label first), e.g. "22'12'21".
Word parse_word(const CartanDatum& datum, const std::string& text);

std::string to_dot(const CartanDatum& datum, const WordGraph& graph);

}  // namespace foldline
