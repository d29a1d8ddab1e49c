#include "foldline/folding.hpp"

#include <algorithm>

namespace foldline {

BlockMultiplicity block_multiplicity(const Word& block) {
  BlockMultiplicity m;
  m.per_letter.reserve(block.size());
  for (std::size_t letter : block) {
    const int count = static_cast<int>(std::count(block.begin(), block.end(), letter));
    m.per_letter.push_back(count);
    m.block = std::max(m.block, count);
  }
  return m;
}

Folding::Folding(CartanDatum source, DiagramAutomorphism sigma)
    : sigma_(std::move(sigma)),
      folded_(fold(source, sigma_)),
      chamber_(source),
      folded_group_(folded_.folded) {
  for (const auto& orbit : folded_.orbits) {
    orbit_longest_.push_back(foldline::orbit_longest(chamber_.group(), orbit));
    auto words = reduced_words(chamber_.group(), orbit_longest_.back().element, kDefaultWordCap, orbit);
    std::sort(words.begin(), words.end());
    orbit_words_.push_back(std::move(words));
  }
}

Folding Folding::from_builtin(const std::string& name) {
  auto b = builtin(name);
  auto sigma = b.sigma ? *b.sigma : DiagramAutomorphism::identity(b.datum);
  return Folding(b.datum, sigma);
}

void Folding::require_folded_reduced(const Word& folded_word) const {
  for (std::size_t letter : folded_word)
    if (letter >= folded_group_.rank())
      throw Error(ErrorKind::not_reduced, "letter out of range in folded word");
  if (!folded_group_.is_reduced_for(folded_word, folded_group_.longest()))
    throw Error(ErrorKind::not_reduced,
                "'" + word_to_string(folded_.folded, folded_word, " ") + "' is not a reduced word of the longest element");
}

OrbitWordFilling Folding::default_filling(const Word& folded_word) const {
  OrbitWordFilling f;
  f.reserve(folded_word.size());
  for (std::size_t eta : folded_word) f.push_back(orbit_longest_.at(eta).word);
  return f;
}

std::vector<OrbitWordFilling> Folding::all_fillings(const Word& folded_word) const {
  require_folded_reduced(folded_word);
  std::vector<OrbitWordFilling> out{{}};
  for (std::size_t eta : folded_word) {
    std::vector<OrbitWordFilling> next;
    for (const auto& partial : out)
      for (const auto& w : orbit_words_[eta]) {
        auto f = partial;
        f.push_back(w);
        next.push_back(std::move(f));
      }
    out = std::move(next);
  }
  return out;
}

void Folding::check_filling(const Word& folded_word, const OrbitWordFilling& filling) const {
  if (filling.size() != folded_word.size())
    throw Error(ErrorKind::incompatible_filling, "filling has " + std::to_string(filling.size()) +
                                                     " blocks for a folded word of length " +
                                                     std::to_string(folded_word.size()));
  for (std::size_t j = 0; j < folded_word.size(); ++j) {
    const auto& words = orbit_words_.at(folded_word[j]);
    if (!std::binary_search(words.begin(), words.end(), filling[j]))
      throw Error(ErrorKind::incompatible_filling,
                  "block " + std::to_string(j + 1) + " is not a reduced word of its orbit's longest element");
  }
}

Word Folding::unfold_word(const Word& folded_word, const OrbitWordFilling& filling) const {
  require_folded_reduced(folded_word);
  check_filling(folded_word, filling);
  Word out;
  for (const auto& block : filling) out.insert(out.end(), block.begin(), block.end());
  return out;
}

FoldedTransitionMap::FoldedTransitionMap(const Folding& folding, Word from, Word to)
    : folding_(&folding), from_(std::move(from)), to_(std::move(to)) {
  filling_ = folding.default_filling(from_);
  const Word a = folding.unfold_word(from_, filling_);
  const Word b = folding.unfold_word(to_);
  path_ = braid_path(folding.source(), a, b);
}

std::array<std::int64_t, 4> b2_tropical(std::int64_t d, std::int64_t c, std::int64_t b, std::int64_t a) {
  const std::int64_t m1 = std::min({a + b, a + d, c + d});
  const std::int64_t m2 = std::min({a + 2 * b, a + 2 * d, c + 2 * d});
  return {a + 2 * b + c - m2, m2 - m1, 2 * m1 - m2, b + c + d - m1};
}

namespace {

Folding b2_folding(const std::string& name) {
  auto f = Folding::from_builtin(name);
  const auto& g = f.folded().folded;
  if (g.rank() != 2 || g.dot(0, 0) != 2 || g.dot(1, 1) != 4)
    throw Error(ErrorKind::internal, name + " does not fold to B2 with orbit 2 long");
  return f;
}

}  // namespace

B2Models::B2Models()
    : a3_(b2_folding("Dstyle:n=2")),
      a4_(b2_folding("A4+flip")),
      long_first_{1, 0, 1, 0},
      short_first_{0, 1, 0, 1},
      a3_map_(a3_, long_first_, short_first_),
      a4_map_(a4_, long_first_, short_first_) {}

}  // namespace foldline
