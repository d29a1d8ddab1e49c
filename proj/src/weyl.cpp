#include "foldline/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace foldline {

WeylElement::WeylElement(std::size_t rank) : rank_(rank), m_(rank * rank, 0) {
  for (std::size_t i = 0; i < rank; ++i) at(i, i) = 1;
}

std::vector<std::int64_t> WeylElement::apply(const std::vector<std::int64_t>& root) const {
  std::vector<std::int64_t> out(rank_, 0);
  for (std::size_t r = 0; r < rank_; ++r)
    for (std::size_t c = 0; c < rank_; ++c) out[r] += at(r, c) * root[c];
  return out;
}

bool WeylElement::is_identity() const { return *this == WeylElement(rank_); }

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  WeylElement out(a.rank_);
  const std::size_t n = a.rank_;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < n; ++k) s += a.at(r, k) * b.at(k, c);
      out.at(r, c) = s;
    }
  return out;
}

namespace {

bool is_negative(const std::vector<std::int64_t>& v) {
  return std::all_of(v.begin(), v.end(), [](auto x) { return x <= 0; });
}

}  // namespace

WeylGroup::WeylGroup(CartanDatum datum) : datum_(std::move(datum)) {
  const std::size_t n = datum_.rank();
  for (std::size_t i = 0; i < n; ++i) {
    WeylElement s(n);
    for (std::size_t j = 0; j < n; ++j) s.at(i, j) -= datum_.cartan_integer(i, j);
    reflections_.push_back(std::move(s));
  }

  std::map<std::vector<std::int64_t>, bool> seen;
  std::deque<std::vector<std::int64_t>> queue;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> e(n, 0);
    e[i] = 1;
    seen[e] = true;
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto beta = queue.front();
    queue.pop_front();
    positive_roots_.push_back(beta);
    for (std::size_t i = 0; i < n; ++i) {
      auto image = reflections_[i].apply(beta);
      if (is_negative(image) || seen.count(image)) continue;
      seen[image] = true;
      queue.push_back(std::move(image));
    }
  }
  std::sort(positive_roots_.begin(), positive_roots_.end());

  longest_ = identity();
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!right_descent(longest_, i)) {
        longest_ = longest_ * reflections_[i];
        grew = true;
        break;
      }
    }
  }
  longest_length_ = length(longest_);
}

WeylElement WeylGroup::product(const Word& word) const {
  WeylElement w = identity();
  for (auto i : word) w = w * reflections_.at(i);
  return w;
}

std::size_t WeylGroup::length(const WeylElement& w) const {
  return static_cast<std::size_t>(std::count_if(positive_roots_.begin(), positive_roots_.end(),
                                                [&](const auto& beta) { return is_negative(w.apply(beta)); }));
}

bool WeylGroup::right_descent(const WeylElement& w, std::size_t i) const {
  for (std::size_t r = 0; r < rank(); ++r)
    if (w.at(r, i) != 0) return w.at(r, i) < 0;
  return false;
}

bool WeylGroup::left_descent(const WeylElement& w, std::size_t i) const {
  // w^{-1}(alpha_i) < 0 iff some positive root is sent to -alpha_i.
  for (const auto& beta : positive_roots_) {
    auto image = w.apply(beta);
    bool hit = true;
    for (std::size_t r = 0; r < rank() && hit; ++r) hit = image[r] == (r == i ? -1 : 0);
    if (hit) return true;
  }
  return false;
}

Word WeylGroup::greedy_word(const WeylElement& start) const {
  Word word;
  WeylElement w = start;
  while (!w.is_identity()) {
    std::size_t i = 0;
    while (!right_descent(w, i)) ++i;
    word.push_back(i);
    w = w * reflections_[i];
  }
  std::reverse(word.begin(), word.end());
  return word;
}

Word WeylGroup::lex_least_word(const WeylElement& start) const {
  Word word;
  WeylElement w = start;
  while (!w.is_identity()) {
    std::size_t i = 0;
    while (!left_descent(w, i)) ++i;
    word.push_back(i);
    w = reflections_[i] * w;
  }
  return word;
}

Word WeylGroup::w0_word_starting_with(std::size_t i) const {
  Word word{i};
  auto rest = greedy_word(reflections_.at(i) * longest_);
  word.insert(word.end(), rest.begin(), rest.end());
  return word;
}

Word WeylGroup::w0_word_ending_with(std::size_t i) const {
  Word word = greedy_word(longest_ * reflections_.at(i));
  word.push_back(i);
  return word;
}

bool WeylGroup::is_reduced_for(const Word& word, const WeylElement& w) const {
  for (auto i : word)
    if (i >= rank()) return false;
  return word.size() == length(w) && product(word) == w;
}

bool is_braid_segment(const CartanDatum& datum, const Word& word, std::size_t k, int r) {
  if (r < 2 || k + static_cast<std::size_t>(r) > word.size()) return false;
  const auto p = word[k], q = word[k + 1];
  if (p == q || h_value(datum, p, q) != r) return false;
  for (int t = 0; t < r; ++t)
    if (word[k + t] != (t % 2 == 0 ? p : q)) return false;
  return true;
}

Word apply_braid(const CartanDatum& datum, const Word& word, BraidMove move) {
  if (!is_braid_segment(datum, word, move.position, move.r))
    throw Error(ErrorKind::invalid_move, "no braid segment of length " + std::to_string(move.r) +
                                             " at position " + std::to_string(move.position + 1));
  Word out = word;
  const auto p = word[move.position], q = word[move.position + 1];
  for (int t = 0; t < move.r; ++t) out[move.position + t] = (t % 2 == 0 ? q : p);
  return out;
}

std::vector<Neighbor> braid_neighbors(const CartanDatum& datum, const Word& word) {
  std::vector<Neighbor> out;
  for (std::size_t k = 0; k + 1 < word.size(); ++k) {
    if (word[k] == word[k + 1]) continue;
    const int r = h_value(datum, word[k], word[k + 1]);
    if (!is_braid_segment(datum, word, k, r)) continue;
    BraidMove m{k, r};
    out.push_back({apply_braid(datum, word, m), m});
  }
  std::sort(out.begin(), out.end(), [](const Neighbor& a, const Neighbor& b) { return a.word < b.word; });
  return out;
}

std::size_t WordGraph::index_of(const Word& w) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
  if (it == vertices.end() || *it != w) throw Error(ErrorKind::not_reduced, "word is not a vertex of the graph");
  return static_cast<std::size_t>(it - vertices.begin());
}

bool WordGraph::connected() const {
  if (vertices.empty()) return true;
  std::vector<std::vector<std::size_t>> adj(vertices.size());
  for (const auto& e : edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::vector<bool> seen(vertices.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto u : adj[v])
      if (!seen[u]) {
        seen[u] = true;
        ++count;
        stack.push_back(u);
      }
  }
  return count == vertices.size();
}

namespace {

struct WordEnumerator {
  const WeylGroup& group;
  std::size_t cap;
  const std::vector<std::size_t>& alphabet;
  std::map<WeylElement, std::vector<Word>> memo;

  const std::vector<Word>& words(const WeylElement& w) {
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    std::vector<Word> out;
    if (w.is_identity()) {
      out.push_back({});
    } else {
      for (std::size_t i = 0; i < group.rank(); ++i) {
        if (!alphabet.empty() && std::find(alphabet.begin(), alphabet.end(), i) == alphabet.end()) continue;
        if (!group.right_descent(w, i)) continue;
        for (const auto& prefix : words(w * group.reflection(i))) {
          if (out.size() >= cap)
            throw Error(ErrorKind::cap_exceeded, "more than " + std::to_string(cap) + " reduced words");
          out.push_back(prefix);
          out.back().push_back(i);
        }
      }
    }
    return memo.emplace(w, std::move(out)).first->second;
  }
};

}  // namespace

std::vector<Word> reduced_words(const WeylGroup& group, const WeylElement& w, std::size_t cap,
                                const std::vector<std::size_t>& alphabet) {
  WordEnumerator e{group, cap, alphabet, {}};
  auto out = e.words(w);
  std::sort(out.begin(), out.end());
  return out;
}

WordGraph enumerate_reduced_words(const WeylGroup& group, const WeylElement& w, std::size_t cap) {
  WordGraph g;
  g.vertices = reduced_words(group, w, cap);
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    for (const auto& nb : braid_neighbors(group.datum(), g.vertices[v])) {
      auto u = g.index_of(nb.word);
      if (v < u) g.edges.push_back({v, u, nb.move});
    }
  }
  if (!g.connected()) throw Error(ErrorKind::disconnected, "reduced-word graph is not connected");
  return g;
}

std::vector<BraidMove> braid_path(const CartanDatum& datum, const Word& from, const Word& to) {
  if (from == to) return {};
  if (from.size() != to.size()) throw Error(ErrorKind::disconnected, "words have different lengths");

  struct Visit {
    Word parent;
    BraidMove move;
  };
  std::map<Word, Visit> fwd, bwd;
  fwd.emplace(from, Visit{});
  bwd.emplace(to, Visit{});
  std::vector<Word> ffront{from}, bfront{to};

  auto reconstruct = [&](const Word& meet) {
    std::vector<BraidMove> head;
    for (Word w = meet; w != from;) {
      const auto& v = fwd.at(w);
      head.push_back(v.move);
      w = v.parent;
    }
    std::reverse(head.begin(), head.end());
    for (Word w = meet; w != to;) {
      const auto& v = bwd.at(w);
      head.push_back(v.move);
      w = v.parent;
    }
    return head;
  };

  while (!ffront.empty() && !bfront.empty()) {
    const bool forward = ffront.size() <= bfront.size();
    auto& front = forward ? ffront : bfront;
    auto& mine = forward ? fwd : bwd;
    auto& other = forward ? bwd : fwd;
    std::vector<Word> next;
    for (const auto& w : front) {
      for (auto& nb : braid_neighbors(datum, w)) {
        if (mine.count(nb.word)) continue;
        mine.emplace(nb.word, Visit{w, nb.move});
        if (other.count(nb.word)) return reconstruct(nb.word);
        next.push_back(std::move(nb.word));
      }
    }
    front = std::move(next);
  }
  throw Error(ErrorKind::disconnected, "no braid-move path between the words");
}

OrbitLongest orbit_longest(const WeylGroup& group, const std::vector<std::size_t>& orbit) {
  const auto& d = group.datum();
  std::vector<std::size_t> sorted = orbit;
  std::sort(sorted.begin(), sorted.end());
  OrbitLongest out;
  if (sorted.empty()) throw Error(ErrorKind::unsupported_orbit, "empty orbit");
  bool orthogonal = true;
  for (auto i : sorted)
    for (auto j : sorted)
      if (i != j && d.dot(i, j) != 0) orthogonal = false;
  if (orthogonal) {
    out.word = sorted;
  } else if (sorted.size() == 2 && d.dot(sorted[0], sorted[1]) == -1) {
    out.word = {sorted[0], sorted[1], sorted[0]};
  } else {
    throw Error(ErrorKind::unsupported_orbit, "orbit is neither orthogonal nor a joined pair");
  }
  out.element = group.product(out.word);
  out.length = group.length(out.element);
  if (out.length != out.word.size()) throw Error(ErrorKind::internal, "orbit word is not reduced");
  return out;
}

std::string word_to_string(const CartanDatum& datum, const Word& word, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) out += sep;
    out += datum.labels().at(word[k]);
  }
  return out;
}

Word parse_word(const CartanDatum& datum, const std::string& text) {
  Word out;
  if (text.find_first_of(", \t") != std::string::npos) {
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
      std::istringstream parts(token);
      std::string label;
      while (parts >> label) out.push_back(datum.index_of(label));
    }
    return out;
  }
  std::vector<std::size_t> order(datum.rank());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) {
    return datum.labels()[a].size() > datum.labels()[b].size();
  });
  for (std::size_t pos = 0; pos < text.size();) {
    bool matched = false;
    for (auto i : order) {
      const auto& label = datum.labels()[i];
      if (text.compare(pos, label.size(), label) == 0) {
        out.push_back(i);
        pos += label.size();
        matched = true;
        break;
      }
    }
    if (!matched) throw Error(ErrorKind::unknown_label, "cannot read a label at '" + text.substr(pos) + "'");
  }
  return out;
}

std::string to_dot(const CartanDatum& datum, const WordGraph& graph) {
  std::ostringstream out;
  out << "graph words {\n";
  for (const auto& v : graph.vertices) out << "  \"" << word_to_string(datum, v, " ") << "\";\n";
  for (const auto& e : graph.edges)
    out << "  \"" << word_to_string(datum, graph.vertices[e.from], " ") << "\" -- \""
        << word_to_string(datum, graph.vertices[e.to], " ") << "\" [label=\"(" << e.move.position + 1 << ","
        << e.move.r << ")\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace foldline
