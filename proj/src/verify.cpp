#include "foldline/verify.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace foldline {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

template <class T>
std::string show(const std::vector<T>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ",";
    if constexpr (std::is_integral_v<T>)
      s += std::to_string(v[k]);
    else
      s += to_string(v[k]);
  }
  return s + ")";
}

MonoidElement random_element(const Monoid& m, std::mt19937_64& rng, std::int64_t hi = 6) {
  std::vector<std::int64_t> c(m.length());
  for (auto& v : c) v = uniform(rng, 0, hi);
  return m.element(c);
}

std::vector<std::pair<std::size_t, std::size_t>> pairs_with_dot(const CartanDatum& d, std::int64_t dot) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < d.rank(); ++i)
    for (std::size_t j = 0; j < d.rank(); ++j)
      if (i != j && d.dot(i, j) == dot) out.emplace_back(i, j);
  return out;
}

CaseResult expect_equal(const Monoid& mon, const MonoidElement& got, const MonoidElement& want, const std::string& what) {
  if (got == want) return {};
  return {false, what + ": got " + to_string(mon, got) + ", expected " + to_string(mon, want)};
}

template <class K>
std::vector<K> array_to_vector(const std::array<K, 4>& a) {
  return {a[0], a[1], a[2], a[3]};
}

}  // namespace

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(trial + 1)));
}

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

CheckReport chain_check(const std::string& chain_id, Execution ex) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto report = verify_chain(embedded_chain(chain_id), ex);
  CheckReport r;
  r.name = "chain " + report.id;
  r.cases = report.steps.size() + 1;
  for (const auto& s : report.steps)
    if (!s.ok && r.failures++ == 0) r.first_failure = "step " + std::to_string(s.line) + ": " + s.message;
  if (!report.final_ok && r.failures++ == 0) r.first_failure = "final line: " + report.final_message;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

CheckReport check_b2_symbolic(const B2Models& m) {
  const auto vars = make_variables({"a", "b", "c", "d"});
  const SymRat a = SymRat::variable(vars, 0), b = SymRat::variable(vars, 1), c = SymRat::variable(vars, 2),
               d = SymRat::variable(vars, 3);
  const std::vector<SymRat> start{d, c, b, a};
  const auto want = array_to_vector(b2_closed_form(d, c, b, a));
  return run_cases("B2 closed form, symbolic", 3, Execution::serial, [&](std::size_t k) -> CaseResult {
    if (k == 2)
      return m.compare_models(start) ? CaseResult{} : CaseResult{false, "A3 and A4 models disagree"};
    const auto& map = k == 0 ? m.a3_map() : m.a4_map();
    const auto got = map.apply(start);
    if (got.word != m.short_first()) return {false, "unexpected target word"};
    for (std::size_t j = 0; j < 4; ++j)
      if (!sym_equal(got.coords[j], want[j]))
        return {false, std::string(k == 0 ? "A3" : "A4") + " coordinate " + std::to_string(j + 1) + ": " +
                           got.coords[j].to_string() + " vs " + want[j].to_string()};
    return {};
  });
}

CheckReport check_b2_rational(const B2Models& m, std::uint64_t seed, std::size_t trials, Execution ex) {
  return run_cases("B2 closed form, rational", trials, ex, [&](std::size_t k) -> CaseResult {
    auto rng = trial_rng(seed, k);
    std::vector<PosRational> c;
    for (int j = 0; j < 4; ++j) c.emplace_back(mpq_class(uniform(rng, 1, 9), uniform(rng, 1, 9)));
    const auto want = array_to_vector(b2_closed_form(c[0], c[1], c[2], c[3]));
    const auto a3 = m.a3_map().apply(c).coords;
    const auto a4 = m.a4_map().apply(c).coords;
    if (!coords_equal(a3, want)) return {false, show(c) + " via A3 gives " + show(a3) + ", closed form " + show(want)};
    if (!coords_equal(a4, want)) return {false, show(c) + " via A4 gives " + show(a4) + ", closed form " + show(want)};
    return {};
  });
}

CheckReport check_b2_tropical(const B2Models& m, std::uint64_t seed, std::size_t trials, Execution ex) {
  return run_cases("B2 tropical form, TropInt [-20,20]^4", trials, ex, [&](std::size_t k) -> CaseResult {
    auto rng = trial_rng(seed, k);
    std::int64_t v[4];
    for (auto& x : v) x = uniform(rng, -20, 20);
    const auto [d, c, b, a] = v;
    if (a + b + d < std::min(a + 2 * b, a + 2 * d)) return {false, "a+b+d < min(a+2b, a+2d)"};
    const std::vector<TropInt> start{TropInt{d}, TropInt{c}, TropInt{b}, TropInt{a}};
    const auto t = b2_tropical(d, c, b, a);
    const std::vector<TropInt> want{TropInt{t[0]}, TropInt{t[1]}, TropInt{t[2]}, TropInt{t[3]}};
    const auto a3 = m.a3_map().apply(start).coords;
    const auto a4 = m.a4_map().apply(start).coords;
    if (!coords_equal(a3, want)) return {false, show(start) + " via A3 gives " + show(a3) + ", formula " + show(want)};
    if (!coords_equal(a4, want)) return {false, show(start) + " via A4 gives " + show(a4) + ", formula " + show(want)};
    return {};
  });
}

CheckReport check_b2_tropnat(const B2Models& m, std::uint64_t seed, std::size_t trials, Execution ex) {
  return run_cases("B2 tropical form, TropNat [0,20]^4", trials, ex, [&](std::size_t k) -> CaseResult {
    auto rng = trial_rng(seed, k);
    std::int64_t v[4];
    for (auto& x : v) x = uniform(rng, 0, 20);
    const auto [d, c, b, a] = v;
    const std::vector<TropNat> start{TropNat(d), TropNat(c), TropNat(b), TropNat(a)};
    const auto t = b2_tropical(d, c, b, a);
    const std::vector<TropNat> want{TropNat(t[0]), TropNat(t[1]), TropNat(t[2]), TropNat(t[3])};
    const auto a3 = m.a3_map().apply(start).coords;
    const auto a4 = m.a4_map().apply(start).coords;
    if (!coords_equal(a3, want) || !coords_equal(a4, want))
      return {false, show(start) + " does not match the formula " + show(want)};
    return {};
  });
}

CheckReport check_path_independence(const CartanDatum& datum, Execution ex) {
  const auto t0 = std::chrono::steady_clock::now();
  const Chamber chamber(datum);
  const auto graph = enumerate_reduced_words(chamber.group(), chamber.group().longest());
  std::vector<std::string> names;
  for (std::size_t k = 0; k < chamber.length(); ++k) names.push_back("x" + std::to_string(k + 1));
  const auto vars = make_variables(names);

  std::vector<std::vector<std::pair<std::size_t, BraidMove>>> adj(graph.vertices.size());
  for (const auto& e : graph.edges) {
    adj[e.from].push_back({e.to, e.move});
    adj[e.to].push_back({e.from, e.move});
  }
  std::vector<std::optional<DecoratedWord<SymRat>>> at(graph.vertices.size());
  const std::size_t root = graph.index_of(chamber.base_word());
  DecoratedWord<SymRat> start{chamber.base_word(), {}};
  for (std::size_t k = 0; k < chamber.length(); ++k) start.coords.push_back(SymRat::variable(vars, k));
  at[root] = start;
  std::queue<std::size_t> queue;
  queue.push(root);
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop();
    for (const auto& [w, move] : adj[v])
      if (!at[w]) {
        at[w] = apply_move(datum, *at[v], move);
        queue.push(w);
      }
  }
  auto report = run_cases("path independence " + std::to_string(graph.vertices.size()) + " words", graph.edges.size(),
                          ex, [&](std::size_t k) -> CaseResult {
                            const auto& e = graph.edges[k];
                            const auto moved = apply_move(datum, *at[e.from], e.move);
                            if (moved.word != at[e.to]->word) return {false, "edge lands on the wrong word"};
                            for (std::size_t j = 0; j < moved.coords.size(); ++j)
                              if (!sym_equal(moved.coords[j], at[e.to]->coords[j]))
                                return {false, "conflict on " + word_to_string(datum, moved.word, " ") +
                                                   " coordinate " + std::to_string(j + 1)};
                            return {};
                          });
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

CheckReport check_relation_idempotent(const Monoid& mon, std::uint64_t seed, std::size_t trials, Execution ex) {
  return run_cases("xi_i^a xi_i^b = xi_i^min(a,b)", trials, ex, [&](std::size_t k) -> CaseResult {
    auto rng = trial_rng(seed, k);
    const auto m = random_element(mon, rng);
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(mon.rank()) - 1));
    const auto a = uniform(rng, 0, 6), b = uniform(rng, 0, 6);
    return expect_equal(mon, mon.left_mul_gen({i, a}, mon.left_mul_gen({i, b}, m)),
                        mon.left_mul_gen({i, std::min(a, b)}, m), "relation (i)");
  });
}

CheckReport check_relation_commuting(const Monoid& mon, std::uint64_t seed, std::size_t trials, Execution ex) {
  const auto pairs = pairs_with_dot(mon.datum(), 0);
  return run_cases("xi_i^a xi_j^b = xi_j^b xi_i^a (i.j = 0)", pairs.empty() ? 0 : trials, ex,
                   [&](std::size_t k) -> CaseResult {
                     auto rng = trial_rng(seed, k);
                     const auto m = random_element(mon, rng);
                     const auto [i, j] = pairs[uniform(rng, 0, static_cast<std::int64_t>(pairs.size()) - 1)];
                     const auto a = uniform(rng, 0, 6), b = uniform(rng, 0, 6);
                     return expect_equal(mon, mon.left_mul_gen({i, a}, mon.left_mul_gen({j, b}, m)),
                                         mon.left_mul_gen({j, b}, mon.left_mul_gen({i, a}, m)), "relation (ii)");
                   });
}

CheckReport check_relation_braid(const Monoid& mon, std::uint64_t seed, std::size_t trials, Execution ex) {
  const auto pairs = pairs_with_dot(mon.datum(), -1);
  return run_cases("xi_i^a xi_j^b xi_i^c = xi_j^a' xi_i^b' xi_j^c' (i.j = -1)", pairs.empty() ? 0 : trials, ex,
                   [&](std::size_t k) -> CaseResult {
                     auto rng = trial_rng(seed, k);
                     const auto m = random_element(mon, rng);
                     const auto [i, j] = pairs[uniform(rng, 0, static_cast<std::int64_t>(pairs.size()) - 1)];
                     const auto a = uniform(rng, 0, 6), b = uniform(rng, 0, 6), c = uniform(rng, 0, 6);
                     const auto mn = std::min(a, c);
                     const auto lhs = mon.left_mul_gen({i, a}, mon.left_mul_gen({j, b}, mon.left_mul_gen({i, c}, m)));
                     const auto rhs = mon.left_mul_gen(
                         {j, b + c - mn}, mon.left_mul_gen({i, mn}, mon.left_mul_gen({j, a + b - mn}, m)));
                     return expect_equal(mon, lhs, rhs, "relation (iii)");
                   });
}

CheckReport check_associativity(const Monoid& mon, std::uint64_t seed, std::size_t trials, Execution ex) {
  return run_cases("associativity", trials, ex, [&](std::size_t k) -> CaseResult {
    auto rng = trial_rng(seed, k);
    const auto a = random_element(mon, rng), b = random_element(mon, rng), c = random_element(mon, rng);
    return expect_equal(mon, mon.mul(mon.mul(a, b), c), mon.mul(a, mon.mul(b, c)), "(ab)c vs a(bc)");
  });
}

CheckReport check_left_mul_word_choice(const Monoid& mon, std::uint64_t seed, std::size_t trials, Execution ex) {
  const auto graph = enumerate_reduced_words(mon.chamber().group(), mon.chamber().group().longest());
  std::vector<std::vector<Word>> starting(mon.rank());
  for (const auto& w : graph.vertices) starting[w.front()].push_back(w);
  return run_cases("left_mul_gen independent of the word", trials, ex, [&](std::size_t k) -> CaseResult {
    auto rng = trial_rng(seed, k);
    const auto m = random_element(mon, rng);
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(mon.rank()) - 1));
    const auto& words = starting[i];
    const auto& w = words[uniform(rng, 0, static_cast<std::int64_t>(words.size()) - 1)];
    const MonoidGenerator g{i, uniform(rng, 0, 6)};
    return expect_equal(mon, mon.left_mul_gen_via(g, m, w), mon.left_mul_gen(g, m),
                        "via " + word_to_string(mon.datum(), w, " "));
  });
}

CheckReport check_folded_mul(const Folding& f, const Monoid& mon, std::uint64_t seed, std::size_t trials,
                             Execution ex) {
  const Word word = f.folded_group().lex_least_word(f.folded_group().longest());
  return run_cases("folded product", trials, ex, [&](std::size_t k) -> CaseResult {
    auto rng = trial_rng(seed, k);
    std::vector<std::int64_t> f1(word.size()), f2(word.size()), zero(word.size(), 0);
    for (auto& v : f1) v = uniform(rng, 0, 6);
    for (auto& v : f2) v = uniform(rng, 0, 6);
    const auto p = folded_mul(f, mon, word, f1, f2);
    const auto direct = mon.mul(unfold_element(f, mon, word, f1), unfold_element(f, mon, word, f2));
    if (!(unfold_element(f, mon, word, p) == direct)) return {false, "folded product disagrees with unfolded product"};
    if (folded_mul(f, mon, word, zero, f1) != zero || folded_mul(f, mon, word, f1, zero) != zero)
      return {false, "zero element is not absorbing"};
    return {};
  });
}

CheckReport check_frobenius_multiplicative(const Monoid& mon, std::uint64_t seed, std::size_t trials, Execution ex) {
  return run_cases("Frobenius multiplicative, e = 1,2,3", trials, ex, [&](std::size_t k) -> CaseResult {
    auto rng = trial_rng(seed, k);
    const auto a = random_element(mon, rng), b = random_element(mon, rng);
    for (std::int64_t e = 1; e <= 3; ++e) {
      auto r = expect_equal(mon, mon.frobenius(e, mon.mul(a, b)), mon.mul(mon.frobenius(e, a), mon.frobenius(e, b)),
                            "e = " + std::to_string(e));
      if (!r.ok) return r;
    }
    return {};
  });
}

CheckReport check_frobenius_composition(const Monoid& mon, std::uint64_t seed, std::size_t trials, Execution ex) {
  return run_cases("Frobenius composition", trials, ex, [&](std::size_t k) -> CaseResult {
    auto rng = trial_rng(seed, k);
    const auto m = random_element(mon, rng);
    const auto e = uniform(rng, 1, 4), e2 = uniform(rng, 1, 4);
    return expect_equal(mon, mon.frobenius(e, mon.frobenius(e2, m)), mon.frobenius(e * e2, m),
                        "e = " + std::to_string(e) + ", e' = " + std::to_string(e2));
  });
}

CheckReport check_frobenius_sigma(const Folding& f, const Monoid& mon, std::uint64_t seed, std::size_t trials,
                                  Execution ex) {
  const Word word = f.folded_group().lex_least_word(f.folded_group().longest());
  return run_cases("Frobenius commutes with sigma", trials, ex, [&](std::size_t k) -> CaseResult {
    auto rng = trial_rng(seed, k);
    std::vector<std::int64_t> c(word.size());
    for (auto& v : c) v = uniform(rng, 0, 6);
    const auto fixed = unfold_element(f, mon, word, c);
    const auto other = random_element(mon, rng);
    const auto e = uniform(rng, 1, 3);
    if (!mon.is_sigma_fixed(fixed, f.sigma())) return {false, "unfolded element is not sigma-fixed"};
    for (const auto& m : {fixed, other}) {
      auto r = expect_equal(mon, mon.frobenius(e, mon.sigma(m, f.sigma())), mon.sigma(mon.frobenius(e, m), f.sigma()),
                            "e = " + std::to_string(e));
      if (!r.ok) return r;
    }
    if (!mon.is_sigma_fixed(mon.frobenius(e, fixed), f.sigma())) return {false, "image is not sigma-fixed"};
    return {};
  });
}

CheckReport check_string_lengths(const Monoid& mon, std::uint64_t seed, std::size_t trials, Execution ex) {
  return run_cases("l_i, r_i by scan = by coordinate", trials, ex, [&](std::size_t k) -> CaseResult {
    auto rng = trial_rng(seed, k);
    const auto m = random_element(mon, rng);
    for (std::size_t i = 0; i < mon.rank(); ++i) {
      const auto ls = mon.l_scan(m, i), lc = mon.l_coordinate(m, i);
      if (ls != lc)
        return {false, to_string(mon, m) + " l_" + mon.datum().labels()[i] + ": scan " + std::to_string(ls) +
                           ", coordinate " + std::to_string(lc)};
      const auto rs = mon.r_scan(m, i), rc = mon.r_coordinate(m, i);
      if (rs != rc)
        return {false, to_string(mon, m) + " r_" + mon.datum().labels()[i] + ": scan " + std::to_string(rs) +
                           ", coordinate " + std::to_string(rc)};
    }
    return {};
  });
}

CheckReport check_raise_lower(const Monoid& mon, std::uint64_t seed, std::size_t trials, Execution ex) {
  return run_cases("raise_to / lower_to_zero inverse, n <= 5", trials, ex, [&](std::size_t k) -> CaseResult {
    auto rng = trial_rng(seed, k);
    const auto m = random_element(mon, rng);
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(mon.rank()) - 1));
    const auto n = uniform(rng, 0, 5);
    const auto m0 = mon.lower_to_zero(m, i);
    if (mon.l_coordinate(m0, i) != 0) return {false, "lower_to_zero does not land in l_i = 0"};
    const auto up = mon.raise_to(m0, i, n);
    if (mon.l_scan(up, i) != n) return {false, "raise_to(n) does not land in l_i = n"};
    auto r = expect_equal(mon, mon.lower_to_zero(up, i), m0, "lower(raise(m0))");
    if (!r.ok) return r;
    return expect_equal(mon, mon.raise_to(m0, i, mon.l_coordinate(m, i)), m, "raise(lower(m))");
  });
}

CheckReport check_folded_lambda_rho(const Folding& f, std::uint64_t seed, std::size_t trials, Execution ex) {
  const auto& g = f.folded_group();
  const auto words = enumerate_reduced_words(g, g.longest()).vertices;
  return run_cases("lambda_eta, rho_eta through s", trials, ex, [&](std::size_t k) -> CaseResult {
    auto rng = trial_rng(seed, k);
    FoldedDecoratedWord<TropInt> fdw{words[uniform(rng, 0, static_cast<std::int64_t>(words.size()) - 1)], {}};
    for (std::size_t j = 0; j < fdw.word.size(); ++j) fdw.coords.push_back(TropInt{uniform(rng, -20, 20)});
    const auto cp = f.s_map(fdw);
    for (std::size_t eta = 0; eta < g.rank(); ++eta) {
      const auto fl = f.folded_lambda(fdw, eta), fr = f.folded_rho(fdw, eta);
      for (std::size_t member = 0; member < f.folded().orbits[eta].size(); ++member) {
        if (!(f.lambda_eta(cp, eta, member) == fl))
          return {false, show(fdw.coords) + ": lambda mismatch for orbit " + std::to_string(eta)};
        if (!(f.rho_eta(cp, eta, member) == fr))
          return {false, show(fdw.coords) + ": rho mismatch for orbit " + std::to_string(eta)};
      }
    }
    return {};
  });
}

CheckReport check_filling_independence(const Folding& f, Execution ex) {
  const auto& g = f.folded_group();
  const auto words = enumerate_reduced_words(g, g.longest()).vertices;
  std::vector<std::string> names;
  for (std::size_t j = 0; j < f.folded_length(); ++j) names.push_back("c" + std::to_string(j + 1));
  const auto vars = make_variables(names);
  std::vector<SymRat> coords;
  for (std::size_t j = 0; j < names.size(); ++j) coords.push_back(SymRat::variable(vars, j));

  struct Case {
    std::size_t word;
    OrbitWordFilling filling;
  };
  std::vector<Case> cases;
  for (std::size_t w = 0; w < words.size(); ++w)
    for (auto& filling : f.all_fillings(words[w])) cases.push_back({w, std::move(filling)});
  std::vector<ChamberPoint<SymRat>> reference;
  for (const auto& w : words) reference.push_back(f.s_map(FoldedDecoratedWord<SymRat>{w, coords}));

  return run_cases("s independent of filling, image sigma-fixed", cases.size(), ex, [&](std::size_t k) -> CaseResult {
    const auto& c = cases[k];
    const auto cp = f.s_map(FoldedDecoratedWord<SymRat>{words[c.word], coords}, c.filling);
    if (!(cp == reference[c.word]))
      return {false, "filling " + word_to_string(f.source(), f.unfold_word(words[c.word], c.filling), " ") +
                         " gives a different component"};
    if (!f.chamber().is_sigma_fixed(cp, f.sigma())) return {false, "image is not sigma-fixed"};
    return {};
  });
}

std::vector<CheckReport> desk_suite(std::uint64_t seed, std::size_t trials, Execution ex) {
  auto n = [&](std::size_t def) { return trials ? trials : def; };
  std::vector<CheckReport> out;
  out.push_back(chain_check("b2-from-a3", ex));
  out.push_back(chain_check("b2-from-a4", ex));

  const B2Models b2;
  out.push_back(check_b2_symbolic(b2));
  out.push_back(check_b2_rational(b2, seed, n(200), ex));
  out.push_back(check_b2_tropical(b2, seed, n(1000), ex));
  out.push_back(check_b2_tropnat(b2, seed, n(1000), ex));

  out.push_back(check_path_independence(builtin("A2").datum, ex));
  out.push_back(check_path_independence(builtin("A3").datum, ex));

  for (const char* name : {"A2", "A3"}) {
    const Monoid mon(builtin(name).datum);
    const std::string tag = std::string(" [") + name + "]";
    for (auto r : {check_relation_idempotent(mon, seed, n(200), ex), check_relation_commuting(mon, seed, n(200), ex),
                   check_relation_braid(mon, seed, n(200), ex), check_associativity(mon, seed, n(200), ex),
                   check_left_mul_word_choice(mon, seed, n(100), ex),
                   check_frobenius_multiplicative(mon, seed, n(500), ex),
                   check_frobenius_composition(mon, seed, n(100), ex), check_string_lengths(mon, seed, n(200), ex),
                   check_raise_lower(mon, seed, n(100), ex)}) {
      if (r.cases == 0) continue;
      r.name += tag;
      out.push_back(std::move(r));
    }
  }
  for (const Folding* f : {&b2.from_a3(), &b2.from_a4()}) {
    const Monoid mon(f->source());
    const std::string tag = f == &b2.from_a3() ? " [B2 from A3]" : " [B2 from A4]";
    for (auto r : {check_frobenius_sigma(*f, mon, seed, n(100), ex), check_folded_mul(*f, mon, seed, n(100), ex),
                   check_folded_lambda_rho(*f, seed, n(100), ex), check_filling_independence(*f, ex)}) {
      r.name += tag;
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace foldline
