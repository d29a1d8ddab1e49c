// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "foldline/verify.hpp"

using namespace foldline;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

Outcome from_reports(std::initializer_list<CheckReport> reports) {
  Outcome o{true, ""};
  for (const auto& r : reports) {
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += r.name + " " + std::to_string(r.cases - r.failures) + "/" + std::to_string(r.cases);
    if (!r.ok()) {
      o.ok = false;
      o.detail += " (" + r.first_failure + ")";
    }
  }
  return o;
}

Outcome chain_outcome(const std::string& id, std::size_t steps) {
  const auto r = verify_chain(embedded_chain(id), Execution::parallel);
  Outcome o;
  o.ok = r.steps.size() == steps && r.verified_steps() == steps && r.final_ok;
  o.detail = std::to_string(r.verified_steps()) + "/" + std::to_string(steps) + " moves verified, final line: " +
             r.final_message;
  return o;
}

// Exhaustive DFS over words of length N: in S_{n+1}, s_k swaps entries k, k+1;
// a word counts when its product reverses the sequence.
std::size_t count_type_a(std::size_t n) {
  const std::size_t len = n * (n + 1) / 2;
  std::vector<int> target(n + 1);
  std::iota(target.rbegin(), target.rend(), 0);
  std::size_t count = 0;
  std::function<void(std::vector<int>&, std::size_t)> dfs = [&](std::vector<int>& p, std::size_t depth) {
    if (depth == len) {
      count += p == target;
      return;
    }
    for (std::size_t k = 0; k < n; ++k) {
      std::swap(p[k], p[k + 1]);
      dfs(p, depth + 1);
      std::swap(p[k], p[k + 1]);
    }
  };
  std::vector<int> p(n + 1);
  std::iota(p.begin(), p.end(), 0);
  dfs(p, 0);
  return count;
}

// Signed permutations of (1, 2): s_1 swaps, s_2 negates the second entry;
// w0 = -1. Counts words of length 4 reaching (-1, -2).
std::size_t count_b2() {
  std::size_t count = 0;
  for (unsigned bits = 0; bits < 16; ++bits) {
    int v[2] = {1, 2};
    for (int k = 0; k < 4; ++k) {
      if ((bits >> k) & 1)
        v[1] = -v[1];
      else
        std::swap(v[0], v[1]);
    }
    count += v[0] == -1 && v[1] == -2;
  }
  return count;
}

Outcome word_counts() {
  const WeylGroup a2(builtin("A2").datum), a3(builtin("A3").datum);
  const auto f = Folding::from_builtin("Dstyle:n=2");
  const auto n_a2 = enumerate_reduced_words(a2, a2.longest()).vertices.size();
  const auto n_a3 = enumerate_reduced_words(a3, a3.longest()).vertices.size();
  const auto n_b2 = enumerate_reduced_words(f.folded_group(), f.folded_group().longest()).vertices.size();
  const auto o_a2 = count_type_a(2), o_a3 = count_type_a(3), o_b2 = count_b2();
  Outcome o;
  o.ok = n_a2 == 2 && o_a2 == 2 && n_a3 == 16 && o_a3 == 16 && n_b2 == 2 && o_b2 == 2;
  o.detail = "A2 " + std::to_string(n_a2) + " (oracle " + std::to_string(o_a2) + "), B2 " + std::to_string(n_b2) +
             " (oracle " + std::to_string(o_b2) + "), A3 " + std::to_string(n_a3) + " (oracle " +
             std::to_string(o_a3) + ")";
  return o;
}

}  // namespace

int main() {
  const std::uint64_t seed = 0;
  const auto ex = Execution::parallel;
  const B2Models b2;
  const Monoid a2(builtin("A2").datum), a3(builtin("A3").datum);
  const Monoid mon_a3(b2.from_a3().source()), mon_a4(b2.from_a4().source());

  struct Criterion {
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"chain b2-from-a3: 5 symbolic moves and closed form", 1, [] { return chain_outcome("b2-from-a3", 5); }},
      {"chain b2-from-a4: 23 symbolic moves", 5, [] { return chain_outcome("b2-from-a4", 23); }},
      {"B2 folded transition = closed form in both models", 10,
       [&] {
         const auto vars = make_variables({"a", "b", "c", "d"});
         std::vector<SymRat> c;
         for (const char* n : {"d", "c", "b", "a"}) c.push_back(SymRat::variable(vars, n));
         auto o = from_reports({check_b2_symbolic(b2)});
         const bool agree = b2.compare_models(c);
         o.ok = o.ok && agree;
         o.detail += agree ? "; models agree" : "; models disagree";
         return o;
       }},
      {"B2 tropical form on 1000 samples, TropNat without underflow", 5,
       [&] { return from_reports({check_b2_tropical(b2, seed, 1000, ex), check_b2_tropnat(b2, seed, 1000, ex)}); }},
      {"path independence over reduced words of A3 and A2", 10,
       [&] {
         auto r3 = check_path_independence(builtin("A3").datum, ex);
         auto r2 = check_path_independence(builtin("A2").datum, ex);
         auto o = from_reports({r3, r2});
         return o;
       }},
      {"reduced-word counts A2, B2, A3 against oracles", 1, word_counts},
      {"monoid relations, associativity, word choice", 30,
       [&] {
         return from_reports({check_relation_idempotent(a2, seed, 200, ex), check_relation_braid(a2, seed, 200, ex),
                              check_associativity(a2, seed, 200, ex), check_left_mul_word_choice(a2, seed, 100, ex),
                              check_relation_idempotent(a3, seed, 200, ex), check_relation_commuting(a3, seed, 200, ex),
                              check_relation_braid(a3, seed, 200, ex), check_associativity(a3, seed, 200, ex),
                              check_left_mul_word_choice(a3, seed, 100, ex)});
       }},
      {"Frobenius multiplicative, composition, sigma", 30,
       [&] {
         return from_reports({check_frobenius_multiplicative(a3, seed, 500, ex),
                              check_frobenius_composition(a3, seed, 100, ex),
                              check_frobenius_sigma(b2.from_a3(), mon_a3, seed, 100, ex),
                              check_frobenius_sigma(b2.from_a4(), mon_a4, seed, 100, ex)});
       }},
      {"crystal: l_i scan = lambda_i, raise/lower, folded lambda/rho", 30,
       [&] {
         return from_reports({check_string_lengths(a3, seed, 200, ex), check_raise_lower(a3, seed, 100, ex),
                              check_folded_lambda_rho(b2.from_a3(), seed, 100, ex),
                              check_folded_lambda_rho(b2.from_a4(), seed, 100, ex)});
       }},
      {"s independent of filling, image sigma-fixed (A3 and A4 models)", 10,
       [&] {
         return from_reports({check_filling_independence(b2.from_a3(), ex),
                              check_filling_independence(b2.from_a4(), ex)});
       }},
  };

  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto& c = criteria[k];
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const Error& e) {
      o = {false, std::string(to_string(e.kind())) + ": " + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = s < c.limit;
    const bool pass = o.ok && in_time;
    failed += !pass;
    std::printf("[%s] AC%zu %s: %s; %.3f s (limit %.0f s)%s\n", pass ? "PASS" : "FAIL", k + 1, c.name,
                o.detail.c_str(), s, c.limit, in_time ? "" : " over time");
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
