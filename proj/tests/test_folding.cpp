#include <gtest/gtest.h>

#include <random>

#include "foldline/folding.hpp"

using namespace foldline;

namespace {

std::vector<TropInt> tz(std::initializer_list<std::int64_t> v) {
  std::vector<TropInt> out;
  for (auto x : v) out.push_back(TropInt{x});
  return out;
}

const B2Models& models() {
  static const B2Models m;
  return m;
}

struct Abcd {
  VariableSetPtr vars = make_variables({"a", "b", "c", "d"});
  SymRat a = SymRat::variable(vars, "a"), b = SymRat::variable(vars, "b"), c = SymRat::variable(vars, "c"),
         d = SymRat::variable(vars, "d");
  SymRat two(const SymRat& x) const { return SymRat::constant(vars, 2) * x; }
};

}  // namespace

TEST(Folding, BlockMultiplicity) {
  auto m = block_multiplicity({1, 2, 1});
  EXPECT_EQ(m.block, 2);
  EXPECT_EQ(m.per_letter, (std::vector<int>{2, 1, 2}));
  auto n = block_multiplicity({1, 2});
  EXPECT_EQ(n.block, 1);
  EXPECT_EQ(n.per_letter, (std::vector<int>{1, 1}));
}

TEST(Folding, UnfoldFromA3MatchesChainLineOne) {
  const auto& f = models().from_a3();
  Abcd s;
  FoldedDecoratedWord<SymRat> fdw{models().long_first(), {s.d, s.c, s.b, s.a}};
  auto dw = f.unfold(fdw, {{1, 2}, {0}, {2, 1}, {0}});
  EXPECT_EQ(word_to_string(f.source(), dw.word, " "), "2 2' 1 2' 2 1");
  EXPECT_EQ(word_to_string(f.source(), f.unfold(fdw).word, " "), "2 2' 1 2 2' 1");
  std::vector<SymRat> expected{s.d, s.d, s.c, s.b, s.b, s.a};
  EXPECT_TRUE(coords_equal(dw.coords, expected));
}

TEST(Folding, UnfoldFromA4MatchesChainLineOne) {
  const auto& f = models().from_a4();
  Abcd s;
  auto dw = f.unfold(FoldedDecoratedWord<SymRat>{models().short_first(), {s.a, s.b, s.c, s.d}});
  EXPECT_EQ(word_to_string(f.source(), dw.word, " "), "1 4 2 3 2 1 4 2 3 2");
  std::vector<SymRat> expected{s.a, s.a, s.b, s.two(s.b), s.b, s.c, s.c, s.d, s.two(s.d), s.d};
  EXPECT_TRUE(coords_equal(dw.coords, expected));
}

TEST(Folding, OrbitsAndFillings) {
  const auto& f = models().from_a4();
  EXPECT_EQ(f.folded_length(), 4u);
  EXPECT_EQ(f.orbit_longest(1).word, (Word{1, 2, 1}));
  EXPECT_EQ(f.orbit_words(1).size(), 2u);
  EXPECT_EQ(f.orbit_words(0).size(), 2u);
  EXPECT_EQ(f.all_fillings(models().long_first()).size(), 16u);
  EXPECT_EQ(models().from_a3().all_fillings(models().long_first()).size(), 4u);
  try {
    f.check_filling(models().long_first(), {{1, 2, 1}, {0, 3}, {1, 2, 1}, {1, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::incompatible_filling);
  }
  EXPECT_THROW(f.require_folded_reduced({0, 0, 1, 0}), Error);
}

TEST(Folding, ReadBlocksAndFoldCoordinates) {
  const auto& f = models().from_a3();
  auto cp = f.s_map(FoldedDecoratedWord<TropInt>{models().long_first(), tz({1, 1, 1, 1})});
  auto back = f.fold_coordinates(cp, models().long_first());
  EXPECT_EQ(back.word, models().long_first());
  EXPECT_TRUE(coords_equal(back.coords, tz({1, 1, 1, 1})));

  const Word w = parse_word(f.source(), "22'12'21");
  auto bad = f.chamber().canonical(DecoratedWord<TropInt>{w, tz({1, 2, 1, 1, 1, 1})});
  try {
    f.fold_coordinates(bad, models().long_first());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::pattern_violation);
  }
}

TEST(Folding, ClosedFormValues) {
  auto r = b2_closed_form(PosRational(1), PosRational(1), PosRational(1), PosRational(1));
  EXPECT_EQ(r[0], PosRational(1, 5));
  EXPECT_EQ(r[1], PosRational(5, 3));
  EXPECT_EQ(r[2], PosRational(9, 5));
  EXPECT_EQ(r[3], PosRational(1, 3));
  EXPECT_EQ(b2_tropical(0, 0, 0, 0), (std::array<std::int64_t, 4>{0, 0, 0, 0}));
  EXPECT_EQ(b2_tropical(1, 2, 3, 4), (std::array<std::int64_t, 4>{8, 1, 2, 3}));
  auto t = b2_closed_form(TropInt{1}, TropInt{2}, TropInt{3}, TropInt{4});
  EXPECT_EQ(t[0], TropInt{8});
  EXPECT_EQ(t[3], TropInt{3});
}

TEST(Folding, ClosedFormIsNotAnInvolution) {
  auto r = b2_closed_form(PosRational(1), PosRational(1), PosRational(1), PosRational(1));
  auto rr = b2_closed_form(r[0], r[1], r[2], r[3]);
  EXPECT_EQ(rr[0], PosRational(9, 7));
  // the reversed form is the inverse
  auto back = b2_closed_form_reversed(r[0], r[1], r[2], r[3]);
  EXPECT_EQ(back[3], PosRational(1));
  EXPECT_EQ(back[2], PosRational(1));
  EXPECT_EQ(back[1], PosRational(1));
  EXPECT_EQ(back[0], PosRational(1));
}

TEST(Folding, FoldedTransitionRational) {
  for (const Folding* f : {&models().from_a3(), &models().from_a4()}) {
    std::vector<PosRational> ones(4, PosRational(1));
    auto out = f->folded_transition(FoldedDecoratedWord<PosRational>{models().long_first(), ones},
                                    models().short_first());
    EXPECT_EQ(out.word, models().short_first());
    EXPECT_TRUE(coords_equal(out.coords, {PosRational(1, 5), PosRational(5, 3), PosRational(9, 5), PosRational(1, 3)}));
  }
}

TEST(Folding, FoldedTransitionMatchesClosedFormSymbolically) {
  Abcd s;
  auto expected = b2_closed_form(s.d, s.c, s.b, s.a);
  for (const auto* map : {&models().a3_map(), &models().a4_map()}) {
    auto out = map->apply(std::vector<SymRat>{s.d, s.c, s.b, s.a});
    for (int k = 0; k < 4; ++k) EXPECT_TRUE(sym_equal(out.coords[k], expected[k])) << k;
  }
  EXPECT_TRUE(models().compare_models(std::vector<SymRat>{s.d, s.c, s.b, s.a}));
}

TEST(Folding, RoundTripAndModelAgreement) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    std::vector<TropInt> c;
    std::vector<PosRational> q;
    for (int k = 0; k < 4; ++k) {
      c.push_back(TropInt{std::uniform_int_distribution<int>(-20, 20)(rng)});
      q.push_back(PosRational(std::uniform_int_distribution<int>(1, 30)(rng), std::uniform_int_distribution<int>(1, 7)(rng)));
    }
    EXPECT_TRUE(models().compare_models(c));
    EXPECT_TRUE(models().compare_models(q));
    const auto& f = models().from_a4();
    auto there = f.folded_transition(FoldedDecoratedWord<TropInt>{models().long_first(), c}, models().short_first());
    auto back = f.folded_transition(there, models().long_first());
    EXPECT_TRUE(coords_equal(back.coords, c));
    auto direct = b2_tropical(c[0].value, c[1].value, c[2].value, c[3].value);
    for (int k = 0; k < 4; ++k) EXPECT_EQ(there.coords[k].value, direct[k]);
  }
}

TEST(Folding, FillingIndependence) {
  Abcd s;
  for (const Folding* f : {&models().from_a3(), &models().from_a4()}) {
    FoldedDecoratedWord<SymRat> fdw{models().short_first(), {s.a, s.b, s.c, s.d}};
    auto ref = f->s_map(fdw);
    for (const auto& filling : f->all_fillings(fdw.word)) EXPECT_EQ(f->s_map(fdw, filling), ref);
    EXPECT_TRUE(f->chamber().is_sigma_fixed(ref, f->sigma()));
  }
}

TEST(Folding, G2FromTriality) {
  auto f = Folding::from_builtin("D4+triality");
  EXPECT_EQ(f.folded_length(), 6u);
  const Word from = f.folded_group().w0_word_starting_with(0), to = f.folded_group().w0_word_starting_with(1);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 10; ++t) {
    std::vector<TropInt> c;
    for (int k = 0; k < 6; ++k) c.push_back(TropInt{std::uniform_int_distribution<int>(-10, 10)(rng)});
    auto there = f.folded_transition(FoldedDecoratedWord<TropInt>{from, c}, to);
    EXPECT_EQ(there.word, to);
    auto back = f.folded_transition(there, from);
    EXPECT_TRUE(coords_equal(back.coords, c));
  }
}

TEST(Folding, FoldedLambdaRho) {
  const auto& f = models().from_a4();
  FoldedDecoratedWord<TropInt> fdw{models().long_first(), tz({3, -1, 4, 2})};
  auto cp = f.s_map(fdw);
  for (std::size_t eta = 0; eta < 2; ++eta) {
    EXPECT_EQ(f.lambda_eta(cp, eta), f.folded_lambda(fdw, eta));
    EXPECT_EQ(f.rho_eta(cp, eta), f.folded_rho(fdw, eta));
    EXPECT_EQ(f.lambda_eta(cp, eta, 1), f.folded_lambda(fdw, eta));
  }
  EXPECT_EQ(f.folded_lambda(fdw, 1), TropInt{3});
}
