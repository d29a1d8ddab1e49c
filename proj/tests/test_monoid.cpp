#include <gtest/gtest.h>

#include <random>

#include "foldline/monoid.hpp"

using namespace foldline;

namespace {

const Monoid& a2() {
  static const Monoid m(builtin("A2").datum);
  return m;
}

const Monoid& a3() {
  static const Monoid m(builtin("A3").datum);
  return m;
}

MonoidElement random_element(const Monoid& m, std::mt19937_64& rng, int hi = 6) {
  std::vector<std::int64_t> c(m.length());
  for (auto& x : c) x = std::uniform_int_distribution<int>(0, hi)(rng);
  return m.element(c);
}

}  // namespace

TEST(Monoid, NormalForms) {
  EXPECT_EQ(a2().normal_form({0, 1, 0}, {0, 1, 2}).coords, (std::vector<std::int64_t>{0, 1, 2}));
  EXPECT_EQ(a2().normal_form({1, 0, 1}, {3, 0, 1}).coords, (std::vector<std::int64_t>{0, 1, 2}));
  Monoid a1(builtin("A1").datum);
  EXPECT_EQ(a1.normal_form({0}, {5}).coords, (std::vector<std::int64_t>{5}));
  EXPECT_EQ(a2().coords_on(a2().element({0, 1, 2}), {1, 0, 1}), (std::vector<std::int64_t>{3, 0, 1}));
  EXPECT_THROW(a2().element({0, -1, 2}), Error);
  EXPECT_THROW(a2().element({0, 1}), Error);
}

TEST(Monoid, GeneratorAction) {
  auto m = a2().element({3, 1, 2});
  EXPECT_EQ(a2().left_mul_gen({0, 0}, m).coords, (std::vector<std::int64_t>{0, 1, 2}));
  auto n = a2().element({0, 1, 2});
  EXPECT_EQ(a2().left_mul_gen({0, 2}, n), n);
  Monoid a1(builtin("A1").datum);
  EXPECT_EQ(a1.left_mul_gen({0, 3}, a1.element({5})).coords, (std::vector<std::int64_t>{3}));
  try {
    a2().left_mul_gen({0, -1}, n);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::negative_exponent);
  }
}

TEST(Monoid, RankOneProductIsMin) {
  Monoid a1(builtin("A1").datum);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      EXPECT_EQ(a1.mul(a1.element({a}), a1.element({b})).coords, (std::vector<std::int64_t>{std::min(a, b)}));
}

TEST(Monoid, BottomIsAbsorbing) {
  const auto bottom = a2().element({0, 0, 0});
  for (int x = 0; x <= 3; ++x)
    for (int y = 0; y <= 3; ++y)
      for (int z = 0; z <= 3; ++z) {
        auto m = a2().element({x, y, z});
        EXPECT_EQ(a2().mul(bottom, m), bottom);
        EXPECT_EQ(a2().mul(m, bottom), bottom);
      }
}

TEST(Monoid, BraidRelationOnGenerators) {
  // xi_1^a xi_2^b xi_1^c m = xi_2^{b+c-min(a,c)} xi_1^{min(a,c)} xi_2^{a+b-min(a,c)} m
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    auto m = random_element(a2(), rng);
    const std::int64_t a = rng() % 7, b = rng() % 7, c = rng() % 7, mn = std::min(a, c);
    auto lhs = a2().left_mul_gen({0, a}, a2().left_mul_gen({1, b}, a2().left_mul_gen({0, c}, m)));
    auto rhs = a2().left_mul_gen({1, b + c - mn}, a2().left_mul_gen({0, mn}, a2().left_mul_gen({1, a + b - mn}, m)));
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Monoid, ProductUsesAnyWordOfTheLeftFactor) {
  std::mt19937_64 rng(2);
  auto words = enumerate_reduced_words(a3().chamber().group(), a3().chamber().group().longest()).vertices;
  for (int t = 0; t < 30; ++t) {
    auto m1 = random_element(a3(), rng), m2 = random_element(a3(), rng);
    const auto& w = words[rng() % words.size()];
    auto c = a3().coords_on(m1, w);
    auto acc = m2;
    for (std::size_t k = w.size(); k-- > 0;) acc = a3().left_mul_gen({w[k], c[k]}, acc);
    EXPECT_EQ(acc, a3().mul(m1, m2));
  }
}

TEST(Monoid, LeftMulViaDifferentWords) {
  std::mt19937_64 rng(4);
  auto words = enumerate_reduced_words(a3().chamber().group(), a3().chamber().group().longest()).vertices;
  for (int t = 0; t < 30; ++t) {
    auto m = random_element(a3(), rng);
    const std::size_t i = rng() % 3;
    const std::int64_t n = rng() % 7;
    auto ref = a3().left_mul_gen({i, n}, m);
    for (const auto& w : words)
      if (w.front() == i) EXPECT_EQ(a3().left_mul_gen_via({i, n}, m, w), ref);
  }
  EXPECT_THROW(a3().left_mul_gen_via({0, 1}, a3().element({0, 0, 0, 0, 0, 0}), words.back()), Error);
}

TEST(Monoid, Frobenius) {
  EXPECT_EQ(a2().frobenius(2, a2().element({1, 2, 3})).coords, (std::vector<std::int64_t>{2, 4, 6}));
  std::mt19937_64 rng(6);
  for (int t = 0; t < 20; ++t) {
    auto m = random_element(a3(), rng);
    EXPECT_EQ(a3().frobenius(1, m), m);
    EXPECT_EQ(a3().frobenius(2, a3().frobenius(3, m)), a3().frobenius(6, m));
  }
  EXPECT_THROW(a2().frobenius(0, a2().element({1, 2, 3})), Error);
}

TEST(Monoid, SigmaAction) {
  auto b = builtin("Dstyle:n=2");
  Monoid m(b.datum);
  std::mt19937_64 rng(8);
  for (int t = 0; t < 20; ++t) {
    auto x = random_element(m, rng);
    EXPECT_EQ(m.sigma(m.sigma(x, *b.sigma), *b.sigma), x);
    EXPECT_TRUE(m.is_sigma_fixed(x, DiagramAutomorphism::identity(b.datum)));
  }
  auto f = Folding::from_builtin("Dstyle:n=2");
  auto u = unfold_element(f, m, {1, 0, 1, 0}, {2, 1, 3, 0});
  auto v = unfold_element(f, m, {1, 0, 1, 0}, {1, 4, 0, 2});
  EXPECT_TRUE(m.is_sigma_fixed(u, *b.sigma));
  EXPECT_TRUE(m.is_sigma_fixed(m.mul(u, v), *b.sigma));
}

TEST(Monoid, FoldedProduct) {
  auto f = Folding::from_builtin("A4+flip");
  Monoid m(f.source());
  const Word w{0, 1, 0, 1};
  EXPECT_EQ(folded_mul(f, m, w, {0, 0, 0, 0}, {3, 1, 4, 1}), (std::vector<std::int64_t>{0, 0, 0, 0}));
  std::mt19937_64 rng(12);
  for (int t = 0; t < 20; ++t) {
    std::vector<std::int64_t> f1(4), f2(4);
    for (auto& x : f1) x = rng() % 6;
    for (auto& x : f2) x = rng() % 6;
    auto out = folded_mul(f, m, w, f1, f2);
    for (auto x : out) EXPECT_GE(x, 0);
    auto direct = m.mul(unfold_element(f, m, w, f1), unfold_element(f, m, w, f2));
    EXPECT_EQ(unfold_element(f, m, w, out), direct);
  }
}

TEST(Monoid, StringLengths) {
  auto m = a2().element({0, 1, 2});
  EXPECT_EQ(a2().l_scan(m, 0), 0);
  EXPECT_EQ(a2().l_scan(m, 1), 3);
  EXPECT_EQ(a2().l_coordinate(m, 1), 3);
  EXPECT_EQ(a2().r_scan(m, 0), 2);
  EXPECT_EQ(a2().r_coordinate(m, 0), 2);
  std::mt19937_64 rng(10);
  for (int t = 0; t < 50; ++t) {
    auto x = random_element(a3(), rng);
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_EQ(a3().l_scan(x, i), a3().l_coordinate(x, i));
      EXPECT_EQ(a3().r_scan(x, i), a3().r_coordinate(x, i));
      EXPECT_LE(a3().l_coordinate(x, i), a3().weight_coefficient(x, i));
    }
  }
}

TEST(Monoid, WeightIsInvariant) {
  std::mt19937_64 rng(14);
  auto words = enumerate_reduced_words(a3().chamber().group(), a3().chamber().group().longest()).vertices;
  for (int t = 0; t < 10; ++t) {
    auto x = random_element(a3(), rng);
    auto w = words[rng() % words.size()];
    EXPECT_EQ(a3().normal_form(w, a3().coords_on(x, w)), x);
    EXPECT_EQ(a3().weight(x), a3().weight(a3().normal_form(w, a3().coords_on(x, w))));
  }
}

TEST(Monoid, RaiseAndLower) {
  auto m = a2().element({0, 1, 2});
  for (std::int64_t n = 0; n <= 5; ++n) {
    auto up = a2().raise_to(m, 0, n);
    EXPECT_EQ(a2().l_scan(up, 0), n);
    EXPECT_EQ(a2().lower_to_zero(up, 0), m);
  }
  EXPECT_EQ(a2().raise_to(m, 0, 0), m);
  try {
    a2().raise_to(m, 1, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_in_fiber);
  }
  EXPECT_EQ(a2().l_scan(a2().raise(m, 1), 1), 4);
}

TEST(Monoid, CrystalGraphDot) {
  auto dot = a2().crystal_graph_dot(3);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  EXPECT_NE(dot.find("label=\"1\""), std::string::npos);
  EXPECT_NE(dot.find("label=\"2\""), std::string::npos);
  EXPECT_EQ(to_string(a2(), a2().element({0, 1, 2})), "1 2 1 : (0,1,2)");
}
