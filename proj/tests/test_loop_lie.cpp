#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "homs.hpp"
#include "loop_lie.hpp"
#include "tensor_rep.hpp"

using namespace affschur;
using testing_helpers::ix;
using testing_helpers::xi;

TEST(PiTilde, Examples) {
  EXPECT_EQ(pi_tilde(LoopGenerator{1, 2}, 2, 2), xi({1, 1}, {1, 2}, 2) + xi({1, 2}, {2, 2}, 2));
  EXPECT_EQ(pi_tilde(LoopGenerator{1, 1}, 2, 2), xi({1, 1}, {1, 1}, 2, Laurent(2L)) + xi({1, 2}, {1, 2}, 2));
  EXPECT_EQ(pi_tilde(LoopGenerator{1, 3}, 2, 1), xi({1}, {3}, 2));
  // E_{3,5} is E_{1,3} by periodicity
  EXPECT_EQ(pi_tilde(LoopGenerator{3, 5}, 2, 1), xi({1}, {3}, 2));
  EXPECT_THROW(pi_tilde(LoopGenerator{1, 1}, 2, 0), std::invalid_argument);
}

TEST(PiTilde, DiagonalSumIsDegreeTimesIdentity) {
  for (std::int64_t n = 1; n <= 3; ++n)
    for (int r = 1; r <= 3; ++r) {
      Element total(n, r);
      for (std::int64_t s = 1; s <= n; ++s) total += pi_tilde(LoopGenerator{s, s}, n, r);
      EXPECT_EQ(total, Laurent(static_cast<long>(r)) * identity(n, r));
    }
}

TEST(LieBracket, Examples) {
  PeriodicMatrix e12 = PeriodicMatrix::unit(2, 1, 2), e21 = PeriodicMatrix::unit(2, 2, 1);
  EXPECT_EQ(bracket(e12, e21), PeriodicMatrix::unit(2, 1, 1) - PeriodicMatrix::unit(2, 2, 2));
  EXPECT_TRUE(lie_bracket_check({1, 2}, {2, 1}, 2, 2));
  EXPECT_TRUE(bracket(e12, e12).is_zero());
  EXPECT_TRUE(lie_bracket_check({1, 2}, {1, 2}, 2, 2));
  EXPECT_TRUE(lie_bracket_check({1, 4}, {2, 1}, 2, 2));
}

TEST(LieBracket, SmallWindow) {
  for (std::int64_t n = 2; n <= 3; ++n) {
    std::vector<LoopGenerator> gens;
    for (std::int64_t s = 1; s <= n; ++s)
      for (std::int64_t j = 1; j <= n; ++j)
        for (std::int64_t l = -1; l <= 1; ++l) gens.push_back({s, j + l * n});
    for (std::size_t a = 0; a < gens.size(); a += 2)
      for (std::size_t b = 0; b < gens.size(); b += 3)
        EXPECT_TRUE(lie_bracket_check(gens[a], gens[b], n, 2)) << gens[a].s << "," << gens[a].t;
  }
}

TEST(PiTilde, CommutesWithRightAction) {
  std::int64_t n = 2;
  int r = 2;
  Element x = pi_tilde(LoopGenerator{1, 4}, n, r);
  std::vector<AffineWeylElement> group;
  for (const auto& sigma : all_permutations(r))
    for (std::int64_t e = -1; e <= 1; ++e) group.push_back({sigma, {e, 1 - e}});
  for (std::int64_t a = -2; a <= 3; ++a)
    for (std::int64_t b = -2; b <= 3; ++b) {
      TensorVector v = TensorVector::basis(n, {a, b});
      for (const auto& w : group) EXPECT_EQ(weyl_right_act(act(x, v), w), act(x, weyl_right_act(v, w)));
    }
}

TEST(PiTilde, TransferAndCollapse) {
  Laurent a = Laurent::param();
  for (std::int64_t n = 2; n <= 3; ++n)
    for (int r = 1; r <= 2; ++r)
      for (std::int64_t s = 1; s <= n; ++s)
        for (std::int64_t d : {-1, 1}) {
          LoopGenerator g{s, s + d};
          EXPECT_EQ(det_tilde_sharp(pi_tilde(g, n, static_cast<int>(n) + r)), pi_tilde(g, n, r));
        }
  for (std::int64_t n = 1; n <= 2; ++n)
    for (std::int64_t s = 1; s <= n; ++s)
      for (std::int64_t t = -3; t <= 4; ++t) {
        if (t == s) continue;
        PeriodicMatrix e = PeriodicMatrix::unit(n, s, t);
        int deg = static_cast<int>(n) + 1;
        EXPECT_EQ(psi_a(pi_tilde(e, deg)), pi_tilde(eta(a, 0, e), deg));
      }
}

TEST(GeneratorSet, Examples) {
  EXPECT_EQ(generator_set(GeneratorKind::X1, 3, 1),
            (std::vector<BasisIndex>{ix({1}, {2}, 3), ix({2}, {3}, 3), ix({3}, {4}, 3)}));
  for (std::int64_t n = 1; n <= 3; ++n)
    for (int r = 1; r <= 3; ++r) {
      auto x1 = generator_set(GeneratorKind::X1, n, r);
      EXPECT_EQ(x1.size(), static_cast<std::size_t>(n) * sorted_tuples(n, r - 1).size());
      auto y = generator_set(GeneratorKind::Y, n, r, 1);
      for (const auto& g : generator_set(GeneratorKind::X, n, r)) {
        EXPECT_TRUE(std::find(y.begin(), y.end(), g) != y.end());
        EXPECT_TRUE(in_generator_set(GeneratorKind::X, g, n));
      }
      for (const auto& g : y) EXPECT_TRUE(in_generator_set(GeneratorKind::Y, g, n));
    }
  EXPECT_FALSE(in_generator_set(GeneratorKind::Y, ix({1, 1}, {2, 2}, 2), 2));
}

TEST(DecomposeY, Examples) {
  auto diag = ix({1, 2}, {1, 2}, 2);
  auto e = decompose_y(diag, 2);
  EXPECT_EQ(e->op, Expr::Op::Gen);
  auto one = ix({1, 1}, {1, 3}, 2);
  EXPECT_EQ(decompose_y(one, 2)->op, Expr::Op::Gen);
  auto two = ix({1, 1}, {2, 2}, 2);
  auto d = decompose_y(two, 2);
  EXPECT_NE(d->op, Expr::Op::Gen);
  EXPECT_EQ(evaluate_expr(d, 2, 2), xi({1, 1}, {2, 2}, 2));
  for (const auto& g : expr_generators(d)) EXPECT_TRUE(in_generator_set(GeneratorKind::Y, g, 2));
}

TEST(DecomposeY, Window) {
  for (std::int64_t n = 1; n <= 3; ++n)
    for (int r = 1; r <= 3; ++r)
      for (const auto& x : basis_window(n, r, 1)) {
        ExprPtr e;
        ASSERT_NO_THROW(e = decompose_y(x, n)) << index_to_string(x);
        for (const auto& g : expr_generators(e)) EXPECT_TRUE(in_generator_set(GeneratorKind::Y, g, n));
      }
}

TEST(DecomposeX, RequiresSmallDegree) {
  EXPECT_THROW(decompose_x(ix({1, 1}, {1, 1}, 2), 2), std::invalid_argument);
}

TEST(DecomposeX, Window) {
  for (std::int64_t n = 2; n <= 3; ++n)
    for (int r = 1; r < n; ++r) {
      auto window = basis_window(n, r, 1);
      for (std::size_t k = 0; k < window.size(); ++k) {
        ExprPtr e;
        ASSERT_NO_THROW(e = decompose_x(window[k], n)) << index_to_string(window[k]);
        for (const auto& g : expr_generators(e)) EXPECT_TRUE(in_generator_set(GeneratorKind::X, g, n));
      }
    }
}

TEST(DecomposeX, LongOffsets) {
  for (const auto& x : {ix({1}, {5}, 2), ix({2}, {-3}, 2), ix({1, 2}, {2, 9}, 3)}) {
    ExprPtr e = decompose_x(x, x.r() == 1 ? 2 : 3);
    for (const auto& g : expr_generators(e)) EXPECT_TRUE(in_generator_set(GeneratorKind::X, g, x.r() == 1 ? 2 : 3));
  }
}
