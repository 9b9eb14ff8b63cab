#include <gtest/gtest.h>

#include <random>

#include "coalgebra.hpp"
#include "helpers.hpp"
#include "homs.hpp"

using namespace affschur;
using testing_helpers::ix;
using testing_helpers::xi;

namespace {

using Matrix = std::map<std::pair<BasisIndex, BasisIndex>, Rational>;

// row t -> sum_s M[t,s] xi_s, column s -> sum_t M[t,s] c_t
RowFiniteMap from_matrix(const Matrix& m, std::int64_t n, int r) {
  RowFiniteMap f;
  f.n = n;
  f.source_r = f.target_r = r;
  f.row = [m, n, r](const BasisIndex& t) {
    Element out(n, r);
    for (const auto& [k, c] : m)
      if (k.first == t) out.add(k.second, Laurent(c));
    return out;
  };
  f.column = [m, n, r](const BasisIndex& s) -> std::optional<Element> {
    Element out(n, r);
    for (const auto& [k, c] : m)
      if (k.second == s) out.add(k.first, Laurent(c));
    return out;
  };
  return f;
}

}  // namespace

TEST(Pairing, Examples) {
  auto x = ix({1, 1}, {1, 2}, 1);
  EXPECT_EQ(pair(x, x, 1), 1);
  EXPECT_EQ(pair(x, ix({1, 1}, {2, 1}, 1), 1), 1);
  EXPECT_EQ(pair(ix({1, 1}, {1, 1}, 1), x, 1), 0);
}

TEST(Pairing, SeparatesWindow) {
  auto window = basis_window(2, 2, 1);
  for (const auto& a : window)
    for (const auto& b : window) EXPECT_EQ(pair(a, b, 2), a == b ? 1 : 0);
}

TEST(DeltaPair, Examples) {
  auto ii = ix({1, 2}, {1, 2}, 2), ij = ix({1, 2}, {2, 3}, 2);
  EXPECT_EQ(delta_pair(ii, ij, ij, 2), 1);
  EXPECT_EQ(delta_pair(ix({1, 2}, {1, 1}, 2), ix({1, 1}, {1, 2}, 2), ix({1, 2}, {1, 2}, 2), 2), 1);
  EXPECT_EQ(delta_pair(ix({1, 1}, {1, 2}, 1), ix({1, 1}, {1, 2}, 1), ix({1, 1}, {2, 2}, 1), 1), 2);
}

TEST(DeltaPair, TransposeSymmetry) {
  for (std::int64_t n = 1; n <= 2; ++n) {
    auto window = basis_window(n, 2, 1);
    for (std::size_t a = 0; a < window.size(); a += 2)
      for (std::size_t b = 0; b < window.size(); b += 3) {
        for (const auto& [c, k] : schur_product(n, window[a], window[b])) {
          EXPECT_EQ(delta_pair(window[a], window[b], c, n),
                    delta_pair(transpose(window[b], n), transpose(window[a], n), transpose(c, n), n));
          EXPECT_EQ(delta_pair(window[a], window[b], c, n), k);
        }
      }
  }
}

TEST(SchurOracle, Examples) {
  Element x = xi({1, 1}, {1, 2}, 1);
  EXPECT_EQ(multiply_schur_oracle(x, x), xi({1, 1}, {1, 3}, 1) + xi({1, 1}, {2, 2}, 1, Laurent(2L)));
  std::mt19937 rng(21);
  auto window = basis_window(2, 2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    Element y = testing_helpers::random_element(rng, window, 2, 2);
    EXPECT_EQ(multiply_schur_oracle(y, identity(2, 2)), y);
  }
  // bottom residues (1,1) against top residues (1,2)
  EXPECT_TRUE(multiply_schur_oracle(xi({1, 1}, {1, 3}, 2), xi({1, 2}, {1, 2}, 2)).is_zero());
}

TEST(SharpCompose, Identity) {
  auto id = identity_map(2, 2);
  auto res = sharp_compose_check(id, id, basis_window(2, 2, 1));
  EXPECT_TRUE(res.ok) << res.detail;
  EXPECT_GT(res.entries, 0u);
}

TEST(SharpCompose, PhiThenDeterminant) {
  Laurent a = Laurent::param();
  auto f = phi_map(a, 1, 2, 1);
  auto g = det_multiplication_map(a, 2, 1);
  auto res = sharp_compose_check(f, g, basis_window(2, 3, 1), basis_window(2, 1, 1));
  EXPECT_TRUE(res.ok) << res.detail;
  EXPECT_GT(res.entries, 0u);
}

TEST(SharpCompose, RandomSparseMaps) {
  std::mt19937 rng(22);
  auto all = basis_window(2, 2, 1);
  std::vector<BasisIndex> window(all.begin(), all.begin() + 10);
  std::uniform_int_distribution<std::size_t> pick(0, window.size() - 1);
  std::uniform_int_distribution<int> num(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix mf, mg;
    for (int k = 0; k < 15; ++k) {
      mf[{window[pick(rng)], window[pick(rng)]}] += num(rng);
      mg[{window[pick(rng)], window[pick(rng)]}] += num(rng);
    }
    auto res = sharp_compose_check(from_matrix(mf, 2, 2), from_matrix(mg, 2, 2), window, window);
    EXPECT_TRUE(res.ok) << res.detail;
  }
}
