#pragma once

#include <random>

#include "schur.hpp"

namespace testing_helpers {

using namespace affschur;

inline BasisIndex ix(const Tuple& top, const Tuple& bottom, std::int64_t n) { return canonicalize(top, bottom, n); }

inline Element xi(const Tuple& top, const Tuple& bottom, std::int64_t n, const Laurent& c = Laurent(1L)) {
  return Element::basis(n, ix(top, bottom, n), c);
}

inline Element structure_element(std::int64_t n, int r, const Structure& s) {
  Element out(n, r);
  for (const auto& [idx, k] : s) out.add(idx, Laurent(k));
  return out;
}

inline Laurent random_laurent(std::mt19937& rng, int terms = 2) {
  std::uniform_int_distribution<int> coeff(-4, 4), expo(-2, 2), den(1, 3);
  Laurent out;
  for (int k = 0; k < terms; ++k) out += Laurent::monomial(make_rational(coeff(rng), den(rng)), expo(rng));
  return out;
}

inline Element random_element(std::mt19937& rng, const std::vector<BasisIndex>& window, std::int64_t n, int r,
                              int terms = 3) {
  std::uniform_int_distribution<std::size_t> pick(0, window.size() - 1);
  Element out(n, r);
  for (int k = 0; k < terms; ++k) out.add(window[pick(rng)], random_laurent(rng, 1));
  return out;
}

}  // namespace testing_helpers
