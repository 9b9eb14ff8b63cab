#pragma once

#include <random>

#include "semigroup.hpp"

namespace affschur {

Laurent random_laurent(std::mt19937& rng, int terms = 2);
Element random_element(std::mt19937& rng, const std::vector<BasisIndex>& window, std::int64_t n, int r, int terms = 3);
/// `terms` random rational entries with columns within `spread` periods.
PeriodicMatrix random_matrix(std::mt19937& rng, std::int64_t n, int terms, std::int64_t spread = 1);
/// A random matrix rescaled on its first row so that det~ is 1 at a0.
PeriodicMatrix random_special_matrix(std::mt19937& rng, std::int64_t n, const Rational& a0);

}  // namespace affschur
