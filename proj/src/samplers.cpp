#include "samplers.hpp"

namespace affschur {

Laurent random_laurent(std::mt19937& rng, int terms) {
  std::uniform_int_distribution<int> coeff(-4, 4), expo(-2, 2), den(1, 3);
  Laurent out;
  for (int k = 0; k < terms; ++k) out += Laurent::monomial(make_rational(coeff(rng), den(rng)), expo(rng));
  return out;
}

Element random_element(std::mt19937& rng, const std::vector<BasisIndex>& window, std::int64_t n, int r, int terms) {
  std::uniform_int_distribution<std::size_t> pick(0, window.size() - 1);
  Element out(n, r);
  for (int k = 0; k < terms; ++k) out.add(window[pick(rng)], random_laurent(rng, 1));
  return out;
}

PeriodicMatrix random_matrix(std::mt19937& rng, std::int64_t n, int terms, std::int64_t spread) {
  std::uniform_int_distribution<std::int64_t> row(1, n), col(1 - spread * n, n + spread * n);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
  PeriodicMatrix g(n);
  for (int k = 0; k < terms; ++k) g.add(row(rng), col(rng), Laurent(make_rational(num(rng), den(rng))));
  return g;
}

PeriodicMatrix random_special_matrix(std::mt19937& rng, std::int64_t n, const Rational& a0) {
  while (true) {
    PeriodicMatrix g = random_matrix(rng, n, 1 + static_cast<int>(n));
    Laurent d = det_tilde(g);
    if (d.is_zero() || d.eval(a0) == 0) continue;
    Rational inv = 1 / d.eval(a0);
    PeriodicMatrix s(n);
    for (const auto& [key, c] : g.entries()) s.add(key.first, key.second, key.first == 1 ? Laurent(inv) * c : c);
    return s;
  }
}

}  // namespace affschur
