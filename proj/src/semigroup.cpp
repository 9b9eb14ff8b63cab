#include "semigroup.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace affschur {

PeriodicMatrix PeriodicMatrix::identity(std::int64_t n) {
  PeriodicMatrix g(n);
  for (std::int64_t i = 1; i <= n; ++i) g.add(i, i, Laurent(1L));
  return g;
}

PeriodicMatrix PeriodicMatrix::unit(std::int64_t n, std::int64_t i, std::int64_t j, const Laurent& c) {
  PeriodicMatrix g(n);
  g.add(i, j, c);
  return g;
}

Laurent PeriodicMatrix::get(std::int64_t i, std::int64_t j) const {
  std::int64_t row = bar(i, n_);
  auto it = entries_.find({row, j + row - i});
  return it == entries_.end() ? Laurent() : it->second;
}

void PeriodicMatrix::add(std::int64_t i, std::int64_t j, const Laurent& c) {
  if (c.is_zero()) return;
  std::int64_t row = bar(i, n_);
  Pair key{row, j + row - i};
  auto [it, inserted] = entries_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

bool PeriodicMatrix::is_rational() const {
  for (const auto& [k, c] : entries_)
    if (!c.is_constant()) return false;
  return true;
}

LaurentMatrix PeriodicMatrix::to_laurent() const {
  LaurentMatrix m(n_, std::vector<Laurent>(n_));
  for (const auto& [key, c] : entries_) {
    std::int64_t col = bar(key.second, n_);
    std::int64_t l = (key.second - col) / n_;
    if (!c.is_constant()) throw std::invalid_argument("entries involving a have no t-matrix image");
    m[key.first - 1][col - 1] += Laurent::monomial(c.coeff(0), l);
  }
  return m;
}

PeriodicMatrix PeriodicMatrix::from_laurent(const LaurentMatrix& m) {
  PeriodicMatrix g(static_cast<std::int64_t>(m.size()));
  std::int64_t n = g.n();
  for (std::int64_t i = 1; i <= n; ++i)
    for (std::int64_t j = 1; j <= n; ++j)
      for (const auto& [l, c] : m[i - 1][j - 1].terms()) g.add(i, j + l * n, Laurent(c));
  return g;
}

PeriodicMatrix PeriodicMatrix::transpose() const {
  PeriodicMatrix g(n_);
  for (const auto& [key, c] : entries_) g.add(key.second, key.first, c);
  return g;
}

PeriodicMatrix& PeriodicMatrix::operator+=(const PeriodicMatrix& other) {
  if (n_ != other.n_) throw ContextError("matrices of different period");
  for (const auto& [key, c] : other.entries_) add(key.first, key.second, c);
  return *this;
}

PeriodicMatrix operator-(const PeriodicMatrix& x, const PeriodicMatrix& y) { return x + Laurent(-1L) * y; }

PeriodicMatrix operator*(const PeriodicMatrix& x, const PeriodicMatrix& y) {
  if (x.n_ != y.n_) throw ContextError("matrices of different period");
  if (x.is_rational() && y.is_rational())
    return PeriodicMatrix::from_laurent(laurent_multiply(x.to_laurent(), y.to_laurent()));
  // E_{i,b} E_{c,d} = [b = c mod n] E_{i, d + b - c}
  PeriodicMatrix out(x.n_);
  for (const auto& [kx, cx] : x.entries_)
    for (const auto& [ky, cy] : y.entries_) {
      std::int64_t diff = kx.second - ky.first;
      if (diff % x.n_ != 0) continue;
      out.add(kx.first, ky.second + diff, cx * cy);
    }
  return out;
}

PeriodicMatrix operator*(const Laurent& c, const PeriodicMatrix& x) {
  PeriodicMatrix out(x.n_);
  for (const auto& [key, v] : x.entries_) out.add(key.first, key.second, c * v);
  return out;
}

bool operator==(const PeriodicMatrix& x, const PeriodicMatrix& y) {
  return x.n_ == y.n_ && x.entries_ == y.entries_;
}

PeriodicMatrix PeriodicMatrix::map_coefficients(const std::function<Laurent(const Laurent&)>& f) const {
  PeriodicMatrix out(n_);
  for (const auto& [key, c] : entries_) out.add(key.first, key.second, f(c));
  return out;
}

LaurentMatrix laurent_multiply(const LaurentMatrix& x, const LaurentMatrix& y) {
  std::size_t n = x.size();
  LaurentMatrix out(n, std::vector<Laurent>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (x[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += x[i][k] * y[k][j];
    }
  return out;
}

Laurent laurent_det(const LaurentMatrix& m) {
  int n = static_cast<int>(m.size());
  Laurent total;
  for (const auto& sigma : all_permutations(n)) {
    Laurent term(static_cast<long>(perm_sign(sigma)));
    for (int i = 0; i < n && !term.is_zero(); ++i) term *= m[i][sigma[i]];
    total += term;
  }
  return total;
}

PeriodicMatrix eta(const Laurent& c, std::int64_t s, const PeriodicMatrix& g) {
  if (!c.is_monomial()) throw ArithmeticError("the parameter must be an invertible monomial");
  std::int64_t n = g.n();
  PeriodicMatrix out(n);
  for (const auto& [key, v] : g.entries()) {
    std::int64_t col = bar(key.second, n);
    std::int64_t l = (key.second - col) / n;
    out.add(key.first, col + s * l * n, c.pow(l) * v);
  }
  return out;
}

Laurent det_tilde(const PeriodicMatrix& g, const Laurent& c) {
  PeriodicMatrix finite = eta(c, 0, g);
  std::int64_t n = g.n();
  LaurentMatrix m(n, std::vector<Laurent>(n));
  for (const auto& [key, v] : finite.entries()) m[key.first - 1][key.second - 1] += v;
  return laurent_det(m);
}

Laurent det_tilde(const PeriodicMatrix& g) { return det_tilde(g, Laurent::param()); }

bool in_gl_generic(const PeriodicMatrix& g) { return !det_tilde(g).is_zero(); }

bool in_sl_at(const PeriodicMatrix& g, const Rational& a0) { return det_tilde(g).eval(a0) == 1; }

PeriodicMatrix weyl_conjugate(const WeylSymmetry& w, const PeriodicMatrix& g) {
  if (w.n() != g.n()) throw ContextError("symmetry rank does not match n");
  PeriodicMatrix out(g.n());
  for (const auto& [key, c] : g.entries()) out.add(w(key.first), w(key.second), c);
  return out;
}

Laurent coordinate_value(const BasisIndex& x, const PeriodicMatrix& g) {
  Laurent value(1L);
  for (const auto& [i, j] : x.pairs) {
    value *= g.get(i, j);
    if (value.is_zero()) break;
  }
  return value;
}

Element evaluate(const PeriodicMatrix& g, int r) {
  std::int64_t n = g.n();
  Element out(n, r);
  std::vector<std::pair<Pair, Laurent>> support(g.entries().begin(), g.entries().end());
  if (support.empty()) return out;
  // multisets of size r drawn from the support; sorted support gives sorted pairs
  std::vector<std::size_t> pick(r, 0);
  if (r == 0) {
    out.add(BasisIndex{}, Laurent(1L));
    return out;
  }
  while (true) {
    BasisIndex idx;
    Laurent c(1L);
    for (auto k : pick) {
      idx.pairs.push_back(support[k].first);
      c *= support[k].second;
    }
    out.add(idx, c);
    int k = r - 1;
    while (k >= 0 && pick[k] + 1 == support.size()) --k;
    if (k < 0) break;
    ++pick[k];
    for (int m = k + 1; m < r; ++m) pick[m] = pick[k];
  }
  return out;
}

Rational evaluate_polynomial(const CoordPolynomial& p, const PeriodicMatrix& g) {
  Rational total = 0;
  for (const auto& [idx, c] : p.terms) {
    Laurent v = coordinate_value(idx, g);
    if (!v.is_constant()) throw std::invalid_argument("matrix entries must be rational");
    total += c * v.coeff(0);
  }
  return total;
}

namespace {

Rational power(const Rational& base, std::int64_t e) {
  Rational out = 1;
  Rational b = e >= 0 ? base : Rational(1 / base);
  for (std::int64_t k = 0; k < (e >= 0 ? e : -e); ++k) out *= b;
  return out;
}

std::vector<Rational> small_rationals() {
  std::vector<Rational> out;
  for (long h = 1; h <= 4; ++h)
    for (long p = -h; p <= h; ++p)
      for (long q = 1; q <= h; ++q) {
        if (std::max(std::abs(p), q) != h || p == 0) continue;
        Rational v = make_rational(p, q);
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
      }
  return out;
}

Rational integer_det(const std::vector<std::vector<long>>& m) {
  LaurentMatrix lm(m.size(), std::vector<Laurent>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) lm[i][j] = Laurent(m[i][j]);
  return laurent_det(lm).coeff(0);
}

std::vector<std::vector<std::vector<long>>> base_matrices(std::int64_t n, bool special, std::size_t limit) {
  std::vector<std::vector<std::vector<long>>> out;
  std::vector<std::vector<long>> id(n, std::vector<long>(n, 0));
  for (std::int64_t i = 0; i < n; ++i) id[i][i] = 1;
  out.push_back(id);
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> entry(-2, 2);
  for (std::size_t attempt = 0; out.size() < limit && attempt < 100 * limit; ++attempt) {
    std::vector<std::vector<long>> m(n, std::vector<long>(n));
    for (auto& row : m)
      for (auto& v : row) v = entry(rng);
    Rational d = integer_det(m);
    if (special ? d == 1 : d != 0) out.push_back(m);
  }
  return out;
}

}  // namespace

Witness nonvanishing_witness(const CoordPolynomial& p, const WitnessOptions& options) {
  std::int64_t n = p.n;
  bool nonzero = false;
  for (const auto& [idx, c] : p.terms) nonzero = nonzero || c != 0;
  if (!nonzero) throw std::invalid_argument("the polynomial is zero");
  if (options.a0 == 0) throw ArithmeticError("a0 must be nonzero");
  std::vector<std::int64_t> degrees;
  for (const auto& [idx, c] : p.terms) {
    if (idx.r() != p.r) throw ContextError("polynomial is not homogeneous");
    for (const auto& [i, j] : idx.pairs) degrees.push_back((j - bar(j, n)) / n);
  }
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  std::size_t m = degrees.size();

  auto values = small_rationals();
  auto bases = base_matrices(n, options.special, 40);
  std::vector<std::size_t> digits(m > 0 ? m - 1 : 0, 0);
  int attempts = 0;
  while (attempts < options.max_attempts) {
    std::vector<Rational> x(m);
    Rational rest = 1;
    for (std::size_t k = 0; k + 1 < m; ++k) {
      x[k] = values[digits[k]];
      rest -= x[k] * power(options.a0, degrees[k]);
    }
    x[m - 1] = rest / power(options.a0, degrees[m - 1]);
    for (const auto& base : bases) {
      ++attempts;
      PeriodicMatrix g(n);
      for (std::size_t k = 0; k < m; ++k)
        for (std::int64_t i = 1; i <= n; ++i)
          for (std::int64_t j = 1; j <= n; ++j)
            g.add(i, j + degrees[k] * n, Laurent(x[k] * base[i - 1][j - 1]));
      Rational value = evaluate_polynomial(p, g);
      if (value == 0) continue;
      Witness w{g, value, det_tilde(g), options.a0, degrees};
      bool member = options.special ? w.determinant.eval(options.a0) == 1 : !w.determinant.is_zero();
      if (!member) throw std::logic_error("witness construction left the semigroup");
      return w;
    }
    std::size_t k = 0;
    while (k < digits.size() && digits[k] + 1 == values.size()) digits[k++] = 0;
    if (k == digits.size()) break;
    ++digits[k];
  }
  throw std::runtime_error("no witness found within the search budget");
}

std::string matrix_to_string(const PeriodicMatrix& g) {
  if (g.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : g.entries()) {
    os << (first ? "" : " + ");
    first = false;
    if (c.is_constant()) {
      if (c.coeff(0) == -1)
        os << '-';
      else if (c.coeff(0) != 1)
        os << c.coeff(0).get_str() << '*';
    } else {
      os << '(' << c.to_string() << ")*";
    }
    os << "E[" << key.first << ',' << key.second << ']';
  }
  return os.str();
}

}  // namespace affschur
