#pragma once

#include <map>
#include <optional>
#include <vector>

#include "schur.hpp"

namespace affschur {

/// n x n matrix over Laurent polynomials in the loop variable t.
using LaurentMatrix = std::vector<std::vector<Laurent>>;

/// Z-periodic matrix with m_{i,j} = m_{i+n,j+n}, stored by (row in 1..n,
/// column in Z). Entries may involve the parameter a (after eta).
class PeriodicMatrix {
 public:
  using Entries = std::map<Pair, Laurent>;

  PeriodicMatrix() = default;
  explicit PeriodicMatrix(std::int64_t n) : n_(n) {}
  static PeriodicMatrix identity(std::int64_t n);
  /// E_{i,j} for arbitrary integers i, j.
  static PeriodicMatrix unit(std::int64_t n, std::int64_t i, std::int64_t j, const Laurent& c = Laurent(1L));
  static PeriodicMatrix from_laurent(const LaurentMatrix& m);

  std::int64_t n() const { return n_; }
  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  Laurent get(std::int64_t i, std::int64_t j) const;
  void add(std::int64_t i, std::int64_t j, const Laurent& c);
  /// All stored entries are a-free.
  bool is_rational() const;

  LaurentMatrix to_laurent() const;
  PeriodicMatrix transpose() const;

  PeriodicMatrix& operator+=(const PeriodicMatrix& other);
  friend PeriodicMatrix operator+(PeriodicMatrix x, const PeriodicMatrix& y) { return x += y; }
  friend PeriodicMatrix operator-(const PeriodicMatrix& x, const PeriodicMatrix& y);
  friend PeriodicMatrix operator*(const PeriodicMatrix& x, const PeriodicMatrix& y);
  friend PeriodicMatrix operator*(const Laurent& c, const PeriodicMatrix& x);
  friend bool operator==(const PeriodicMatrix& x, const PeriodicMatrix& y);

  PeriodicMatrix map_coefficients(const std::function<Laurent(const Laurent&)>& f) const;

 private:
  std::int64_t n_ = 1;
  Entries entries_;
};

LaurentMatrix laurent_multiply(const LaurentMatrix& x, const LaurentMatrix& y);
Laurent laurent_det(const LaurentMatrix& m);

/// E_{i,j+ln} -> c^l E_{i,j+sln}; s = 0 collapses onto the finite matrices.
PeriodicMatrix eta(const Laurent& c, std::int64_t s, const PeriodicMatrix& g);
/// det(eta_{c,0}(g)) as a Laurent polynomial in a.
Laurent det_tilde(const PeriodicMatrix& g, const Laurent& c);
Laurent det_tilde(const PeriodicMatrix& g);

bool in_gl_generic(const PeriodicMatrix& g);
bool in_sl_at(const PeriodicMatrix& g, const Rational& a0);

/// g'_{ij} = g_{w^-1(i), w^-1(j)}.
PeriodicMatrix weyl_conjugate(const WeylSymmetry& w, const PeriodicMatrix& g);

/// c_{i,j}(g) = prod_k g_{i_k, j_k}.
Laurent coordinate_value(const BasisIndex& x, const PeriodicMatrix& g);
/// Sum over canonical (i,j) of c_{i,j}(g) xi_{i,j}.
Element evaluate(const PeriodicMatrix& g, int r);

/// Finite linear combination of coordinate functions of one degree.
struct CoordPolynomial {
  std::int64_t n = 1;
  int r = 0;
  std::map<BasisIndex, Rational> terms;
};
Rational evaluate_polynomial(const CoordPolynomial& p, const PeriodicMatrix& g);

struct WitnessOptions {
  bool special = false;  // require SL at a0 instead of GL generically
  Rational a0 = 1;
  int max_attempts = 200000;
};

struct Witness {
  PeriodicMatrix g;
  Rational value;       // P(g)
  Laurent determinant;  // det~(g)
  Rational a0;
  std::vector<std::int64_t> degrees;  // loop degrees used
};

/// g with P(g) != 0, assembled as sum_l x_l g'_{ij} E_{i,j+ln} with
/// sum_l x_l a0^l = 1 and g' invertible (det g' = 1 when special).
Witness nonvanishing_witness(const CoordPolynomial& p, const WitnessOptions& options = {});

std::string matrix_to_string(const PeriodicMatrix& g);

}  // namespace affschur
