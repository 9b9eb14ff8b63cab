#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "laurent.hpp"
#include "weyl.hpp"

namespace affschur {

using Pair = std::pair<std::int64_t, std::int64_t>;

/// Canonical representative of an orbit on I(Z,r) x I(Z,r): tops in 1..n,
/// pairs sorted lexicographically.
struct BasisIndex {
  std::vector<Pair> pairs;

  int r() const { return static_cast<int>(pairs.size()); }
  Tuple tops() const;
  Tuple bottoms() const;
  /// Number of positions whose top and bottom differ.
  int off_diagonal() const;
  bool operator==(const BasisIndex&) const = default;
  auto operator<=>(const BasisIndex&) const = default;
};

BasisIndex canonicalize(const Tuple& i, const Tuple& j, std::int64_t n);
BasisIndex canonicalize(const std::vector<Pair>& pairs, std::int64_t n);
bool is_canonical(const BasisIndex& x, std::int64_t n);

/// x = xi_{i, j + n eps} with i, j in I(n,r).
struct Split {
  Tuple i, j, eps;
};
Split split(const BasisIndex& x, std::int64_t n);
std::int64_t height(const Tuple& eps);

/// Some w with j.w = k, if the residue multisets agree.
std::optional<AffineWeylElement> equivalent_middle(const Tuple& j, const Tuple& k, std::int64_t n);

/// Residues of the bottom tuple, sorted; two indices can be composed iff the
/// left one's bottom signature equals the right one's top signature.
Tuple residue_signature(const Tuple& t, std::int64_t n);

class Element {
 public:
  using Terms = std::map<BasisIndex, Laurent>;

  Element() = default;
  Element(std::int64_t n, int r) : n_(n), r_(r) {}
  static Element basis(std::int64_t n, const BasisIndex& x, const Laurent& c = Laurent(1L));

  std::int64_t n() const { return n_; }
  int r() const { return r_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Laurent coeff(const BasisIndex& x) const;
  /// True when every term has bottoms in 1..n.
  bool is_finite() const;

  void add(const BasisIndex& x, const Laurent& c);
  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  friend Element operator+(Element x, const Element& y) { return x += y; }
  friend Element operator-(Element x, const Element& y) { return x -= y; }
  friend Element operator*(const Laurent& c, const Element& x);
  Element operator-() const;
  friend bool operator==(const Element& x, const Element& y);

  /// Apply a coefficient map termwise.
  Element map_coefficients(const std::function<Laurent(const Laurent&)>& f) const;

 private:
  std::int64_t n_ = 1;
  int r_ = 0;
  Terms terms_;
};

void check_same_context(const Element& x, const Element& y);

/// Integer structure constants of a product of two basis elements.
using Structure = std::map<BasisIndex, std::int64_t>;
using BasisProduct = std::function<Structure(std::int64_t n, const BasisIndex&, const BasisIndex&)>;

/// Double-coset product over the symmetric group.
Structure green_product(std::int64_t n, const BasisIndex& x, const BasisIndex& y);

Element multiply(const Element& x, const Element& y);
Element multiply_using(const Element& x, const Element& y, const BasisProduct& rule);
Element identity(std::int64_t n, int r);

/// Element of the extended affine Weyl group of type A_{n-1} given by its
/// window (w(1),...,w(n)); w(z + n) = w(z) + n.
class WeylSymmetry {
 public:
  WeylSymmetry() = default;
  explicit WeylSymmetry(Tuple window);
  static WeylSymmetry identity(std::int64_t n);
  static WeylSymmetry rho(std::int64_t n);
  /// s_1..s_{n-1} swap neighbours; s_n swaps n and n+1.
  static WeylSymmetry reflection(int i, std::int64_t n);

  std::int64_t n() const { return static_cast<std::int64_t>(window_.size()); }
  const Tuple& window() const { return window_; }
  std::int64_t operator()(std::int64_t z) const;
  std::int64_t inverse_apply(std::int64_t y) const;
  WeylSymmetry inverse() const;
  WeylSymmetry pow(std::int64_t k) const;
  friend WeylSymmetry operator*(const WeylSymmetry& w, const WeylSymmetry& v);  // w o v
  bool operator==(const WeylSymmetry&) const = default;

 private:
  Tuple window_;
};

BasisIndex weyl_act(const WeylSymmetry& w, const BasisIndex& x, std::int64_t n);
Element weyl_act(const WeylSymmetry& w, const Element& x);
BasisIndex transpose(const BasisIndex& x, std::int64_t n);
Element transpose(const Element& x);

/// Canonical indices of S(n,r)~ whose bottom - top offsets lie in [-d, d].
std::vector<BasisIndex> basis_window(std::int64_t n, int r, std::int64_t d);
/// Largest |bottom - top| over the pairs.
std::int64_t max_offset(const BasisIndex& x);

std::string index_to_string(const BasisIndex& x);  // xi[(1,2)|(3,2)]
std::string element_to_string(const Element& x);

}  // namespace affschur
