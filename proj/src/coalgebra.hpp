#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "schur.hpp"

namespace affschur {

/// Coordinate functions c_{i,j} share the canonical index of xi_{i,j}.
using CoordIndex = BasisIndex;

int pair(const BasisIndex& xi, const CoordIndex& c, std::int64_t n);

/// Number of middle tuples s with (p,s) in the orbit of x1 and (s,q) in the
/// orbit of x2, where (p,q) is the representative of c.
std::int64_t delta_pair(const BasisIndex& x1, const BasisIndex& x2, const CoordIndex& c, std::int64_t n);

/// Middle-tuple counting product.
Structure schur_product(std::int64_t n, const BasisIndex& x, const BasisIndex& y);
Element multiply_schur_oracle(const Element& x, const Element& y);

/// Linear map F between coordinate spaces, known through its rows
/// F^#(xi_t) (always finite) and optionally its columns F(c_s).
struct RowFiniteMap {
  std::int64_t n = 1;
  int source_r = 0;
  int target_r = 0;
  /// Finite sum over source indices: F^#(xi_t).
  std::function<Element(const BasisIndex& target)> row;
  /// Finite sum over target indices: F(c_s), when F is column finite.
  std::function<std::optional<Element>(const BasisIndex& source)> column;

  Element sharp(const Element& x) const;
};

RowFiniteMap identity_map(std::int64_t n, int r);

struct SharpCheckResult {
  bool ok = true;
  std::size_t entries = 0;
  std::string detail;
};

/// Checks (g o f)^# = f^# o g^# on every xi_t with t in the window. The left
/// side is read off the columns of f and the rows of g entry by entry; the
/// right side composes the row rules. Candidate sources are the support of
/// the right side together with `probe`.
SharpCheckResult sharp_compose_check(const RowFiniteMap& f, const RowFiniteMap& g,
                                     const std::vector<BasisIndex>& window,
                                     const std::vector<BasisIndex>& probe = {});

}  // namespace affschur
