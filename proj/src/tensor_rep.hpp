#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "schur.hpp"

namespace affschur {

class ReconstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TensorVector {
  std::int64_t n = 1;
  int r = 0;
  std::map<Tuple, Laurent> terms;

  static TensorVector basis(std::int64_t n, const Tuple& t, const Laurent& c = Laurent(1L));
  void add(const Tuple& t, const Laurent& c);
  TensorVector& operator+=(const TensorVector& other);
  bool operator==(const TensorVector& other) const {
    return n == other.n && r == other.r && terms == other.terms;
  }
};

/// Distinct tuples u = k.w over w with l.w = q, for x = xi_{k,l}.
std::vector<Tuple> act_basis(const BasisIndex& x, const Tuple& q, std::int64_t n);
TensorVector act(const Element& x, const TensorVector& v);
TensorVector weyl_right_act(const TensorVector& v, const AffineWeylElement& w);

/// Product recovered from the composite action on one representative per
/// orbit of second tuples.
Structure action_product(std::int64_t n, const BasisIndex& x, const BasisIndex& y);
Element multiply_via_action(const Element& x, const Element& y);

}  // namespace affschur
