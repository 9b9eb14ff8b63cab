#include "tensor_rep.hpp"

#include <set>

namespace affschur {

TensorVector TensorVector::basis(std::int64_t n, const Tuple& t, const Laurent& c) {
  TensorVector v;
  v.n = n;
  v.r = static_cast<int>(t.size());
  v.add(t, c);
  return v;
}

void TensorVector::add(const Tuple& t, const Laurent& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(t.size()) != r) throw ContextError("tuple of the wrong length");
  auto [it, inserted] = terms.emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

TensorVector& TensorVector::operator+=(const TensorVector& other) {
  if (n != other.n || r != other.r) throw ContextError("tensor vectors of different context");
  for (const auto& [t, c] : other.terms) add(t, c);
  return *this;
}

namespace {

const std::vector<Perm>& cached_permutations(int r) {
  static thread_local std::map<int, std::vector<Perm>> table;
  auto it = table.find(r);
  if (it == table.end()) it = table.emplace(r, all_permutations(r)).first;
  return it->second;
}

}  // namespace

std::vector<Tuple> act_basis(const BasisIndex& x, const Tuple& q, std::int64_t n) {
  int r = x.r();
  if (static_cast<int>(q.size()) != r) throw ContextError("tuple of the wrong length");
  Tuple k = x.tops(), l = x.bottoms();
  std::set<Tuple> images;
  for (const auto& sigma : cached_permutations(r)) {
    Tuple u(r);
    bool ok = true;
    for (int m = 0; m < r && ok; ++m) {
      std::int64_t diff = q[m] - l[sigma[m]];
      if (diff % n != 0) ok = false;
      u[m] = k[sigma[m]] + diff;
    }
    if (ok) images.insert(u);
  }
  return {images.begin(), images.end()};
}

TensorVector act(const Element& x, const TensorVector& v) {
  if (x.n() != v.n || x.r() != v.r) throw ContextError("element and vector of different context");
  TensorVector out;
  out.n = v.n;
  out.r = v.r;
  for (const auto& [q, cv] : v.terms)
    for (const auto& [idx, cx] : x.terms()) {
      Laurent c = cx * cv;
      for (const auto& u : act_basis(idx, q, v.n)) out.add(u, c);
    }
  return out;
}

TensorVector weyl_right_act(const TensorVector& v, const AffineWeylElement& w) {
  TensorVector out;
  out.n = v.n;
  out.r = v.r;
  for (const auto& [t, c] : v.terms) out.add(weyl_apply(w, t, v.n), c);
  return out;
}

namespace {

template <class Coeff>
void record(std::map<BasisIndex, Coeff>& out, const BasisIndex& idx, const Coeff& c, const Tuple& u) {
  auto [it, inserted] = out.emplace(idx, c);
  if (!inserted && !(it->second == c))
    throw ReconstructionError("inconsistent coefficients for " + index_to_string(idx) + " at tuple of length " +
                              std::to_string(u.size()));
}

}  // namespace

Structure action_product(std::int64_t n, const BasisIndex& x, const BasisIndex& y) {
  if (x.r() != y.r()) throw ContextError("basis indices of different degree");
  Tuple q = residue_signature(y.bottoms(), n);
  std::map<Tuple, std::int64_t> image;
  for (const auto& u : act_basis(y, q, n))
    for (const auto& w : act_basis(x, u, n)) ++image[w];
  Structure out;
  for (const auto& [u, c] : image) record(out, canonicalize(u, q, n), c, u);
  return out;
}

Element multiply_via_action(const Element& x, const Element& y) {
  check_same_context(x, y);
  std::int64_t n = x.n();
  std::map<Tuple, Element> by_orbit;
  for (const auto& [idx, c] : y.terms()) {
    Tuple q = residue_signature(idx.bottoms(), n);
    auto it = by_orbit.try_emplace(q, Element(n, y.r())).first;
    it->second.add(idx, c);
  }
  Element out(n, x.r());
  for (const auto& [q, part] : by_orbit) {
    TensorVector v = act(x, act(part, TensorVector::basis(n, q)));
    std::map<BasisIndex, Laurent> coeffs;
    for (const auto& [u, c] : v.terms) record(coeffs, canonicalize(u, q, n), c, u);
    for (const auto& [idx, c] : coeffs) out.add(idx, c);
  }
  return out;
}

}  // namespace affschur
