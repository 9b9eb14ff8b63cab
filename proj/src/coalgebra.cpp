#include "coalgebra.hpp"

#include <set>

namespace affschur {

int pair(const BasisIndex& xi, const CoordIndex& c, std::int64_t n) {
  return canonicalize(xi.pairs, n) == canonicalize(c.pairs, n) ? 1 : 0;
}

namespace {

std::vector<Perm> perms_fixing(const Tuple& t) {
  std::vector<Perm> out;
  for (auto& p : all_permutations(static_cast<int>(t.size())))
    if (permute(t, p) == t) out.push_back(std::move(p));
  return out;
}

}  // namespace

std::int64_t delta_pair(const BasisIndex& x1, const BasisIndex& x2, const CoordIndex& c, std::int64_t n) {
  if (x1.r() != x2.r() || x1.r() != c.r()) throw ContextError("indices of different degree");
  BasisIndex rep = canonicalize(c.pairs, n);
  Tuple p = rep.tops(), q = rep.bottoms();
  BasisIndex left = canonicalize(x1.pairs, n), right = canonicalize(x2.pairs, n);
  Tuple i1 = left.tops(), j1 = left.bottoms();
  std::set<Tuple> middles;
  for (const auto& sigma : all_permutations(c.r())) {
    if (permute(i1, sigma) != p) continue;
    Tuple s = permute(j1, sigma);
    if (canonicalize(s, q, n) == right) middles.insert(s);
  }
  return static_cast<std::int64_t>(middles.size());
}

Structure schur_product(std::int64_t n, const BasisIndex& x, const BasisIndex& y) {
  Structure out;
  Tuple i1 = x.tops(), j1 = x.bottoms();
  Tuple k = y.tops(), l = y.bottoms();
  int r = x.r();
  std::set<Tuple> middles;
  for (const auto& sigma : perms_fixing(i1)) middles.insert(permute(j1, sigma));
  std::set<Tuple> candidates;
  auto perms = all_permutations(r);
  for (const auto& s : middles) {
    for (const auto& sigma : perms) {
      Tuple q(r);
      bool ok = true;
      for (int m = 0; m < r && ok; ++m) {
        std::int64_t diff = s[m] - k[sigma[m]];
        if (diff % n != 0) ok = false;
        q[m] = l[sigma[m]] + diff;
      }
      if (!ok) continue;
      // keep only the bottom tuple that makes (i1, q) canonical
      bool sorted = true;
      for (int m = 0; m + 1 < r && sorted; ++m)
        if (i1[m] == i1[m + 1] && q[m] > q[m + 1]) sorted = false;
      if (sorted) candidates.insert(q);
    }
  }
  for (const auto& q : candidates) {
    BasisIndex c = canonicalize(i1, q, n);
    std::int64_t z = delta_pair(x, y, c, n);
    if (z != 0) out[c] += z;
  }
  return out;
}

Element multiply_schur_oracle(const Element& x, const Element& y) {
  return multiply_using(x, y, schur_product);
}

Element RowFiniteMap::sharp(const Element& x) const {
  Element out(n, source_r);
  for (const auto& [t, c] : x.terms()) out += c * row(t);
  return out;
}

RowFiniteMap identity_map(std::int64_t n, int r) {
  RowFiniteMap f;
  f.n = n;
  f.source_r = f.target_r = r;
  f.row = [n](const BasisIndex& t) { return Element::basis(n, t); };
  f.column = [n](const BasisIndex& s) -> std::optional<Element> { return Element::basis(n, s); };
  return f;
}

SharpCheckResult sharp_compose_check(const RowFiniteMap& f, const RowFiniteMap& g,
                                     const std::vector<BasisIndex>& window,
                                     const std::vector<BasisIndex>& probe) {
  SharpCheckResult result;
  if (f.n != g.n || f.target_r != g.source_r) throw ContextError("maps cannot be composed");
  if (!f.column) throw std::invalid_argument("the inner map needs a column rule");
  for (const auto& t : window) {
    Element g_row = g.row(t);
    Element rhs = f.sharp(g_row);
    std::set<BasisIndex> sources(probe.begin(), probe.end());
    for (const auto& [s, c] : rhs.terms()) sources.insert(s);
    for (const auto& s : sources) {
      auto col = f.column(s);
      if (!col) throw std::invalid_argument("column rule undefined at " + index_to_string(s));
      Laurent lhs;
      for (const auto& [m, fm] : col->terms()) lhs += fm * g_row.coeff(m);
      ++result.entries;
      if (!(lhs == rhs.coeff(s))) {
        result.ok = false;
        result.detail = "entry (" + index_to_string(t) + ", " + index_to_string(s) + "): " + lhs.to_string() +
                        " vs " + rhs.coeff(s).to_string();
        return result;
      }
    }
  }
  return result;
}

}  // namespace affschur
