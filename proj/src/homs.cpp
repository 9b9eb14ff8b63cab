#include "homs.hpp"

#include <algorithm>
#include <functional>

namespace affschur {

std::uint64_t collapse_index(const BasisIndex& x, std::int64_t n) {
  Split s = split(x, n);
  Partition pij = meet(partition_by_values(s.i), partition_by_values(s.j));
  return young_order(pij) / young_order(meet(pij, partition_by_values(s.eps)));
}

Element psi(const Laurent& c, std::int64_t s, const Element& x) {
  if (!c.is_monomial()) throw ArithmeticError("the parameter must be an invertible monomial");
  std::int64_t n = x.n();
  Element out(n, x.r());
  for (const auto& [idx, coeff] : x.terms()) {
    Split sp = split(idx, n);
    Laurent scale = c.pow(height(sp.eps));
    if (s == 0) scale *= Laurent(static_cast<long>(collapse_index(idx, n)));
    Tuple bottom(sp.j);
    for (int k = 0; k < idx.r(); ++k) bottom[k] += n * s * sp.eps[k];
    out.add(canonicalize(sp.i, bottom, n), scale * coeff);
  }
  return out;
}

Element psi_as(std::int64_t s, const Element& x) { return psi(Laurent::param(), s, x); }

Element psi_a(const Element& x) { return psi(Laurent::param(), 0, x); }

Element psi_a0(const Element& x) { return psi_a(x); }

namespace {

void require_degree(const Element& x) {
  if (x.r() < x.n()) throw ContextError("source degree must be at least n");
}

}  // namespace

Element det_tilde_sharp(const Element& x, const Laurent& c) {
  if (!c.is_monomial()) throw ArithmeticError("the parameter must be an invertible monomial");
  require_degree(x);
  std::int64_t n = x.n();
  int r = x.r() - static_cast<int>(n);
  Element out(n, r);
  for (const auto& [idx, coeff] : x.terms()) {
    // distinct pair values per top
    std::vector<std::vector<Pair>> by_top(n);
    for (std::size_t k = 0; k < idx.pairs.size(); ++k)
      if (k == 0 || idx.pairs[k] != idx.pairs[k - 1]) by_top[idx.pairs[k].first - 1].push_back(idx.pairs[k]);
    bool possible = true;
    for (const auto& v : by_top) possible = possible && !v.empty();
    if (!possible) continue;
    std::vector<std::size_t> choice(n, 0);
    while (true) {
      Perm sigma(n);
      Tuple eps(n);
      std::vector<bool> used(n, false);
      bool ok = true;
      for (std::int64_t m = 0; m < n && ok; ++m) {
        std::int64_t b = by_top[m][choice[m]].second;
        std::int64_t res = bar(b, n);
        if (used[res - 1]) ok = false;
        used[res - 1] = true;
        sigma[m] = static_cast<int>(res - 1);
        eps[m] = (b - res) / n;
      }
      if (ok) {
        BasisIndex rest;
        std::vector<bool> removed(idx.pairs.size(), false);
        for (std::int64_t m = 0; m < n; ++m) {
          const Pair& target = by_top[m][choice[m]];
          for (std::size_t k = 0; k < idx.pairs.size(); ++k)
            if (!removed[k] && idx.pairs[k] == target) {
              removed[k] = true;
              break;
            }
        }
        for (std::size_t k = 0; k < idx.pairs.size(); ++k)
          if (!removed[k]) rest.pairs.push_back(idx.pairs[k]);
        out.add(rest, Laurent(static_cast<long>(perm_sign(sigma))) * c.pow(height(eps)) * coeff);
      }
      std::int64_t m = n - 1;
      while (m >= 0 && choice[m] + 1 == by_top[m].size()) choice[m--] = 0;
      if (m < 0) break;
      ++choice[m];
    }
  }
  return out;
}

Element det_tilde_sharp(const Element& x) { return det_tilde_sharp(x, Laurent::param()); }

std::int64_t det_sharp_bound(const Element& x) {
  std::int64_t d = 0;
  for (const auto& [idx, c] : x.terms()) d = std::max(d, max_offset(idx));
  return d + 1;
}

Element det_tilde_sharp_bounded(const Element& x, const Laurent& c, std::int64_t bound) {
  if (!c.is_monomial()) throw ArithmeticError("the parameter must be an invertible monomial");
  require_degree(x);
  std::int64_t n = x.n();
  int r = x.r() - static_cast<int>(n);
  Element out(n, r);
  auto perms = all_permutations(static_cast<int>(n));
  for (const auto& [idx, coeff] : x.terms()) {
    for (const auto& sigma : perms) {
      Tuple eps(n, -bound);
      while (true) {
        // remove the pairs (m, sigma(m) + n eps_m) from the multiset
        std::vector<Pair> rest = idx.pairs;
        bool ok = true;
        for (std::int64_t m = 0; m < n && ok; ++m) {
          Pair target{m + 1, sigma[m] + 1 + n * eps[m]};
          auto it = std::find(rest.begin(), rest.end(), target);
          if (it == rest.end())
            ok = false;
          else
            rest.erase(it);
        }
        if (ok)
          out.add(canonicalize(rest, n), Laurent(static_cast<long>(perm_sign(sigma))) * c.pow(height(eps)) * coeff);
        std::int64_t m = n - 1;
        while (m >= 0 && eps[m] == bound) eps[m--] = -bound;
        if (m < 0) break;
        ++eps[m];
      }
    }
  }
  return out;
}

Element det_star(const Element& x) {
  if (!x.is_finite()) throw std::invalid_argument("det_star needs an element of the finite subalgebra");
  return det_tilde_sharp_bounded(x, Laurent(1L), 0);
}

RowFiniteMap phi_map(const Laurent& c, std::int64_t s, std::int64_t n, int r) {
  if (s == 0) throw std::invalid_argument("phi_{c,0} is not an endomorphism of the coordinate space");
  RowFiniteMap f;
  f.n = n;
  f.source_r = f.target_r = r;
  f.row = [c, s, n](const BasisIndex& t) { return psi(c, s, Element::basis(n, t)); };
  f.column = [c, s, n](const BasisIndex& src) -> std::optional<Element> {
    Split sp = split(src, n);
    Element out(n, src.r());
    Tuple bottom(sp.j), eps(sp.eps);
    for (std::size_t k = 0; k < eps.size(); ++k) {
      if (eps[k] % s != 0) return out;
      eps[k] /= s;
      bottom[k] += n * eps[k];
    }
    out.add(canonicalize(sp.i, bottom, n), c.pow(height(eps)));
    return out;
  };
  return f;
}

RowFiniteMap det_multiplication_map(const Laurent& c, std::int64_t n, int r) {
  RowFiniteMap f;
  f.n = n;
  f.source_r = r;
  f.target_r = r + static_cast<int>(n);
  f.row = [c, n](const BasisIndex& t) { return det_tilde_sharp(Element::basis(n, t), c); };
  return f;
}

}  // namespace affschur
