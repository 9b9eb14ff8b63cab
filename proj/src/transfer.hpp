#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "laurent.hpp"
#include "weyl.hpp"

namespace affschur {

class TransferError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Symmetric group acting on {0..m-1} by i.g = g^-1(i).
struct PointAction {
  using Element = Perm;
  using Point = int;
  Element mul(const Element& g, const Element& h) const { return compose(g, h); }
  Element inv(const Element& g) const { return inverse(g); }
  Point act(Point i, const Element& g) const { return inverse(g)[i]; }
};

/// Symmetric group acting on tuples by place permutation.
struct PlaceAction {
  using Element = Perm;
  using Point = Tuple;
  Element mul(const Element& g, const Element& h) const { return compose(g, h); }
  Element inv(const Element& g) const { return inverse(g); }
  Point act(const Point& i, const Element& g) const { return permute(i, g); }
};

/// Extended affine Weyl group acting on I(Z,r).
struct AffineAction {
  using Element = AffineWeylElement;
  using Point = Tuple;
  std::int64_t n = 1;
  Element mul(const Element& g, const Element& h) const { return weyl_compose(g, h); }
  Element inv(const Element& g) const { return weyl_inverse(g); }
  Point act(const Point& i, const Element& g) const { return weyl_apply(g, i, n); }
};

/// Transfer operators for a right action on a set of points, over finite
/// subgroups given by their element lists. An operator is a finite sum of
/// x_{ij}, with x_{ij} x_{kl} = [j = k] x_{il} and (x_{ij})^g = x_{ig,jg}.
template <class Ctx>
class Transfers {
 public:
  using G = typename Ctx::Element;
  using P = typename Ctx::Point;
  using Op = std::map<std::pair<P, P>, Rational>;
  using Group = std::vector<G>;

  explicit Transfers(Ctx ctx = {}) : ctx_(std::move(ctx)) {}
  const Ctx& context() const { return ctx_; }

  static void add_to(Op& a, const std::pair<P, P>& key, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = a.emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) a.erase(it);
    }
  }
  static Op add(Op a, const Op& b) {
    for (const auto& [k, c] : b) add_to(a, k, c);
    return a;
  }
  static Op scale(const Rational& s, const Op& a) {
    Op out;
    for (const auto& [k, c] : a) add_to(out, k, s * c);
    return out;
  }
  static Op multiply(const Op& a, const Op& b) {
    std::map<P, std::vector<std::pair<P, Rational>>> rows;
    for (const auto& [k, c] : b) rows[k.first].emplace_back(k.second, c);
    Op out;
    for (const auto& [k, c] : a) {
      auto it = rows.find(k.second);
      if (it == rows.end()) continue;
      for (const auto& [l, d] : it->second) add_to(out, {k.first, l}, c * d);
    }
    return out;
  }

  Op act(const Op& a, const G& g) const {
    Op out;
    for (const auto& [k, c] : a) add_to(out, {ctx_.act(k.first, g), ctx_.act(k.second, g)}, c);
    return out;
  }

  bool invariant(const Op& a, const Group& h) const {
    return std::all_of(h.begin(), h.end(), [&](const G& g) { return act(a, g) == a; });
  }

  static bool contains(const Group& h, const G& g) { return std::binary_search(h.begin(), h.end(), g); }
  static bool is_subgroup(const Group& small, const Group& big) {
    return std::all_of(small.begin(), small.end(), [&](const G& g) { return contains(big, g); });
  }

  /// Closure of a generating list; the identity is given explicitly.
  Group closure(const std::vector<G>& gens, const G& one) const {
    std::set<G> seen{one};
    std::vector<G> frontier{one};
    while (!frontier.empty()) {
      std::vector<G> next;
      for (const auto& x : frontier)
        for (const auto& s : gens) {
          G y = ctx_.mul(x, s);
          if (seen.insert(y).second) next.push_back(y);
        }
      frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
  }

  /// w^-1 H w, the group fixing b^w whenever H fixes b.
  Group conjugate(const Group& h, const G& w) const {
    std::set<G> out;
    G wi = ctx_.inv(w);
    for (const auto& g : h) out.insert(ctx_.mul(ctx_.mul(wi, g), w));
    return {out.begin(), out.end()};
  }

  static Group intersect(const Group& a, const Group& b) {
    Group out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

  /// Representatives of the right cosets H1 g in H2.
  std::vector<G> right_cosets(const Group& h1, const Group& h2) const {
    std::set<G> covered;
    std::vector<G> reps;
    for (const auto& g : h2) {
      if (covered.count(g)) continue;
      reps.push_back(g);
      for (const auto& h : h1) covered.insert(ctx_.mul(h, g));
    }
    return reps;
  }

  /// Representatives of the double cosets L w R in W, least element first.
  std::vector<G> double_cosets(const Group& left, const Group& whole, const Group& right) const {
    std::set<G> covered;
    std::vector<G> reps;
    for (const auto& g : whole) {
      if (covered.count(g)) continue;
      reps.push_back(g);
      for (const auto& x : left)
        for (const auto& y : right) covered.insert(ctx_.mul(ctx_.mul(x, g), y));
    }
    return reps;
  }

  /// T_{H1,H2}(a) = sum over H1\H2 of a^g.
  Op transfer(const Op& a, const Group& h1, const Group& h2) const {
    if (!is_subgroup(h1, h2)) throw TransferError("H1 is not contained in H2");
    if (!invariant(a, h1)) throw TransferError("operator is not H1-invariant");
    Op out;
    for (const auto& g : right_cosets(h1, h2)) out = add(out, act(a, g));
    return out;
  }

  /// sum over w in H2\H3/H1 of T_{H1 n H2^w, H3}(a b^w).
  Op mackey_sum(const Op& a, const Group& h1, const Op& b, const Group& h2, const Group& h3) const {
    if (!is_subgroup(h1, h3) || !is_subgroup(h2, h3)) throw TransferError("subgroups are not contained in H3");
    Op out;
    for (const auto& w : double_cosets(h2, h3, h1)) {
      Group k = intersect(h1, conjugate(h2, w));
      out = add(out, transfer(multiply(a, act(b, w)), k, h3));
    }
    return out;
  }

  /// sum over w in H1\H3/H2 of T_{H1^w n H2, H2}(a^w).
  Op compare_sum(const Op& a, const Group& h1, const Group& h2, const Group& h3) const {
    Op out;
    for (const auto& w : double_cosets(h1, h3, h2)) {
      Group k = intersect(conjugate(h1, w), h2);
      out = add(out, transfer(act(a, w), k, h2));
    }
    return out;
  }

  /// sum over g in H of a^g; always H-invariant.
  Op average(const Op& a, const Group& h) const {
    Op out;
    for (const auto& g : h) out = add(out, act(a, g));
    return out;
  }

 private:
  Ctx ctx_;
};

/// A finite instance: the acting group, its points and its subgroups.
template <class Ctx>
struct FiniteInstance {
  std::string name;
  Transfers<Ctx> transfers;
  std::vector<typename Ctx::Point> points;
  std::vector<typename Transfers<Ctx>::Group> subgroups;
};

FiniteInstance<PointAction> symmetric_on_points(int m);
FiniteInstance<PlaceAction> symmetric_on_tuples(int m, std::int64_t values);

struct TransferSuiteResult {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::size_t nonzero = 0;  // checks whose two sides were nonzero
  std::string detail;
  bool ok() const { return failures == 0; }
};

/// Exhaustive transitivity, move, compare and Mackey checks over every
/// admissible subgroup chain of an instance, with `samples` random
/// invariant operators per chain.
TransferSuiteResult finite_transfer_suite(const FiniteInstance<PointAction>& inst, int samples, unsigned seed);
TransferSuiteResult finite_transfer_suite(const FiniteInstance<PlaceAction>& inst, int samples, unsigned seed);

/// Transfers into the whole extended affine Weyl group, known row by row.
using TupleOp = std::map<std::pair<Tuple, Tuple>, Rational>;
using Row = std::map<Tuple, Rational>;

/// All g with i.g = p.
std::vector<AffineWeylElement> moving_elements(const Tuple& i, const Tuple& p, std::int64_t n);
/// Row p of T_{H,G}(a) for G the full group.
Row affine_transfer_row(const TupleOp& a, const std::vector<AffineWeylElement>& h, const Tuple& p, std::int64_t n);
/// Row p of T_{H1,G}(a) T_{H2,G}(b).
Row affine_product_row(const TupleOp& a, const std::vector<AffineWeylElement>& h1, const TupleOp& b,
                       const std::vector<AffineWeylElement>& h2, const Tuple& p, std::int64_t n);
/// Row p of the Mackey sum; only finitely many double cosets contribute.
Row affine_mackey_row(const TupleOp& a, const std::vector<AffineWeylElement>& h1, const TupleOp& b,
                      const std::vector<AffineWeylElement>& h2, const Tuple& p, std::int64_t n,
                      std::size_t* cosets = nullptr);

/// Mackey and transitivity on the rows of `window`, for finite subgroups of
/// the extended affine Weyl group of rank 2.
TransferSuiteResult affine_transfer_suite(std::int64_t n, const std::vector<Tuple>& window, int samples, unsigned seed);

}  // namespace affschur
