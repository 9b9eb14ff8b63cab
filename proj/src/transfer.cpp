#include "transfer.hpp"

#include <random>
#include <sstream>

namespace affschur {

namespace {

template <class Ctx>
std::vector<typename Transfers<Ctx>::Group> all_subgroups(const Transfers<Ctx>& t,
                                                          const std::vector<typename Ctx::Element>& group,
                                                          const typename Ctx::Element& one) {
  std::set<typename Transfers<Ctx>::Group> out;
  for (std::size_t a = 0; a < group.size(); ++a)
    for (std::size_t b = a; b < group.size(); ++b) out.insert(t.closure({group[a], group[b]}, one));
  return {out.begin(), out.end()};
}

template <class Ctx>
typename Transfers<Ctx>::Op random_operator(std::mt19937& rng, const std::vector<typename Ctx::Point>& points,
                                            int terms) {
  std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
  typename Transfers<Ctx>::Op out;
  for (int k = 0; k < terms; ++k)
    Transfers<Ctx>::add_to(out, {points[pick(rng)], points[pick(rng)]}, make_rational(num(rng), den(rng)));
  return out;
}

template <class Ctx>
TransferSuiteResult run_finite_suite(const FiniteInstance<Ctx>& inst, int samples, unsigned seed) {
  const auto& t = inst.transfers;
  using Op = typename Transfers<Ctx>::Op;
  std::mt19937 rng(seed);
  TransferSuiteResult res;
  auto record = [&](bool ok, const std::string& what) {
    ++res.checks;
    if (!ok) {
      ++res.failures;
      if (res.detail.empty()) res.detail = inst.name + ": " + what;
    }
  };
  const auto& subs = inst.subgroups;
  auto invariant_sample = [&](const auto& h) { return t.average(random_operator<Ctx>(rng, inst.points, 3), h); };
  for (std::size_t x = 0; x < subs.size(); ++x)
    for (std::size_t y = 0; y < subs.size(); ++y) {
      const auto& h1 = subs[x];
      const auto& h2 = subs[y];
      for (int s = 0; s < samples; ++s) {
        Op a = invariant_sample(h1);
        if (t.is_subgroup(h1, h2)) {
          Op b = invariant_sample(h2);
          record(t.transfer(t.multiply(a, b), h1, h2) == t.multiply(t.transfer(a, h1, h2), b), "move (right)");
          record(t.transfer(t.multiply(b, a), h1, h2) == t.multiply(b, t.transfer(a, h1, h2)), "move (left)");
        }
        for (const auto& h3 : subs) {
          if (!t.is_subgroup(h1, h3) || !t.is_subgroup(h2, h3)) continue;
          Op b = invariant_sample(h2);
          Op lhs = t.multiply(t.transfer(a, h1, h3), t.transfer(b, h2, h3));
          if (!lhs.empty()) ++res.nonzero;
          record(lhs == t.mackey_sum(a, h1, b, h2, h3), "mackey");
          record(t.transfer(a, h1, h3) == t.compare_sum(a, h1, h2, h3), "compare");
          if (t.is_subgroup(h1, h2))
            record(t.transfer(t.transfer(a, h1, h2), h2, h3) == t.transfer(a, h1, h3), "transitivity");
        }
      }
    }
  return res;
}

}  // namespace

FiniteInstance<PointAction> symmetric_on_points(int m) {
  FiniteInstance<PointAction> inst{"S" + std::to_string(m) + " on points", Transfers<PointAction>{}, {}, {}};
  for (int i = 0; i < m; ++i) inst.points.push_back(i);
  auto group = all_permutations(m);
  inst.subgroups = all_subgroups(inst.transfers, group, identity_perm(m));
  return inst;
}

FiniteInstance<PlaceAction> symmetric_on_tuples(int m, std::int64_t values) {
  FiniteInstance<PlaceAction> inst{"S" + std::to_string(m) + " on tuples", Transfers<PlaceAction>{}, {}, {}};
  for (const auto& t : all_tuples(values, m)) inst.points.push_back(t);
  auto group = all_permutations(m);
  inst.subgroups = all_subgroups(inst.transfers, group, identity_perm(m));
  return inst;
}

TransferSuiteResult finite_transfer_suite(const FiniteInstance<PointAction>& inst, int samples, unsigned seed) {
  return run_finite_suite(inst, samples, seed);
}

TransferSuiteResult finite_transfer_suite(const FiniteInstance<PlaceAction>& inst, int samples, unsigned seed) {
  return run_finite_suite(inst, samples, seed);
}

std::vector<AffineWeylElement> moving_elements(const Tuple& i, const Tuple& p, std::int64_t n) {
  if (i.size() != p.size()) throw ContextError("tuple lengths differ");
  std::vector<AffineWeylElement> out;
  int r = static_cast<int>(i.size());
  for (const auto& sigma : all_permutations(r)) {
    Tuple eps(r);
    bool ok = true;
    for (int k = 0; k < r && ok; ++k) {
      std::int64_t d = p[k] - i[sigma[k]];
      ok = d % n == 0;
      eps[k] = d / n;
    }
    if (ok) out.push_back({sigma, eps});
  }
  return out;
}

Row affine_transfer_row(const TupleOp& a, const std::vector<AffineWeylElement>& h, const Tuple& p, std::int64_t n) {
  Transfers<AffineAction> t(AffineAction{n});
  if (!t.invariant(a, h)) throw TransferError("operator is not H-invariant");
  Rational weight = Rational(1) / static_cast<long>(h.size());
  Row out;
  for (const auto& [key, c] : a)
    for (const auto& g : moving_elements(key.first, p, n)) {
      Rational& slot = out[weyl_apply(g, key.second, n)];
      slot += weight * c;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Row affine_product_row(const TupleOp& a, const std::vector<AffineWeylElement>& h1, const TupleOp& b,
                       const std::vector<AffineWeylElement>& h2, const Tuple& p, std::int64_t n) {
  Row out;
  for (const auto& [m, c] : affine_transfer_row(a, h1, p, n))
    for (const auto& [q, d] : affine_transfer_row(b, h2, m, n)) out[q] += c * d;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Row affine_mackey_row(const TupleOp& a, const std::vector<AffineWeylElement>& h1, const TupleOp& b,
                      const std::vector<AffineWeylElement>& h2, const Tuple& p, std::int64_t n,
                      std::size_t* cosets) {
  Transfers<AffineAction> t(AffineAction{n});
  // only w sending a row of b onto a column of a can give a nonzero a b^w
  std::set<AffineWeylElement> candidates;
  for (const auto& [kb, cb] : b)
    for (const auto& [ka, ca] : a)
      for (const auto& w : moving_elements(kb.first, ka.second, n)) candidates.insert(w);
  std::set<AffineWeylElement> covered;
  Row out;
  std::size_t count = 0;
  for (const auto& w : candidates) {
    if (covered.count(w)) continue;
    ++count;
    for (const auto& x : h2)
      for (const auto& y : h1) covered.insert(weyl_compose(weyl_compose(x, w), y));
    auto k = Transfers<AffineAction>::intersect(h1, t.conjugate(h2, w));
    for (const auto& [q, c] : affine_transfer_row(t.multiply(a, t.act(b, w)), k, p, n)) out[q] += c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  if (cosets) *cosets = count;
  return out;
}

TransferSuiteResult affine_transfer_suite(std::int64_t n, const std::vector<Tuple>& window, int samples,
                                          unsigned seed) {
  Transfers<AffineAction> t(AffineAction{n});
  const Perm swap{1, 0};
  auto one = AffineWeylElement::identity(2);
  std::vector<Transfers<AffineAction>::Group> subs{
      {one},
      t.closure({{swap, {0, 0}}}, one),
      t.closure({{swap, {-1, 1}}}, one),
      t.closure({{swap, {1, -1}}}, one),
      t.conjugate(t.closure({{swap, {0, 0}}}, one), {identity_perm(2), {1, 0}}),
  };
  std::vector<Tuple> points;
  for (std::int64_t x = -1; x <= 2; ++x)
    for (std::int64_t y = -1; y <= 2; ++y) points.push_back({x, y});
  std::mt19937 rng(seed);
  TransferSuiteResult res;
  auto record = [&](bool ok, const std::string& what) {
    ++res.checks;
    if (!ok) {
      ++res.failures;
      if (res.detail.empty()) res.detail = "affine: " + what;
    }
  };
  for (std::size_t x = 0; x < subs.size(); ++x)
    for (std::size_t y = 0; y < subs.size(); ++y)
      for (int s = 0; s < samples; ++s) {
        TupleOp a = t.average(random_operator<AffineAction>(rng, points, 3), subs[x]);
        TupleOp b = t.average(random_operator<AffineAction>(rng, points, 3), subs[y]);
        for (const auto& p : window) {
          std::ostringstream where;
          where << "mackey at row (" << p[0] << "," << p[1] << ")";
          Row lhs = affine_product_row(a, subs[x], b, subs[y], p, n);
          if (!lhs.empty()) ++res.nonzero;
          record(lhs == affine_mackey_row(a, subs[x], b, subs[y], p, n), where.str());
        }
        if (t.is_subgroup(subs[x], subs[y])) {
          TupleOp up = t.transfer(a, subs[x], subs[y]);
          for (const auto& p : window)
            record(affine_transfer_row(up, subs[y], p, n) == affine_transfer_row(a, subs[x], p, n), "transitivity");
        }
      }
  return res;
}

}  // namespace affschur
