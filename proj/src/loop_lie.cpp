#include "loop_lie.hpp"

#include <algorithm>
#include <unordered_map>

namespace affschur {

namespace {

Tuple append(Tuple t, std::int64_t v) {
  t.push_back(v);
  return t;
}

}  // namespace

Element pi_tilde(const LoopGenerator& g, std::int64_t n, int r) {
  if (r < 1) throw std::invalid_argument("degree must be at least 1");
  std::int64_t s = bar(g.s, n), t = g.t + s - g.s;
  Element out(n, r);
  if (s != t) {
    for (const auto& i : sorted_tuples(n, r - 1)) out.add(canonicalize(append(i, s), append(i, t), n), Laurent(1L));
    return out;
  }
  for (const auto& i : sorted_tuples(n, r)) {
    long count = std::count(i.begin(), i.end(), s);
    if (count > 0) out.add(canonicalize(i, i, n), Laurent(count));
  }
  return out;
}

Element pi_tilde(const PeriodicMatrix& g, int r) {
  Element out(g.n(), r);
  for (const auto& [key, c] : g.entries()) out += c * pi_tilde(LoopGenerator{key.first, key.second}, g.n(), r);
  return out;
}

PeriodicMatrix bracket(const PeriodicMatrix& x, const PeriodicMatrix& y) { return x * y - y * x; }

bool lie_bracket_check(const LoopGenerator& g1, const LoopGenerator& g2, std::int64_t n, int r) {
  PeriodicMatrix x = PeriodicMatrix::unit(n, g1.s, g1.t), y = PeriodicMatrix::unit(n, g2.s, g2.t);
  Element px = pi_tilde(x, r), py = pi_tilde(y, r);
  return pi_tilde(bracket(x, y), r) == multiply(px, py) - multiply(py, px);
}

std::vector<BasisIndex> generator_set(GeneratorKind kind, std::int64_t n, int r, std::int64_t window) {
  if (r < 1) throw std::invalid_argument("degree must be at least 1");
  std::vector<std::int64_t> steps;
  switch (kind) {
    case GeneratorKind::X1: steps = {1}; break;
    case GeneratorKind::X2: steps = {-1}; break;
    case GeneratorKind::X: steps = {1, -1}; break;
    case GeneratorKind::Y:
      for (std::int64_t d = -window; d <= window; ++d) steps.push_back(d);
      break;
  }
  std::set<BasisIndex> out;
  for (const auto& i : sorted_tuples(n, r - 1))
    for (std::int64_t s = 1; s <= n; ++s)
      for (auto d : steps) out.insert(canonicalize(append(i, s), append(i, s + d), n));
  return {out.begin(), out.end()};
}

bool in_generator_set(GeneratorKind kind, const BasisIndex& x, std::int64_t n) {
  if (!is_canonical(x, n)) return false;
  std::int64_t step = 0;
  int moved = 0;
  for (const auto& [top, bottom] : x.pairs)
    if (top != bottom) {
      ++moved;
      step = bottom - top;
    }
  if (moved > 1) return false;
  switch (kind) {
    case GeneratorKind::X1: return moved == 1 && step == 1;
    case GeneratorKind::X2: return moved == 1 && step == -1;
    case GeneratorKind::X: return moved == 1 && (step == 1 || step == -1);
    case GeneratorKind::Y: return true;
  }
  return false;
}

ExprPtr expr_gen(const BasisIndex& x) {
  auto e = std::make_shared<Expr>();
  e->op = Expr::Op::Gen;
  e->gen = x;
  return e;
}

ExprPtr expr_one() {
  static const ExprPtr one = std::make_shared<Expr>();
  return one;
}

ExprPtr expr_mul(ExprPtr x, ExprPtr y) {
  auto e = std::make_shared<Expr>();
  e->op = Expr::Op::Mul;
  e->args = {std::move(x), std::move(y)};
  return e;
}

ExprPtr expr_add(std::vector<ExprPtr> terms) {
  if (terms.size() == 1) return terms.front();
  auto e = std::make_shared<Expr>();
  e->op = Expr::Op::Add;
  e->args = std::move(terms);
  return e;
}

ExprPtr expr_scale(const Rational& c, ExprPtr x) {
  if (c == 1) return x;
  auto e = std::make_shared<Expr>();
  e->op = Expr::Op::Scale;
  e->scalar = c;
  e->args = {std::move(x)};
  return e;
}

ExprPtr expr_sub(ExprPtr x, ExprPtr y) { return expr_add({std::move(x), expr_scale(-1, std::move(y))}); }

Element evaluate_expr(const ExprPtr& root, std::int64_t n, int r) {
  std::unordered_map<const Expr*, Element> memo;
  std::function<const Element&(const ExprPtr&)> eval = [&](const ExprPtr& e) -> const Element& {
    auto it = memo.find(e.get());
    if (it != memo.end()) return it->second;
    Element value(n, r);
    switch (e->op) {
      case Expr::Op::Gen:
        if (e->gen.r() != r) throw ContextError("generator degree does not match");
        value = Element::basis(n, e->gen);
        break;
      case Expr::Op::One: value = identity(n, r); break;
      case Expr::Op::Mul: {
        Element left = eval(e->args[0]);
        value = multiply(left, eval(e->args[1]));
        break;
      }
      case Expr::Op::Add:
        for (const auto& a : e->args) value += eval(a);
        break;
      case Expr::Op::Scale: value = Laurent(e->scalar) * eval(e->args[0]); break;
    }
    return memo.emplace(e.get(), std::move(value)).first->second;
  };
  return eval(root);
}

ExprPtr map_generators(const ExprPtr& root, const std::function<BasisIndex(const BasisIndex&)>& f) {
  std::unordered_map<const Expr*, ExprPtr> memo;
  std::function<ExprPtr(const ExprPtr&)> walk = [&](const ExprPtr& e) -> ExprPtr {
    auto it = memo.find(e.get());
    if (it != memo.end()) return it->second;
    ExprPtr out;
    if (e->op == Expr::Op::Gen) {
      out = expr_gen(f(e->gen));
    } else if (e->op == Expr::Op::One) {
      out = e;
    } else {
      auto copy = std::make_shared<Expr>(*e);
      for (auto& a : copy->args) a = walk(a);
      out = copy;
    }
    memo.emplace(e.get(), out);
    return out;
  };
  return walk(root);
}

namespace {

void visit(const ExprPtr& e, std::set<const Expr*>& seen, const std::function<void(const Expr&)>& f) {
  if (!seen.insert(e.get()).second) return;
  f(*e);
  for (const auto& a : e->args) visit(a, seen, f);
}

}  // namespace

std::set<BasisIndex> expr_generators(const ExprPtr& e) {
  std::set<BasisIndex> out;
  std::set<const Expr*> seen;
  visit(e, seen, [&](const Expr& node) {
    if (node.op == Expr::Op::Gen) out.insert(node.gen);
  });
  return out;
}

std::size_t expr_node_count(const ExprPtr& e) {
  std::set<const Expr*> seen;
  visit(e, seen, [](const Expr&) {});
  return seen.size();
}

namespace {

class YDecomposer {
 public:
  explicit YDecomposer(std::int64_t n) : n_(n) {}

  ExprPtr run(const BasisIndex& x) {
    auto it = memo_.find(x);
    if (it != memo_.end()) return it->second;
    ExprPtr out = x.off_diagonal() <= 1 ? expr_gen(x) : reduce(x);
    memo_.emplace(x, out);
    return out;
  }

 private:
  ExprPtr reduce(const BasisIndex& x) {
    Tuple i = x.tops(), j = x.bottoms();
    std::size_t m = 0;
    while (i[m] == j[m]) ++m;
    Tuple mid = j;
    mid[m] = i[m];
    BasisIndex left = canonicalize(i, mid, n_), right = canonicalize(mid, j, n_);
    Element prod = multiply(Element::basis(n_, left), Element::basis(n_, right));
    Laurent lead = prod.coeff(x);
    if (lead.is_zero() || !lead.is_constant())
      throw DecompositionError("leading coefficient vanishes for " + index_to_string(x));
    std::vector<ExprPtr> lower;
    for (const auto& [k, c] : prod.terms()) {
      if (k == x) continue;
      if (k.off_diagonal() >= x.off_diagonal())
        throw DecompositionError("correction term " + index_to_string(k) + " is not of lower index");
      lower.push_back(expr_scale(c.coeff(0), run(k)));
    }
    ExprPtr product = expr_mul(run(left), expr_gen(right));
    ExprPtr body = lower.empty() ? product : expr_sub(product, expr_add(lower));
    return expr_scale(1 / lead.coeff(0), body);
  }

  std::int64_t n_;
  std::map<BasisIndex, ExprPtr> memo_;
};

class XDecomposer {
 public:
  XDecomposer(std::int64_t n, int r) : n_(n), r_(r) {
    if (r >= n) throw std::invalid_argument("X generates only when r < n");
    for (std::int64_t s = 1; s < n; ++s) {
      raise_.push_back(sum_over(s, s + 1));
      lower_.push_back(sum_over(s + 1, s));
    }
    std::vector<ExprPtr> diffs;
    for (std::int64_t s = 1; s < n; ++s) {
      ExprPtr e = raise_[s - 1], f = lower_[s - 1];
      diffs.push_back(expr_sub(expr_mul(e, f), expr_mul(f, e)));
    }
    // sum of the H_s is r.1 and H_s - H_{s+1} = [e_s, f_s]
    std::vector<ExprPtr> terms{expr_scale(r, expr_one())};
    for (std::int64_t k = 1; k < n; ++k) terms.push_back(expr_scale(n - k, diffs[k - 1]));
    cartan_.push_back(expr_scale(Rational(1) / n, expr_add(terms)));
    for (std::int64_t s = 2; s <= n; ++s) cartan_.push_back(expr_sub(cartan_.back(), diffs[s - 2]));
  }

  ExprPtr run(const BasisIndex& y) {
    auto it = memo_.find(y);
    if (it != memo_.end()) return it->second;
    ExprPtr out = y.off_diagonal() <= 1 ? leaf(y) : substitute(y);
    memo_.emplace(y, out);
    return out;
  }

 private:
  ExprPtr sum_over(std::int64_t s, std::int64_t t) {
    std::vector<ExprPtr> terms;
    for (const auto& i : sorted_tuples(n_, r_ - 1)) terms.push_back(expr_gen(canonicalize(append(i, s), append(i, t), n_)));
    return expr_add(terms);
  }

  ExprPtr idempotent(const Tuple& weight) {
    auto it = idempotents_.find(weight);
    if (it != idempotents_.end()) return it->second;
    ExprPtr out = expr_one();
    for (std::int64_t s = 1; s <= n_; ++s)
      for (std::int64_t c = 0; c <= r_; ++c) {
        if (c == weight[s - 1]) continue;
        ExprPtr factor = expr_sub(cartan_[s - 1], expr_scale(c, expr_one()));
        out = expr_mul(out, expr_scale(Rational(1) / (weight[s - 1] - c), factor));
      }
    idempotents_.emplace(weight, out);
    return out;
  }

  ExprPtr finite_unit(std::int64_t s, std::int64_t t) {
    if (t == s + 1) return raise_[s - 1];
    if (t == s - 1) return lower_[t - 1];
    std::int64_t u = s + (t > s ? 1 : -1);
    ExprPtr a = finite_unit(s, u), b = finite_unit(u, t);
    return expr_sub(expr_mul(a, b), expr_mul(b, a));
  }

  Tuple weight(const Tuple& t) const {
    Tuple w(n_, 0);
    for (auto v : t) ++w[bar(v, n_) - 1];
    return w;
  }

  // y = xi_{k.s, k.t} with s, t in 1..n
  ExprPtr finite_leaf(const BasisIndex& y) {
    Tuple tops = y.tops(), bottoms = y.bottoms();
    ExprPtr left = idempotent(weight(tops));
    if (y.off_diagonal() == 0) return left;
    std::size_t m = 0;
    while (tops[m] == bottoms[m]) ++m;
    return expr_mul(expr_mul(left, finite_unit(tops[m], bottoms[m])), idempotent(weight(bottoms)));
  }

  ExprPtr leaf(const BasisIndex& y) {
    if (y.off_diagonal() == 0) return finite_leaf(y);
    std::size_t m = 0;
    while (y.pairs[m].first == y.pairs[m].second) ++m;
    auto [s, t] = y.pairs[m];
    if (std::abs(t - s) < n_) {
      // rotate so the moved pair sits inside 1..n
      std::int64_t c = std::min(s, t) - 1;
      auto rho = WeylSymmetry::rho(n_);
      BasisIndex y0 = weyl_act(rho.pow(c), y, n_);
      ExprPtr e0 = finite_leaf(y0);
      if (c == 0) return e0;
      auto back = rho.pow(-c);
      return map_generators(e0, [&](const BasisIndex& g) { return weyl_act(back, g, n_); });
    }
    Tuple rest;
    for (std::size_t k = 0; k < y.pairs.size(); ++k)
      if (k != m) rest.push_back(y.pairs[k].first);
    Element target = Element::basis(n_, y);
    std::int64_t dir = t > s ? 1 : -1;
    for (std::int64_t step = 1; step < n_; ++step) {
      std::int64_t mid = s + dir * step;
      BasisIndex a = canonicalize(append(rest, s), append(rest, mid), n_);
      BasisIndex b = canonicalize(append(rest, mid), append(rest, t), n_);
      if (multiply(Element::basis(n_, a), Element::basis(n_, b)) == target) return expr_mul(leaf(a), leaf(b));
    }
    throw DecompositionError("no middle insertion for " + index_to_string(y));
  }

  ExprPtr substitute(const BasisIndex& y) {
    ExprPtr over_y = YDecomposer(n_).run(y);
    std::unordered_map<const Expr*, ExprPtr> memo;
    std::function<ExprPtr(const ExprPtr&)> walk = [&](const ExprPtr& e) -> ExprPtr {
      auto it = memo.find(e.get());
      if (it != memo.end()) return it->second;
      ExprPtr out;
      if (e->op == Expr::Op::Gen) {
        out = run(e->gen);
      } else if (e->op == Expr::Op::One) {
        out = e;
      } else {
        auto copy = std::make_shared<Expr>(*e);
        for (auto& a : copy->args) a = walk(a);
        out = copy;
      }
      memo.emplace(e.get(), out);
      return out;
    };
    return walk(over_y);
  }

  std::int64_t n_;
  int r_;
  std::vector<ExprPtr> raise_, lower_, cartan_;
  std::map<Tuple, ExprPtr> idempotents_;
  std::map<BasisIndex, ExprPtr> memo_;
};

void verify(const ExprPtr& e, const BasisIndex& x, std::int64_t n) {
  if (evaluate_expr(e, n, x.r()) != Element::basis(n, x))
    throw DecompositionError("re-multiplication does not reproduce " + index_to_string(x));
}

}  // namespace

ExprPtr decompose_y(const BasisIndex& x, std::int64_t n) {
  if (!is_canonical(x, n)) throw std::invalid_argument("index is not canonical");
  ExprPtr e = YDecomposer(n).run(x);
  verify(e, x, n);
  return e;
}

ExprPtr decompose_x(const BasisIndex& x, std::int64_t n) {
  if (!is_canonical(x, n)) throw std::invalid_argument("index is not canonical");
  ExprPtr e = XDecomposer(n, x.r()).run(x);
  verify(e, x, n);
  return e;
}

}  // namespace affschur
