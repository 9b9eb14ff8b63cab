#pragma once

#include <memory>
#include <set>
#include <stdexcept>
#include <vector>

#include "schur.hpp"
#include "semigroup.hpp"

namespace affschur {

/// E_{s,t} in gl_n[t, t^-1]; s is taken modulo n.
struct LoopGenerator {
  std::int64_t s = 1;
  std::int64_t t = 1;
};

Element pi_tilde(const LoopGenerator& g, std::int64_t n, int r);
/// Linear extension to a periodic matrix.
Element pi_tilde(const PeriodicMatrix& g, int r);

PeriodicMatrix bracket(const PeriodicMatrix& x, const PeriodicMatrix& y);
/// pi~([g1,g2]) == [pi~ g1, pi~ g2] in S(n,r)~.
bool lie_bracket_check(const LoopGenerator& g1, const LoopGenerator& g2, std::int64_t n, int r);

enum class GeneratorKind { X1, X2, X, Y };

/// xi_{i.s, i.t} over i in I(n,r-1)/Sigma_{r-1} and s in 1..n; X1 takes
/// t = s+1, X2 takes t = s-1 and Y every t with |t - s| <= window.
std::vector<BasisIndex> generator_set(GeneratorKind kind, std::int64_t n, int r, std::int64_t window = 0);
bool in_generator_set(GeneratorKind kind, const BasisIndex& x, std::int64_t n);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Polynomial expression over basis generators. Nodes are shared, so the
/// structure is a DAG.
struct Expr {
  enum class Op { Gen, One, Mul, Add, Scale };
  Op op = Op::One;
  BasisIndex gen;
  Rational scalar = 1;
  std::vector<ExprPtr> args;
};

ExprPtr expr_gen(const BasisIndex& x);
ExprPtr expr_one();
ExprPtr expr_mul(ExprPtr x, ExprPtr y);
ExprPtr expr_add(std::vector<ExprPtr> terms);
ExprPtr expr_sub(ExprPtr x, ExprPtr y);
ExprPtr expr_scale(const Rational& c, ExprPtr x);

Element evaluate_expr(const ExprPtr& e, std::int64_t n, int r);
ExprPtr map_generators(const ExprPtr& e, const std::function<BasisIndex(const BasisIndex&)>& f);
std::set<BasisIndex> expr_generators(const ExprPtr& e);
std::size_t expr_node_count(const ExprPtr& e);

class DecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes xi_x as an expression in Y by induction on the number of
/// off-diagonal positions. The result is checked by re-multiplication.
ExprPtr decompose_y(const BasisIndex& x, std::int64_t n);
/// The same over X = X1 u X2 together with the identity; requires r < n.
ExprPtr decompose_x(const BasisIndex& x, std::int64_t n);

}  // namespace affschur
