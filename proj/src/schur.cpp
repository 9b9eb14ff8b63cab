#include "schur.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace affschur {

Tuple BasisIndex::tops() const {
  Tuple out;
  for (const auto& p : pairs) out.push_back(p.first);
  return out;
}

Tuple BasisIndex::bottoms() const {
  Tuple out;
  for (const auto& p : pairs) out.push_back(p.second);
  return out;
}

int BasisIndex::off_diagonal() const {
  int count = 0;
  for (const auto& p : pairs) count += p.first != p.second;
  return count;
}

BasisIndex canonicalize(const std::vector<Pair>& pairs, std::int64_t n) {
  BasisIndex out;
  out.pairs.reserve(pairs.size());
  for (const auto& [top, bottom] : pairs) {
    std::int64_t t = bar(top, n);
    out.pairs.emplace_back(t, bottom + t - top);
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

BasisIndex canonicalize(const Tuple& i, const Tuple& j, std::int64_t n) {
  if (i.size() != j.size()) throw ContextError("tuples of different length");
  std::vector<Pair> pairs;
  for (std::size_t k = 0; k < i.size(); ++k) pairs.emplace_back(i[k], j[k]);
  return canonicalize(pairs, n);
}

bool is_canonical(const BasisIndex& x, std::int64_t n) {
  for (const auto& p : x.pairs)
    if (p.first < 1 || p.first > n) return false;
  return std::is_sorted(x.pairs.begin(), x.pairs.end());
}

Split split(const BasisIndex& x, std::int64_t n) {
  Split s;
  for (const auto& [top, bottom] : x.pairs) {
    s.i.push_back(top);
    std::int64_t j = bar(bottom, n);
    s.j.push_back(j);
    s.eps.push_back((bottom - j) / n);
  }
  return s;
}

std::int64_t height(const Tuple& eps) {
  std::int64_t h = 0;
  for (auto e : eps) h += e;
  return h;
}

Tuple residue_signature(const Tuple& t, std::int64_t n) {
  Tuple out;
  for (auto v : t) out.push_back(bar(v, n));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<AffineWeylElement> equivalent_middle(const Tuple& j, const Tuple& k, std::int64_t n) {
  if (j.size() != k.size()) return std::nullopt;
  int r = static_cast<int>(j.size());
  AffineWeylElement w{Perm(r), Tuple(r)};
  std::vector<bool> used(r, false);
  for (int m = 0; m < r; ++m) {
    int found = -1;
    for (int p = 0; p < r && found < 0; ++p)
      if (!used[p] && bar(j[p], n) == bar(k[m], n)) found = p;
    if (found < 0) return std::nullopt;
    used[found] = true;
    w.sigma[m] = found;
    w.eps[m] = (k[m] - j[found]) / n;
  }
  return w;
}

Element Element::basis(std::int64_t n, const BasisIndex& x, const Laurent& c) {
  Element out(n, x.r());
  out.add(x, c);
  return out;
}

Laurent Element::coeff(const BasisIndex& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? Laurent() : it->second;
}

bool Element::is_finite() const {
  for (const auto& [x, c] : terms_)
    for (const auto& p : x.pairs)
      if (p.second < 1 || p.second > n_) return false;
  return true;
}

void Element::add(const BasisIndex& x, const Laurent& c) {
  if (c.is_zero()) return;
  if (x.r() != r_) throw ContextError("basis index of degree " + std::to_string(x.r()) +
                                      " in an element of degree " + std::to_string(r_));
  auto [it, inserted] = terms_.emplace(x, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void check_same_context(const Element& x, const Element& y) {
  if (x.n() != y.n() || x.r() != y.r())
    throw ContextError("context mismatch: (" + std::to_string(x.n()) + "," + std::to_string(x.r()) +
                       ") vs (" + std::to_string(y.n()) + "," + std::to_string(y.r()) + ")");
}

Element& Element::operator+=(const Element& other) {
  check_same_context(*this, other);
  for (const auto& [x, c] : other.terms_) add(x, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  check_same_context(*this, other);
  for (const auto& [x, c] : other.terms_) add(x, -c);
  return *this;
}

Element operator*(const Laurent& c, const Element& x) {
  Element out(x.n_, x.r_);
  if (c.is_zero()) return out;
  for (const auto& [idx, v] : x.terms_) out.add(idx, c * v);
  return out;
}

Element Element::operator-() const { return Laurent(-1L) * *this; }

bool operator==(const Element& x, const Element& y) {
  return x.n_ == y.n_ && x.r_ == y.r_ && x.terms_ == y.terms_;
}

Element Element::map_coefficients(const std::function<Laurent(const Laurent&)>& f) const {
  Element out(n_, r_);
  for (const auto& [x, c] : terms_) out.add(x, f(c));
  return out;
}

Structure green_product(std::int64_t n, const BasisIndex& x, const BasisIndex& y) {
  Structure out;
  if (x.r() != y.r()) throw ContextError("basis indices of different degree");
  Split left = split(x, n);
  Split right = split(y, n);
  // align the middle: find sigma with k o sigma = j
  auto w = equivalent_middle(right.i, left.j, n);
  if (!w) return out;
  Tuple l = permute(right.j, w->sigma);
  Tuple e2 = permute(right.eps, w->sigma);
  const Tuple& i = left.i;
  const Tuple& j = left.j;
  const Tuple& e = left.eps;
  Partition pi = partition_by_values(i), pj = partition_by_values(j), pe = partition_by_values(e);
  Partition h1 = meet({pi, pj, pe});
  Partition h2 = meet({pj, partition_by_values(l), partition_by_values(e2)});
  int r = x.r();
  for (const auto& d : double_cosets(h2, pj, h1)) {
    Tuple ld = permute(l, d);
    Tuple e2d = permute(e2, d);
    Tuple total(r), bottom(r);
    for (int k = 0; k < r; ++k) {
      total[k] = e2d[k] + e[k];
      bottom[k] = ld[k] + n * total[k];
    }
    Partition pld = partition_by_values(ld);
    std::uint64_t num = young_order(meet({pi, pld, partition_by_values(total)}));
    std::uint64_t den = young_order(meet({pi, pj, pld, partition_by_values(e2d), pe}));
    if (num % den != 0) throw std::logic_error("non-integral subgroup index");
    out[canonicalize(i, bottom, n)] += static_cast<std::int64_t>(num / den);
  }
  return out;
}

Element multiply_using(const Element& x, const Element& y, const BasisProduct& rule) {
  check_same_context(x, y);
  Element out(x.n(), x.r());
  // group the right factor by top signature so non-composable pairs are skipped
  std::map<Tuple, std::vector<const Element::Terms::value_type*>> by_top;
  for (const auto& term : y.terms()) by_top[residue_signature(term.first.tops(), y.n())].push_back(&term);
  for (const auto& [xi, cx] : x.terms()) {
    auto it = by_top.find(residue_signature(xi.bottoms(), x.n()));
    if (it == by_top.end()) continue;
    for (const auto* term : it->second) {
      Laurent c = cx * term->second;
      for (const auto& [idx, k] : rule(x.n(), xi, term->first)) out.add(idx, Laurent(k) * c);
    }
  }
  return out;
}

Element multiply(const Element& x, const Element& y) { return multiply_using(x, y, green_product); }

Element identity(std::int64_t n, int r) {
  Element out(n, r);
  for (const auto& t : sorted_tuples(n, r)) out.add(canonicalize(t, t, n), Laurent(1L));
  return out;
}

WeylSymmetry::WeylSymmetry(Tuple window) : window_(std::move(window)) {
  std::int64_t n = this->n();
  if (n < 1) throw std::invalid_argument("empty window");
  std::vector<bool> seen(n + 1, false);
  for (auto v : window_) {
    auto b = bar(v, n);
    if (seen[b]) throw std::invalid_argument("window residues are not a permutation of 1..n");
    seen[b] = true;
  }
}

WeylSymmetry WeylSymmetry::identity(std::int64_t n) {
  Tuple w(n);
  for (std::int64_t k = 0; k < n; ++k) w[k] = k + 1;
  return WeylSymmetry(w);
}

WeylSymmetry WeylSymmetry::rho(std::int64_t n) {
  Tuple w(n);
  for (std::int64_t k = 0; k < n; ++k) w[k] = k;
  return WeylSymmetry(w);
}

WeylSymmetry WeylSymmetry::reflection(int i, std::int64_t n) {
  if (i < 1 || i > n) throw std::invalid_argument("reflection index out of range");
  if (n == 1) throw std::invalid_argument("no reflections for n = 1");
  Tuple w(n);
  for (std::int64_t k = 0; k < n; ++k) w[k] = k + 1;
  if (i < n) {
    std::swap(w[i - 1], w[i]);
  } else {
    w[0] = 0;
    w[n - 1] = n + 1;
  }
  return WeylSymmetry(w);
}

std::int64_t WeylSymmetry::operator()(std::int64_t z) const {
  std::int64_t b = bar(z, n());
  return window_[b - 1] + z - b;
}

std::int64_t WeylSymmetry::inverse_apply(std::int64_t y) const {
  std::int64_t n = this->n();
  for (std::int64_t k = 1; k <= n; ++k)
    if (bar(window_[k - 1], n) == bar(y, n)) return k + (y - window_[k - 1]);
  throw std::logic_error("invalid window");
}

WeylSymmetry WeylSymmetry::inverse() const {
  Tuple w(n());
  for (std::int64_t k = 1; k <= n(); ++k) w[k - 1] = inverse_apply(k);
  return WeylSymmetry(w);
}

WeylSymmetry WeylSymmetry::pow(std::int64_t k) const {
  WeylSymmetry base = k >= 0 ? *this : inverse();
  WeylSymmetry out = identity(n());
  for (std::int64_t m = 0; m < (k >= 0 ? k : -k); ++m) out = base * out;
  return out;
}

WeylSymmetry operator*(const WeylSymmetry& w, const WeylSymmetry& v) {
  if (w.n() != v.n()) throw ContextError("symmetries of different rank");
  Tuple out(w.n());
  for (std::int64_t k = 1; k <= w.n(); ++k) out[k - 1] = w(v(k));
  return WeylSymmetry(out);
}

BasisIndex weyl_act(const WeylSymmetry& w, const BasisIndex& x, std::int64_t n) {
  if (w.n() != n) throw ContextError("symmetry rank does not match n");
  std::vector<Pair> pairs;
  for (const auto& [top, bottom] : x.pairs) pairs.emplace_back(w(top), w(bottom));
  return canonicalize(pairs, n);
}

Element weyl_act(const WeylSymmetry& w, const Element& x) {
  Element out(x.n(), x.r());
  for (const auto& [idx, c] : x.terms()) out.add(weyl_act(w, idx, x.n()), c);
  return out;
}

BasisIndex transpose(const BasisIndex& x, std::int64_t n) {
  std::vector<Pair> pairs;
  for (const auto& [top, bottom] : x.pairs) pairs.emplace_back(bottom, top);
  return canonicalize(pairs, n);
}

Element transpose(const Element& x) {
  Element out(x.n(), x.r());
  for (const auto& [idx, c] : x.terms()) out.add(transpose(idx, x.n()), c);
  return out;
}

std::vector<BasisIndex> basis_window(std::int64_t n, int r, std::int64_t d) {
  std::set<BasisIndex> found;
  Tuple offsets(r, -d);
  for (const auto& top : sorted_tuples(n, r)) {
    std::fill(offsets.begin(), offsets.end(), -d);
    while (true) {
      Tuple bottom(r);
      for (int k = 0; k < r; ++k) bottom[k] = top[k] + offsets[k];
      found.insert(canonicalize(top, bottom, n));
      int k = r - 1;
      while (k >= 0 && offsets[k] == d) offsets[k--] = -d;
      if (k < 0) break;
      ++offsets[k];
    }
  }
  return {found.begin(), found.end()};
}

std::int64_t max_offset(const BasisIndex& x) {
  std::int64_t m = 0;
  for (const auto& [top, bottom] : x.pairs) m = std::max(m, std::abs(bottom - top));
  return m;
}

std::string index_to_string(const BasisIndex& x) {
  std::ostringstream os;
  os << "xi[(";
  for (int k = 0; k < x.r(); ++k) os << (k ? "," : "") << x.pairs[k].first;
  os << ")|(";
  for (int k = 0; k < x.r(); ++k) os << (k ? "," : "") << x.pairs[k].second;
  os << ")]";
  return os.str();
}

namespace {

std::string coefficient_prefix(const Laurent& c, bool& negative) {
  negative = false;
  if (c.is_monomial()) {
    const auto& [e, q] = *c.terms().begin();
    negative = q < 0;
    Laurent mag = Laurent::monomial(abs(q), e);
    if (mag == Laurent(1L)) return "";
    return mag.to_string() + "*";
  }
  return "(" + c.to_string() + ")*";
}

}  // namespace

std::string element_to_string(const Element& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : x.terms()) {
    bool negative = false;
    std::string prefix = coefficient_prefix(c, negative);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    os << prefix << index_to_string(idx);
  }
  return os.str();
}

}  // namespace affschur
