#include "weyl.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <tuple>

namespace affschur {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t bar(std::int64_t z, std::int64_t n) { return z - n * floor_div(z - 1, n); }

Perm identity_perm(int r) {
  Perm p(r);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& p, const Perm& q) {
  Perm out(q.size());
  for (std::size_t k = 0; k < q.size(); ++k) out[k] = p[q[k]];
  return out;
}

Perm inverse(const Perm& p) {
  Perm out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) out[p[k]] = static_cast<int>(k);
  return out;
}

int perm_sign(const Perm& p) {
  int sign = 1;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (seen[k]) continue;
    std::size_t len = 0;
    for (std::size_t m = k; !seen[m]; m = p[m]) {
      seen[m] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

bool is_permutation(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::vector<Perm> all_permutations(int r) {
  std::vector<Perm> out;
  Perm p = identity_perm(r);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Tuple weyl_apply(const AffineWeylElement& w, const Tuple& t, std::int64_t n) {
  if (w.sigma.size() != t.size() || w.eps.size() != t.size())
    throw ContextError("tuple length does not match the group element");
  Tuple out(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) out[k] = t[w.sigma[k]] + n * w.eps[k];
  return out;
}

AffineWeylElement weyl_compose(const AffineWeylElement& w1, const AffineWeylElement& w2) {
  if (w1.sigma.size() != w2.sigma.size()) throw ContextError("group elements of different rank");
  AffineWeylElement out;
  out.sigma = compose(w1.sigma, w2.sigma);
  out.eps = permute(w1.eps, w2.sigma);
  for (std::size_t k = 0; k < out.eps.size(); ++k) out.eps[k] += w2.eps[k];
  return out;
}

AffineWeylElement weyl_inverse(const AffineWeylElement& w) {
  // (s,e)(s',e') = id  =>  s' = s^-1, e' = -(e o s^-1)
  AffineWeylElement out;
  out.sigma = inverse(w.sigma);
  out.eps = permute(w.eps, out.sigma);
  for (auto& e : out.eps) e = -e;
  return out;
}

std::vector<std::vector<int>> Partition::blocks() const {
  int count = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<std::vector<int>> out(count);
  for (int k = 0; k < size(); ++k) out[label[k]].push_back(k);
  return out;
}

bool Partition::contains(const Perm& p) const {
  for (int k = 0; k < size(); ++k)
    if (label[p[k]] != label[k]) return false;
  return true;
}

bool Partition::refines(const Partition& coarser) const {
  std::map<int, int> image;
  for (int k = 0; k < size(); ++k) {
    auto [it, inserted] = image.emplace(label[k], coarser.label[k]);
    if (!inserted && it->second != coarser.label[k]) return false;
  }
  return true;
}

namespace {

template <class Key>
Partition relabel(const std::vector<Key>& keys) {
  std::map<Key, int> ids;
  Partition out;
  out.label.reserve(keys.size());
  for (const auto& key : keys) {
    auto [it, inserted] = ids.emplace(key, static_cast<int>(ids.size()));
    out.label.push_back(it->second);
  }
  return out;
}

}  // namespace

Partition partition_from_blocks(const std::vector<std::vector<int>>& blocks, int r) {
  std::vector<int> owner(r, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw std::invalid_argument("empty block");
    for (int k : blocks[b]) {
      if (k < 0 || k >= r || owner[k] != -1) throw std::invalid_argument("blocks are not a set partition");
      owner[k] = static_cast<int>(b);
    }
  }
  for (int v : owner)
    if (v == -1) throw std::invalid_argument("blocks do not cover all positions");
  return relabel(owner);
}

Partition partition_by_values(const std::vector<std::int64_t>& values) { return relabel(values); }

Partition stabilizer(const Tuple& t, std::int64_t n) {
  for (auto v : t)
    if (v < 1 || v > n) throw std::invalid_argument("stabilizer needs entries in 1..n");
  return partition_by_values(t);
}

Partition meet(const Partition& x, const Partition& y) {
  if (x.size() != y.size()) throw ContextError("partitions of different size");
  std::vector<std::pair<int, int>> keys;
  for (int k = 0; k < x.size(); ++k) keys.emplace_back(x.label[k], y.label[k]);
  return relabel(keys);
}

Partition meet(const std::vector<Partition>& parts) {
  if (parts.empty()) throw std::invalid_argument("meet of an empty list");
  Partition out = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) out = meet(out, parts[k]);
  return out;
}

std::uint64_t young_order(const Partition& s) {
  std::uint64_t total = 1;
  for (const auto& block : s.blocks())
    for (std::uint64_t m = 2; m <= block.size(); ++m) total *= m;
  return total;
}

std::vector<Perm> subgroup_elements(const Partition& s) {
  std::vector<Perm> out;
  for (auto& p : all_permutations(s.size()))
    if (s.contains(p)) out.push_back(std::move(p));
  return out;
}

namespace {

struct CosetCache {
  std::shared_mutex mutex;
  std::map<std::tuple<Partition, Partition, Partition>, std::vector<Perm>> table;
};

CosetCache& coset_cache() {
  static CosetCache cache;
  return cache;
}

}  // namespace

const std::vector<Perm>& double_cosets(const Partition& h2, const Partition& g, const Partition& h1) {
  if (h1.size() != g.size() || h2.size() != g.size()) throw ContextError("partitions of different size");
  if (g.size() > 8) throw std::invalid_argument("double coset enumeration is capped at r <= 8");
  if (!h1.refines(g) || !h2.refines(g)) throw std::invalid_argument("subgroups are not contained in g");
  auto key = std::make_tuple(h2, g, h1);
  auto& cache = coset_cache();
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.table.find(key);
    if (it != cache.table.end()) return it->second;
  }
  std::vector<Perm> left = subgroup_elements(h2), right = subgroup_elements(h1);
  std::vector<Perm> reps;
  std::set<Perm> seen;
  for (const auto& d : subgroup_elements(g)) {  // lexicographic order
    if (seen.count(d)) continue;
    reps.push_back(d);
    for (const auto& x : left)
      for (const auto& y : right) seen.insert(compose(compose(x, d), y));
  }
  std::unique_lock lock(cache.mutex);
  return cache.table.emplace(key, std::move(reps)).first->second;
}

std::size_t double_coset_cache_size() {
  auto& cache = coset_cache();
  std::shared_lock lock(cache.mutex);
  return cache.table.size();
}

std::vector<Tuple> sorted_tuples(std::int64_t n, int r) {
  std::vector<Tuple> out;
  Tuple t(r, 1);
  if (r == 0) return {t};
  while (true) {
    out.push_back(t);
    int k = r - 1;
    while (k >= 0 && t[k] == n) --k;
    if (k < 0) break;
    ++t[k];
    for (int m = k + 1; m < r; ++m) t[m] = t[k];
  }
  return out;
}

std::vector<Tuple> all_tuples(std::int64_t n, int r) {
  std::vector<Tuple> out;
  Tuple t(r, 1);
  while (true) {
    out.push_back(t);
    int k = r - 1;
    while (k >= 0 && t[k] == n) t[k--] = 1;
    if (k < 0) break;
    ++t[k];
  }
  return out;
}

std::string perm_to_string(const Perm& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < p.size(); ++k) os << (k ? "," : "") << p[k] + 1;
  os << ']';
  return os.str();
}

std::string partition_to_string(const Partition& s) {
  std::ostringstream os;
  os << '[';
  auto blocks = s.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    os << (b ? "," : "") << '[';
    for (std::size_t k = 0; k < blocks[b].size(); ++k) os << (k ? "," : "") << blocks[b][k] + 1;
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace affschur
