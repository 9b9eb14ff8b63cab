#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace affschur {

using Tuple = std::vector<std::int64_t>;
/// Permutation of {0..r-1} stored as its image sequence: p[k] = sigma(k).
using Perm = std::vector<int>;

class ContextError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::int64_t floor_div(std::int64_t a, std::int64_t b);
/// Least positive residue in 1..n.
std::int64_t bar(std::int64_t z, std::int64_t n);

Perm identity_perm(int r);
Perm compose(const Perm& p, const Perm& q);  // (p o q)(k) = p(q(k))
Perm inverse(const Perm& p);
int perm_sign(const Perm& p);
bool is_permutation(const Perm& p);
std::vector<Perm> all_permutations(int r);

/// t o sigma, i.e. result_k = t_{sigma(k)}.
template <class V>
V permute(const V& t, const Perm& p) {
  V out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) out[k] = t[p[k]];
  return out;
}

struct AffineWeylElement {
  Perm sigma;
  Tuple eps;

  static AffineWeylElement identity(int r) { return {identity_perm(r), Tuple(r, 0)}; }
  bool operator==(const AffineWeylElement&) const = default;
  auto operator<=>(const AffineWeylElement&) const = default;
};

/// Right action: result_k = t_{sigma(k)} + n * eps_k.
Tuple weyl_apply(const AffineWeylElement& w, const Tuple& t, std::int64_t n);
/// t.(w1 w2) = (t.w1).w2
AffineWeylElement weyl_compose(const AffineWeylElement& w1, const AffineWeylElement& w2);
AffineWeylElement weyl_inverse(const AffineWeylElement& w);

/// Set partition of {0..r-1}; label[k] is the block of k, labels numbered by
/// first occurrence. Its subgroup is the set of permutations preserving every
/// block.
struct Partition {
  std::vector<int> label;

  int size() const { return static_cast<int>(label.size()); }
  std::vector<std::vector<int>> blocks() const;
  bool contains(const Perm& p) const;
  bool refines(const Partition& coarser) const;
  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;
};

Partition partition_from_blocks(const std::vector<std::vector<int>>& blocks, int r);
/// Positions grouped by equal value; any integer vector is allowed.
Partition partition_by_values(const std::vector<std::int64_t>& values);
/// Stabilizer of a tuple with entries in 1..n.
Partition stabilizer(const Tuple& t, std::int64_t n);
Partition meet(const Partition& x, const Partition& y);
Partition meet(const std::vector<Partition>& parts);
std::uint64_t young_order(const Partition& s);
std::vector<Perm> subgroup_elements(const Partition& s);

/// One representative (lexicographically least) per double coset h2 d h1,
/// d ranging over the subgroup of g. Memoized; r <= 8.
const std::vector<Perm>& double_cosets(const Partition& h2, const Partition& g, const Partition& h1);
std::size_t double_coset_cache_size();

/// All weakly increasing tuples over {1..n} of length r.
std::vector<Tuple> sorted_tuples(std::int64_t n, int r);
/// All tuples over {1..n} of length r, lexicographically.
std::vector<Tuple> all_tuples(std::int64_t n, int r);

std::string perm_to_string(const Perm& p);          // one-line, 1-based
std::string partition_to_string(const Partition& s);  // [[1,2],[3]]

}  // namespace affschur
