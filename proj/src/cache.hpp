#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

#include "schur.hpp"

namespace affschur {

/// Persistent store of structure constants, one JSON record per line after
/// a format header. Readers share a lock; writers append one at a time.
class StructureCache {
 public:
  static constexpr int kVersion = 1;
  static constexpr const char* kFormat = "affschur-structure-cache";

  struct Stats {
    std::string path;
    std::size_t records = 0;
    std::size_t hits = 0;
    std::size_t misses = 0;
    std::size_t skipped_lines = 0;
    bool stale_header = false;
    std::map<std::pair<std::int64_t, int>, std::size_t> by_context;
  };

  struct SpotCheck {
    std::size_t checked = 0;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
  };

  explicit StructureCache(std::string path);

  const std::string& path() const { return path_; }
  std::optional<Structure> lookup(std::int64_t n, const BasisIndex& x, const BasisIndex& y) const;
  void store(std::int64_t n, const BasisIndex& x, const BasisIndex& y, const Structure& value);
  /// Cached Green product, computed and appended on a miss.
  Structure product(std::int64_t n, const BasisIndex& x, const BasisIndex& y);
  Element multiply(const Element& x, const Element& y);

  Stats stats() const;
  /// Drops the records of one (n, r) context, or all records; returns the
  /// number removed.
  std::size_t clear(std::optional<std::int64_t> n = std::nullopt, std::optional<int> r = std::nullopt);
  /// Re-derives up to `count` stored products from scratch.
  SpotCheck spot_check(std::size_t count, unsigned seed) const;

 private:
  using Key = std::tuple<std::int64_t, BasisIndex, BasisIndex>;

  std::string path_;
  mutable std::shared_mutex mutex_;
  std::map<Key, Structure> records_;
  mutable std::size_t hits_ = 0;
  std::size_t misses_ = 0;
  std::size_t skipped_ = 0;
  bool stale_ = false;
  bool header_written_ = false;

  void load();
  void rewrite_locked();
  void append_locked(const Key& key, const Structure& value);
};

/// AFFSCHUR_CACHE, else a file under the user cache directory.
std::string default_cache_path();

}  // namespace affschur
