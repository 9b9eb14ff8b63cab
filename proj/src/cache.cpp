#include "cache.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "serialize.hpp"

namespace affschur {

namespace fs = std::filesystem;

namespace {

json header() { return {{"format", StructureCache::kFormat}, {"version", StructureCache::kVersion}}; }

json record(std::int64_t n, const BasisIndex& x, const BasisIndex& y, const Structure& value) {
  return {{"n", n}, {"r", x.r()}, {"left", index_to_json(x)}, {"right", index_to_json(y)}, {"value", structure_to_json(value)}};
}

}  // namespace

StructureCache::StructureCache(std::string path) : path_(std::move(path)) { load(); }

void StructureCache::load() {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (first) {
      first = false;
      if (j.is_discarded() || !j.is_object() || j.value("format", "") != kFormat || j.value("version", -1) != kVersion) {
        stale_ = true;
        return;
      }
      header_written_ = true;
      continue;
    }
    try {
      if (j.is_discarded()) throw FormatError("unreadable line");
      std::int64_t n = j.at("n").get<std::int64_t>();
      BasisIndex x = index_from_json(j.at("left"), n), y = index_from_json(j.at("right"), n);
      if (x.r() != j.at("r").get<int>() || y.r() != x.r()) throw FormatError("degree mismatch");
      records_[{n, x, y}] = structure_from_json(j.at("value"), n);
    } catch (const std::exception&) {
      ++skipped_;
    }
  }
}

void StructureCache::rewrite_locked() {
  fs::path p(path_);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::string tmp = path_ + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp);
    out << header().dump() << '\n';
    for (const auto& [key, value] : records_)
      out << record(std::get<0>(key), std::get<1>(key), std::get<2>(key), value).dump() << '\n';
  }
  fs::rename(tmp, path_);
  header_written_ = true;
  stale_ = false;
  skipped_ = 0;
}

void StructureCache::append_locked(const Key& key, const Structure& value) {
  if (!header_written_ || stale_) {
    rewrite_locked();
    return;
  }
  std::ofstream out(path_, std::ios::app);
  if (!out) throw std::runtime_error("cannot append to cache file " + path_);
  out << record(std::get<0>(key), std::get<1>(key), std::get<2>(key), value).dump() << '\n';
}

std::optional<Structure> StructureCache::lookup(std::int64_t n, const BasisIndex& x, const BasisIndex& y) const {
  std::shared_lock lock(mutex_);
  auto it = records_.find({n, x, y});
  if (it == records_.end()) return std::nullopt;
  std::atomic_ref<std::size_t>(hits_).fetch_add(1);
  return it->second;
}

void StructureCache::store(std::int64_t n, const BasisIndex& x, const BasisIndex& y, const Structure& value) {
  std::unique_lock lock(mutex_);
  Key key{n, x, y};
  auto [it, inserted] = records_.emplace(key, value);
  if (!inserted) return;
  append_locked(key, value);
}

Structure StructureCache::product(std::int64_t n, const BasisIndex& x, const BasisIndex& y) {
  if (auto hit = lookup(n, x, y)) return *hit;
  Structure value = green_product(n, x, y);
  {
    std::unique_lock lock(mutex_);
    ++misses_;
  }
  store(n, x, y, value);
  return value;
}

Element StructureCache::multiply(const Element& x, const Element& y) {
  return multiply_using(x, y, [this](std::int64_t n, const BasisIndex& a, const BasisIndex& b) { return product(n, a, b); });
}

StructureCache::Stats StructureCache::stats() const {
  std::shared_lock lock(mutex_);
  Stats s;
  s.path = path_;
  s.records = records_.size();
  s.hits = hits_;
  s.misses = misses_;
  s.skipped_lines = skipped_;
  s.stale_header = stale_;
  for (const auto& [key, value] : records_) ++s.by_context[{std::get<0>(key), std::get<1>(key).r()}];
  return s;
}

std::size_t StructureCache::clear(std::optional<std::int64_t> n, std::optional<int> r) {
  std::unique_lock lock(mutex_);
  std::size_t removed = 0;
  for (auto it = records_.begin(); it != records_.end();) {
    bool match = (!n || std::get<0>(it->first) == *n) && (!r || std::get<1>(it->first).r() == *r);
    if (match) {
      it = records_.erase(it);
      ++removed;
    } else {
      ++it;
    }
  }
  rewrite_locked();
  return removed;
}

StructureCache::SpotCheck StructureCache::spot_check(std::size_t count, unsigned seed) const {
  std::vector<std::pair<Key, Structure>> sample;
  {
    std::shared_lock lock(mutex_);
    std::vector<const std::pair<const Key, Structure>*> all;
    for (const auto& entry : records_) all.push_back(&entry);
    std::mt19937 rng(seed);
    std::shuffle(all.begin(), all.end(), rng);
    for (std::size_t k = 0; k < std::min(count, all.size()); ++k) sample.emplace_back(all[k]->first, all[k]->second);
  }
  SpotCheck out;
  for (const auto& [key, value] : sample) {
    ++out.checked;
    const auto& [n, x, y] = key;
    if (green_product(n, x, y) != value)
      out.mismatches.push_back(index_to_string(x) + " * " + index_to_string(y) + " (n=" + std::to_string(n) + ")");
  }
  return out;
}

std::string default_cache_path() {
  if (const char* env = std::getenv("AFFSCHUR_CACHE"); env && *env) return env;
  fs::path base;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) base = xdg;
  else if (const char* home = std::getenv("HOME"); home && *home) base = fs::path(home) / ".cache";
  else base = fs::temp_directory_path();
  return (base / "affschur" / "structure.ndjson").string();
}

}  // namespace affschur
