#pragma once

#include <filesystem>
#include <iosfwd>
#include <set>
#include <string>

namespace twoassoc::cli {

/// JSON-lines store for count_K and count_W values. Loading seeds the
/// in-memory memo tables; flushing appends whatever they gained since.
class CountCache {
 public:
  explicit CountCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// Bad lines are skipped with a warning on `err`; they get recomputed.
  void load(std::ostream& err);
  void flush(std::ostream& err);

  std::filesystem::path file() const { return dir_ / "counts.jsonl"; }

 private:
  std::filesystem::path dir_;
  std::set<std::string> known_;  // serialized lines already on disk
};

/// --cache-dir, else $TWOASSOC_CACHE_DIR, else ~/.cache/twoassoc.
std::filesystem::path default_cache_dir();

}  // namespace twoassoc::cli
