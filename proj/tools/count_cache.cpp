#include "count_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>

#include "json.hpp"

#include "twoassoc/associahedron.hpp"
#include "twoassoc/count_w.hpp"

namespace twoassoc::cli {

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("TWOASSOC_CACHE_DIR"); env && *env) return env;
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "twoassoc";
  return std::filesystem::path(".twoassoc-cache");
}

namespace {

std::string k_line(int m, int r, const BigInt& v) {
  nlohmann::ordered_json j{{"kind", "K"}, {"m", m}, {"r", r}, {"value", v.str()}};
  return j.dump();
}

std::string w_line(const CountWKey& key, const BigInt& v) {
  const auto& [tree, m, n] = key;
  nlohmann::ordered_json j{{"kind", "W"}, {"tree", tree}, {"m", m}, {"n", n}, {"value", v.str()}};
  return j.dump();
}

}  // namespace

void CountCache::load(std::ostream& err) {
  std::ifstream in(file());
  if (!in) return;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      const auto kind = j.at("kind").get<std::string>();
      const BigInt value(j.at("value").get<std::string>());
      if (kind == "K") {
        count_K_memo().insert({j.at("m").get<int>(), j.at("r").get<int>()}, value);
      } else if (kind == "W") {
        const auto tree = Tree::parse(j.at("tree").get<std::string>()).to_text();
        count_W_memo().insert({tree, j.at("m").get<int>(), j.at("n").get<NVector>()}, value);
      } else {
        throw std::runtime_error("unknown kind");
      }
      known_.insert(line);
    } catch (const std::exception&) {
      err << "warning: ignoring corrupted cache line " << lineno << " in " << file().string() << "\n";
    }
  }
}

void CountCache::flush(std::ostream& err) {
  std::vector<std::string> fresh;
  for (const auto& [key, v] : count_K_memo().snapshot()) {
    auto line = k_line(key.first, key.second, v);
    if (!known_.count(line)) fresh.push_back(std::move(line));
  }
  for (const auto& [key, v] : count_W_memo().snapshot()) {
    auto line = w_line(key, v);
    if (!known_.count(line)) fresh.push_back(std::move(line));
  }
  if (fresh.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  bool needs_newline = false;
  if (std::ifstream prev(file(), std::ios::binary | std::ios::ate); prev && prev.tellg() > 0) {
    prev.seekg(-1, std::ios::end);
    needs_newline = prev.get() != '\n';
  }
  std::ofstream out(file(), std::ios::app);
  if (!out) {
    err << "warning: cannot write cache file " << file().string() << "\n";
    return;
  }
  if (needs_newline) out << "\n";
  for (auto& line : fresh) {
    out << line << "\n";
    known_.insert(std::move(line));
  }
}

}  // namespace twoassoc::cli
