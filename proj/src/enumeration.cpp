#include "superdom/enumeration.hpp"

#include <fstream>
#include <mutex>
#include <set>
#include <stdexcept>

namespace superdom {

namespace {

constexpr int kMaxOrder = 16;

std::mutex cache_mutex;
std::vector<std::shared_ptr<const std::vector<Graph>>> level_cache;  // index = order

void build_levels_up_to(int n) {
  if (level_cache.empty()) {
    level_cache.resize(kMaxOrder + 1);
    level_cache[1] = std::make_shared<const std::vector<Graph>>(
        std::vector<Graph>{single_vertex()});
  }
  for (int k = 2; k <= n; ++k) {
    if (level_cache[k]) continue;
    std::vector<Graph> level;
    std::set<std::string> seen;
    for (const Graph& t : *level_cache[k - 1]) {
      for (int v = 0; v < t.n(); ++v) {
        Graph ext = add_pendant(t, v);
        if (seen.insert(canonical_form(ext)).second) level.push_back(std::move(ext));
      }
    }
    level_cache[k] = std::make_shared<const std::vector<Graph>>(std::move(level));
  }
}

}  // namespace

TreeStream all_trees(int n) {
  if (n < 1 || n > kMaxOrder) throw std::invalid_argument("tree order out of budget");
  std::lock_guard<std::mutex> lock(cache_mutex);
  build_levels_up_to(n);
  return TreeStream(n, level_cache[n]);
}

std::string to_hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out += digits[c >> 4];
    out += digits[c & 15];
  }
  return out;
}

int dump_trees(const TreeStream& stream, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  int written = 0;
  for (const Graph& t : stream) {
    std::ofstream out(dir / to_hex(canonical_form(t)));
    out << emit_edge_list(t);
    ++written;
  }
  return written;
}

}  // namespace superdom
