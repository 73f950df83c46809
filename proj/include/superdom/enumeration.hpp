#pragma once

// One representative per isomorphism class of free trees, generated level
// by level: every (n-1)-vertex tree is extended with a pendant leaf at
// every vertex and the results are deduplicated by canonical form. Levels
// are cached, so repeated calls are cheap.

#include <filesystem>
#include <memory>
#include <vector>

#include "superdom/graph.hpp"

namespace superdom {

class TreeStream {
 public:
  TreeStream(int order, std::shared_ptr<const std::vector<Graph>> trees)
      : order_(order), trees_(std::move(trees)) {}

  int order() const { return order_; }
  std::size_t size() const { return trees_->size(); }
  auto begin() const { return trees_->begin(); }
  auto end() const { return trees_->end(); }
  const std::vector<Graph>& trees() const { return *trees_; }

 private:
  int order_;
  std::shared_ptr<const std::vector<Graph>> trees_;
};

// All non-isomorphic trees on n vertices, 1 <= n <= 16.
TreeStream all_trees(int n);

// Writes one edge-list file per tree into dir; the file name is the hex of
// the tree's canonical form. Returns the number of files written.
int dump_trees(const TreeStream& stream, const std::filesystem::path& dir);

std::string to_hex(const std::string& bytes);

}  // namespace superdom
