#include "superdom/labeled_tree.hpp"

#include <stdexcept>

namespace superdom {

std::vector<Status> forced_labeling(const Graph& tree) {
  VertexSet lf = leaves(tree);
  VertexSet sup = supports(tree);
  std::vector<Status> out(tree.n(), Status::B);
  for (int v = 0; v < tree.n(); ++v) {
    if (lf.test(v))
      out[v] = Status::C;
    else if (sup.test(v))
      out[v] = Status::A;
  }
  return out;
}

void validate_labeled_tree(const LabeledTree& lt) {
  if (!is_tree(lt.tree)) throw std::invalid_argument("labeled tree: graph is not a tree");
  if (static_cast<int>(lt.status.size()) != lt.tree.n())
    throw std::invalid_argument("labeled tree: status size mismatch");
}

}  // namespace superdom
