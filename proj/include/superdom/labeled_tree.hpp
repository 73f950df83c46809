#pragma once

// A tree together with a vertex status in {A, B, C}. Classes may be empty.
// The status assignment the family machinery works with is forced by the
// structure: leaves are C, supports are A, everything else is B.

#include <vector>

#include "superdom/graph.hpp"

namespace superdom {

enum class Status : unsigned char { A, B, C };

inline char status_char(Status s) {
  switch (s) {
    case Status::A: return 'A';
    case Status::B: return 'B';
    default: return 'C';
  }
}

struct LabeledTree {
  Graph tree;
  std::vector<Status> status;
};

std::vector<Status> forced_labeling(const Graph& tree);

// Throws when the graph is not a tree or the status vector has the wrong size.
void validate_labeled_tree(const LabeledTree& lt);

}  // namespace superdom
