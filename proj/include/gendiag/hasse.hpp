#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gendiag {

struct HasseGraph {
  std::vector<std::string> node_labels;           // cycle-notation labels
  std::vector<std::pair<int, int>> edges;         // covering pairs (lower, upper)
};

/// Covering relation of the class order on S_n, nodes ordered by canonical
/// representative.
HasseGraph class_hasse(int n);

/// Covering relation of the cycle inclusion order on the permutations of S_n.
HasseGraph perm_hasse(int n);

std::string to_dot(const HasseGraph& g, const std::string& name);

}  // namespace gendiag
