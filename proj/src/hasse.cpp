#include "gendiag/hasse.hpp"

#include <algorithm>

#include "gendiag/verify.hpp"

namespace gendiag {

namespace {

std::vector<std::pair<int, int>> covers_of(int node_count,
                                           const std::vector<std::pair<int, int>>& strict) {
  std::vector<std::vector<char>> below(node_count, std::vector<char>(node_count, 0));
  for (auto [a, b] : strict) below[a][b] = 1;
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : strict) {
    bool covered = true;
    for (int c = 0; c < node_count && covered; ++c)
      if (below[a][c] && below[c][b]) covered = false;
    if (covered) edges.emplace_back(a, b);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

HasseGraph class_hasse(int n) {
  const PosetReport report = exhaustive_poset(n);
  HasseGraph g;
  for (const EquivClassRep& rep : report.reps) g.node_labels.push_back(format_class(rep));
  g.edges = covers_of(report.class_count, report.relation);
  return g;
}

HasseGraph perm_hasse(int n) {
  if (n < 0 || n > kMaxPosetDegree) fail(errc::degree_too_large, "n too large for enumeration");
  const auto perms = enumerate_symmetric_group(n);
  const int count = static_cast<int>(perms.size());
  std::vector<std::pair<int, int>> strict;
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j)
      if (i != j && cycle_leq(perms[i], perms[j])) strict.emplace_back(i, j);
  HasseGraph g;
  for (const Permutation& p : perms) g.node_labels.push_back(format_cycles(p));
  g.edges = covers_of(count, strict);
  return g;
}

std::string to_dot(const HasseGraph& g, const std::string& name) {
  std::string out = "digraph " + name + " {\n  rankdir=BT;\n";
  for (const std::string& label : g.node_labels) out += "  \"" + label + "\";\n";
  for (auto [a, b] : g.edges)
    out += "  \"" + g.node_labels[a] + "\" -> \"" + g.node_labels[b] + "\";\n";
  out += "}\n";
  return out;
}

}  // namespace gendiag
