#include <algorithm>

#include "rstep/preprocess.hpp"

namespace rstep {
namespace {

std::vector<std::vector<std::size_t>> children_of(const BallTree& tree) {
  std::vector<std::vector<std::size_t>> kids(tree.size());
  for (std::size_t i = 1; i < tree.size(); ++i) kids[tree.parent[i]].push_back(i);
  return kids;
}

void sort_plan(ShortcutPlan& plan) {
  std::sort(plan.added.begin(), plan.added.end(),
            [](const ShortcutEdge& a, const ShortcutEdge& b) { return a.target < b.target; });
}

}  // namespace

ShortcutPlan shortcut_greedy(const BallTree& tree, std::size_t k) {
  if (k < 1) throw DomainError("k must be >= 1");
  ShortcutPlan plan{tree.root, {}, Heuristic::greedy};
  for (std::size_t i = 1; i < tree.size(); ++i) {
    const std::size_t h = tree.hop_depth[i];
    if (h > k && (h - 1) % k == 0) plan.added.push_back({tree.vertex[i], tree.distance[i]});
  }
  sort_plan(plan);
  return plan;
}

std::vector<std::size_t> shortcut_dp_table(const BallTree& tree, std::size_t k) {
  if (k < 1) throw DomainError("k must be >= 1");
  const std::size_t width = k + 1;
  const auto kids = children_of(tree);
  std::vector<std::size_t> cost(tree.size() * width, 0);
  // children sit at larger positions, so a reverse sweep is bottom-up
  for (std::size_t i = tree.size(); i-- > 1;) {
    std::size_t reset = 1;  // shortcut into i: i is 1 hop out, children see t = 1
    for (std::size_t c : kids[i]) reset += cost[c * width + 1];
    cost[i * width + k] = reset;
    for (std::size_t t = 0; t < k; ++t) {
      std::size_t keep = 0;
      for (std::size_t c : kids[i]) keep += cost[c * width + t + 1];
      cost[i * width + t] = std::min(reset, keep);
    }
  }
  return cost;
}

ShortcutPlan shortcut_dp(const BallTree& tree, std::size_t k) {
  const auto cost = shortcut_dp_table(tree, k);
  const std::size_t width = k + 1;
  const auto kids = children_of(tree);
  ShortcutPlan plan{tree.root, {}, Heuristic::dp};
  if (tree.size() == 0) return plan;

  // (member, hops of its parent from the root)
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t c : kids[0]) stack.push_back({c, 0});
  while (!stack.empty()) {
    auto [i, t] = stack.back();
    stack.pop_back();
    std::size_t reset = 1;
    for (std::size_t c : kids[i]) reset += cost[c * width + 1];
    bool take = (t == k);
    if (!take) {
      std::size_t keep = 0;
      for (std::size_t c : kids[i]) keep += cost[c * width + t + 1];
      take = reset <= keep;  // ties go to the shortcut
    }
    if (take) plan.added.push_back({tree.vertex[i], tree.distance[i]});
    const std::size_t child_t = take ? 1 : t + 1;
    for (std::size_t c : kids[i]) stack.push_back({c, child_t});
  }
  sort_plan(plan);
  return plan;
}

}  // namespace rstep
