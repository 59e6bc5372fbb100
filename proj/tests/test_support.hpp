#pragma once

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "bergman/tree_space.hpp"
#include "bergman/weights.hpp"

// Shared fixtures and brute-force oracles for the test suites.
namespace bergman::testsupport {

// The running 6-element example: the graphic oriented matroid of an acyclic
// orientation of K_4, with circuits {12'4, 13'5, 23'6, 45'6, 12'56', 13'46,
// 23'4'5} (primes mark negative elements) and their negatives.
inline OrientedMatroid example_matroid() {
  int n = 6;
  std::vector<SignedSet> circuits = {
      SignedSet::from_elements(n, std::vector<int>{1, 4}, std::vector<int>{2}),
      SignedSet::from_elements(n, std::vector<int>{1, 5}, std::vector<int>{3}),
      SignedSet::from_elements(n, std::vector<int>{2, 6}, std::vector<int>{3}),
      SignedSet::from_elements(n, std::vector<int>{4, 6}, std::vector<int>{5}),
      SignedSet::from_elements(n, std::vector<int>{1, 5}, std::vector<int>{2, 6}),
      SignedSet::from_elements(n, std::vector<int>{1, 4, 6}, std::vector<int>{3}),
      SignedSet::from_elements(n, std::vector<int>{2, 5}, std::vector<int>{3, 4}),
  };
  return OrientedMatroid(n, std::move(circuits));
}

// Weights with the sixth element strictly below the (equal) rest.
inline WeightVector example_weights() {
  WeightVector w;
  w.entries = {Rational(1), Rational(1), Rational(1), Rational(1), Rational(1), Rational(0)};
  return w;
}

// The expected initial matroid of the example at those weights.
inline OrientedMatroid example_initial_matroid() {
  int n = 6;
  std::vector<SignedSet> circuits = {
      SignedSet::from_elements(n, std::vector<int>{1, 4}, std::vector<int>{2}),
      SignedSet::from_elements(n, std::vector<int>{1, 5}, std::vector<int>{3}),
      SignedSet::from_elements(n, std::vector<int>{2}, std::vector<int>{3}),
      SignedSet::from_elements(n, std::vector<int>{4}, std::vector<int>{5}),
      SignedSet::from_elements(n, std::vector<int>{1, 5}, std::vector<int>{2}),
      SignedSet::from_elements(n, std::vector<int>{1, 4}, std::vector<int>{3}),
  };
  return OrientedMatroid(n, std::move(circuits));
}

// The seven positive covector supports of the example, as masks.
inline std::vector<Mask> example_positive_covector_supports() {
  return {
      mask_of({2, 3, 4, 5}, 6),    // 0++++0
      mask_of({3, 5, 6}, 6),       // 00+0++
      mask_of({1, 2, 3}, 6),       // +++000
      mask_of({2, 3, 4, 5, 6}, 6), // 0+++++
      mask_of({1, 2, 3, 5, 6}, 6), // +++0++
      mask_of({1, 2, 3, 4, 5}, 6), // +++++0
      mask_of({1, 2, 3, 4, 5, 6}, 6),
  };
}

// The eight positive flats of the example: {16, 124, 456, 1, 4, 6, {}, [6]}.
inline std::vector<Mask> example_positive_flats() {
  return {
      mask_of({}, 6),        mask_of({1}, 6),          mask_of({4}, 6),
      mask_of({6}, 6),       mask_of({1, 6}, 6),       mask_of({1, 2, 4}, 6),
      mask_of({4, 5, 6}, 6), mask_of({1, 2, 3, 4, 5, 6}, 6),
  };
}

// Random simple graph on {1..n_vertices} with edges oriented i -> j (i < j),
// guaranteed connected enough to be interesting: each edge kept with
// probability ~ 2/3, at least a spanning path.
inline std::pair<OrientedMatroid, std::vector<std::pair<int, int>>> random_graph_matroid(
    std::mt19937& rng, int n_vertices) {
  std::vector<std::pair<int, int>> edges;
  std::uniform_int_distribution<int> keep(0, 2);
  for (int i = 1; i <= n_vertices; ++i) {
    for (int j = i + 1; j <= n_vertices; ++j) {
      if (j == i + 1 || keep(rng) != 0) edges.emplace_back(i, j);
    }
  }
  return {graph_matroid(n_vertices, edges), edges};
}

inline WeightVector random_weights(std::mt19937& rng, int n, int denominator_pool = 2) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, denominator_pool);
  WeightVector w;
  for (int i = 0; i < n; ++i) {
    w.entries.push_back(Rational(num(rng), den(rng)));
    w.entries.back().canonicalize();
  }
  return w;
}

inline Flag random_flag(std::mt19937& rng, int n) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i + 1;
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_int_distribution<int> cut(0, 1);
  std::vector<Mask> proper;
  Mask acc = 0;
  for (int i = 0; i < n; ++i) {
    acc |= Mask{1} << (order[i] - 1);
    if (i + 1 < n && cut(rng) != 0) proper.push_back(acc);
  }
  return Flag(n, std::move(proper));
}

// Random equidistant tree on n leaves with root height 0: random recursive
// cluster splitting with strictly increasing heights.
inline EquidistantTree random_equidistant_tree(std::mt19937& rng, int n_leaves) {
  std::vector<int> leaves(n_leaves);
  for (int i = 0; i < n_leaves; ++i) leaves[i] = i + 1;
  std::shuffle(leaves.begin(), leaves.end(), rng);

  std::vector<EquidistantTree::Node> nodes;
  std::uniform_int_distribution<int> step_num(1, 3);

  // Builds a subtree over leaves[lo..hi) whose root sits at the given height.
  auto rec = [&](auto&& self, int lo, int hi, Rational height) -> int {
    if (hi - lo == 1) {
      EquidistantTree::Node leaf;
      leaf.leaf = leaves[lo];
      nodes.push_back(leaf);
      return static_cast<int>(nodes.size()) - 1;
    }
    EquidistantTree::Node node;
    node.height = height;
    int idx = static_cast<int>(nodes.size());
    nodes.push_back(node);
    // Split into 2..3 non-empty consecutive blocks.
    int span = hi - lo;
    std::uniform_int_distribution<int> parts_dist(2, std::min(3, span));
    int parts = parts_dist(rng);
    std::vector<int> cuts = {lo};
    std::uniform_int_distribution<int> cut_dist(lo + 1, hi - 1);
    while (static_cast<int>(cuts.size()) < parts) {
      int c = cut_dist(rng);
      if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
    }
    cuts.push_back(hi);
    std::sort(cuts.begin(), cuts.end());
    for (size_t b = 0; b + 1 < cuts.size(); ++b) {
      Rational child_height = height + Rational(step_num(rng), 2);
      child_height.canonicalize();
      int child = self(self, cuts[b], cuts[b + 1], child_height);
      nodes[idx].children.push_back(child);
    }
    return idx;
  };
  int root = rec(rec, 0, n_leaves, Rational(0));

  // Common leaf height above every internal vertex is not required; any
  // rational works, including one below internal heights.
  std::uniform_int_distribution<int> leaf_num(-2, 6);
  Rational leaf_height(leaf_num(rng), 2);
  leaf_height.canonicalize();
  return EquidistantTree(n_leaves, leaf_height, std::move(nodes), root);
}

}  // namespace bergman::testsupport
