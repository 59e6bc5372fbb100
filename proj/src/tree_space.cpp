#include "bergman/tree_space.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>

namespace bergman {

int edge_count(int n_vertices) { return n_vertices * (n_vertices - 1) / 2; }

int edge_index(int n_vertices, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n_vertices || i == j) {
    throw std::invalid_argument("edge endpoints out of range");
  }
  return (i - 1) * n_vertices - i * (i - 1) / 2 + (j - i);
}

std::pair<int, int> edge_endpoints(int n_vertices, int index) {
  if (index < 1 || index > edge_count(n_vertices)) {
    throw std::invalid_argument("edge index out of range");
  }
  for (int i = 1; i < n_vertices; ++i) {
    int row = n_vertices - i;
    if (index <= row) return {i, i + index};
    index -= row;
  }
  throw std::logic_error("unreachable");
}

OrientedMatroid graph_matroid(int n_vertices, std::span<const std::pair<int, int>> edges) {
  int m = static_cast<int>(edges.size());
  check_ground_size(m, 31, "graph_matroid");

  // forward[a][b] = edge index if a -> b is present.
  std::vector<std::vector<int>> forward(n_vertices + 1, std::vector<int>(n_vertices + 1, 0));
  for (int e = 0; e < m; ++e) {
    auto [a, b] = edges[e];
    if (a < 1 || b < 1 || a > n_vertices || b > n_vertices || a == b) {
      throw std::invalid_argument("bad edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    if (forward[a][b] != 0 || forward[b][a] != 0) {
      throw std::invalid_argument("parallel edges are not supported");
    }
    forward[a][b] = e + 1;
  }

  // Cycles: pick a vertex subset, then a cyclic order; the smallest vertex
  // leads and orientation is fixed by second < last.
  std::vector<SignedSet> circuits;
  std::vector<int> verts;
  for (Mask s = 0; s < (Mask{1} << n_vertices); ++s) {
    if (std::popcount(s) < 3) continue;
    verts = elements_of(s);
    std::vector<int> rest(verts.begin() + 1, verts.end());
    std::sort(rest.begin(), rest.end());
    do {
      if (rest.front() > rest.back()) continue;
      Mask pos = 0;
      Mask neg = 0;
      bool ok = true;
      int prev = verts.front();
      for (size_t i = 0; i <= rest.size() && ok; ++i) {
        int next = (i < rest.size()) ? rest[i] : verts.front();
        if (int e = forward[prev][next]; e != 0) {
          pos |= Mask{1} << (e - 1);
        } else if (int b = forward[next][prev]; b != 0) {
          neg |= Mask{1} << (b - 1);
        } else {
          ok = false;
        }
        prev = next;
      }
      if (ok) circuits.emplace_back(m, pos, neg);
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return OrientedMatroid(m, std::move(circuits));
}

OrientedMatroid complete_graph_matroid(int n_vertices) {
  if (n_vertices < 3) throw std::invalid_argument("complete_graph_matroid needs n >= 3");
  if (n_vertices > 7) throw CapacityError("complete_graph_matroid: n > 7");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n_vertices; ++i) {
    for (int j = i + 1; j <= n_vertices; ++j) edges.emplace_back(i, j);
  }
  return graph_matroid(n_vertices, edges);
}

EquidistantTree::EquidistantTree(int n_leaves, Rational leaf_height, std::vector<Node> nodes,
                                 int root)
    : n_leaves_(n_leaves), leaf_height_(std::move(leaf_height)), nodes_(std::move(nodes)),
      root_(root) {
  if (n_leaves_ < 2) throw std::invalid_argument("equidistant tree needs at least 2 leaves");
  if (root_ < 0 || root_ >= static_cast<int>(nodes_.size())) {
    throw std::invalid_argument("root index out of range");
  }

  std::vector<int> seen_parent(nodes_.size(), -1);
  std::vector<bool> leaf_used(n_leaves_ + 1, false);
  std::vector<int> stack = {root_};
  int visited = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++visited;
    const Node& node = nodes_[v];
    if (node.leaf > 0) {
      if (!node.children.empty()) throw std::invalid_argument("leaf node has children");
      if (node.leaf > n_leaves_ || leaf_used[node.leaf]) {
        throw std::invalid_argument("leaf labels must be 1..n, each once");
      }
      leaf_used[node.leaf] = true;
      nodes_[v].height = leaf_height_;
    } else {
      if (node.children.size() < 2) {
        throw std::invalid_argument("internal node needs at least 2 children");
      }
      for (int c : node.children) {
        if (c < 0 || c >= static_cast<int>(nodes_.size()) || seen_parent[c] != -1 || c == root_) {
          throw std::invalid_argument("child links do not form a tree");
        }
        seen_parent[c] = v;
        // Internal edges must have positive length.
        if (nodes_[c].leaf == 0 && !(nodes_[c].height > node.height)) {
          throw std::invalid_argument("internal child height must exceed its parent's");
        }
        stack.push_back(c);
      }
    }
  }
  if (visited != static_cast<int>(nodes_.size())) {
    throw std::invalid_argument("unreachable nodes in tree");
  }
  for (int l = 1; l <= n_leaves_; ++l) {
    if (!leaf_used[l]) throw std::invalid_argument("missing leaf " + std::to_string(l));
  }
}

WeightVector distance_vector(const EquidistantTree& t) {
  int n = t.n_leaves();
  // Leaf-descendant masks per node (leaf labels as bits).
  std::vector<Mask> below(t.nodes().size(), 0);
  // Nodes were validated to form a tree; compute bottom-up by repeated passes.
  std::vector<int> order;
  std::vector<int> stack = {t.root()};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int c : t.nodes()[v].children) stack.push_back(c);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto& node = t.nodes()[*it];
    if (node.leaf > 0) {
      below[*it] = Mask{1} << (node.leaf - 1);
    } else {
      for (int c : node.children) below[*it] |= below[c];
    }
  }

  WeightVector w;
  w.entries.assign(edge_count(n), Rational(0));
  for (int v = 0; v < static_cast<int>(t.nodes().size()); ++v) {
    const auto& node = t.nodes()[v];
    if (node.leaf > 0) continue;
    Rational d = 2 * (t.leaf_height() - node.height);
    // Pairs whose lowest common ancestor is v: leaves in distinct children.
    for (size_t a = 0; a < node.children.size(); ++a) {
      for (size_t b = a + 1; b < node.children.size(); ++b) {
        for (int i : elements_of(below[node.children[a]])) {
          for (int j : elements_of(below[node.children[b]])) {
            w.entries[edge_index(n, i, j) - 1] = d;
          }
        }
      }
    }
  }
  return w;
}

EquidistantTree tree_from_point(int n_leaves, const WeightVector& w) {
  if (n_leaves < 2) throw std::invalid_argument("tree_from_point needs n >= 2");
  if (w.size() != edge_count(n_leaves)) {
    throw std::invalid_argument("weight vector length is not C(n,2)");
  }
  auto dist = [&](int i, int j) -> const Rational& {
    return w.entries[edge_index(n_leaves, i, j) - 1];
  };

  // Ultrametric condition: in every triangle the maximum is achieved twice.
  for (int i = 1; i <= n_leaves; ++i) {
    for (int j = i + 1; j <= n_leaves; ++j) {
      for (int k = j + 1; k <= n_leaves; ++k) {
        const Rational& a = dist(i, j);
        const Rational& b = dist(i, k);
        const Rational& c = dist(j, k);
        const Rational& top = std::max({a, b, c});
        int hits = (a == top) + (b == top) + (c == top);
        if (hits < 2) {
          throw std::invalid_argument("not in the Bergman fan: triangle {" + std::to_string(i) +
                                      "," + std::to_string(j) + "," + std::to_string(k) +
                                      "} achieves its maximum only once");
        }
      }
    }
  }

  std::vector<Rational> values;
  for (const Rational& q : w.entries) values.push_back(q);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  Rational leaf_height = values.back() / 2;

  std::vector<EquidistantTree::Node> nodes(n_leaves);
  for (int l = 1; l <= n_leaves; ++l) {
    nodes[l - 1].leaf = l;
    nodes[l - 1].height = leaf_height;
  }
  // Union-find over leaves; cluster_node maps a root leaf to its tree node.
  std::vector<int> parent(n_leaves + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> cluster_node(n_leaves + 1);
  for (int l = 1; l <= n_leaves; ++l) cluster_node[l] = l - 1;

  for (const Rational& t : values) {
    for (int i = 1; i <= n_leaves; ++i) {
      for (int j = i + 1; j <= n_leaves; ++j) {
        if (dist(i, j) != t) continue;
        int ri = find(i);
        int rj = find(j);
        if (ri != rj) parent[rj] = ri;
      }
    }
    std::map<int, std::vector<int>> merged;
    for (int l = 1; l <= n_leaves; ++l) {
      int r = find(l);
      int c = cluster_node[l];
      // record each old cluster once under its new root
      auto& list = merged[r];
      if (std::find(list.begin(), list.end(), c) == list.end()) list.push_back(c);
    }
    for (auto& [root_leaf, old_clusters] : merged) {
      if (old_clusters.size() < 2) continue;
      EquidistantTree::Node node;
      node.height = leaf_height - t / 2;
      std::sort(old_clusters.begin(), old_clusters.end());
      node.children = old_clusters;
      nodes.push_back(node);
      int idx = static_cast<int>(nodes.size()) - 1;
      for (int l = 1; l <= n_leaves; ++l) {
        if (find(l) == root_leaf) cluster_node[l] = idx;
      }
    }
  }

  if (find(1) != find(n_leaves) && n_leaves > 1) {
    throw std::logic_error("clusters failed to merge; inconsistent distances");
  }
  int root = cluster_node[1];
  EquidistantTree tree(n_leaves, leaf_height, std::move(nodes), root);
  if (!(distance_vector(tree) == w)) {
    throw std::logic_error("reconstructed tree does not reproduce the input distances");
  }
  return tree;
}

TreeShape make_leaf(int label) {
  if (label < 1) throw std::invalid_argument("leaf labels are positive");
  TreeShape s;
  s.leaf = label;
  s.leaf_set = Mask{1} << (label - 1);
  return s;
}

TreeShape make_internal(std::vector<TreeShape> children) {
  if (children.size() < 2) throw std::invalid_argument("internal node needs at least 2 children");
  TreeShape s;
  std::sort(children.begin(), children.end(), [](const TreeShape& a, const TreeShape& b) {
    return std::countr_zero(a.leaf_set) < std::countr_zero(b.leaf_set);
  });
  for (const TreeShape& c : children) {
    if ((s.leaf_set & c.leaf_set) != 0) throw std::invalid_argument("duplicate leaf label");
    s.leaf_set |= c.leaf_set;
  }
  s.children = std::move(children);
  return s;
}

namespace {

TreeShape shape_of_node(const EquidistantTree& t, int v) {
  const auto& node = t.nodes()[v];
  if (node.leaf > 0) return make_leaf(node.leaf);
  std::vector<TreeShape> children;
  children.reserve(node.children.size());
  for (int c : node.children) children.push_back(shape_of_node(t, c));
  return make_internal(std::move(children));
}

}  // namespace

TreeShape shape_of(const EquidistantTree& t) { return shape_of_node(t, t.root()); }

std::string shape_key(const TreeShape& s) {
  if (s.is_leaf()) return std::to_string(s.leaf);
  std::string out = "(";
  for (const TreeShape& c : s.children) out += shape_key(c) + ",";
  out.back() = ')';
  return out;
}

bool is_binary_shape(const TreeShape& s) {
  if (s.is_leaf()) return true;
  if (s.children.size() != 2) return false;
  return is_binary_shape(s.children[0]) && is_binary_shape(s.children[1]);
}

namespace {

bool mask_is_interval(Mask m) {
  if (m == 0) return false;
  Mask shifted = m >> std::countr_zero(m);
  return (shifted & (shifted + 1)) == 0;
}

bool order_planar_rec(const TreeShape& s) {
  if (s.is_leaf()) return true;
  if (!mask_is_interval(s.leaf_set)) return false;
  for (const TreeShape& c : s.children) {
    if (!order_planar_rec(c)) return false;
  }
  return true;
}

}  // namespace

bool is_order_planar(const TreeShape& s) { return order_planar_rec(s); }

namespace {

void check_permutation(int n, std::span<const int> pi) {
  if (static_cast<int>(pi.size()) != n) throw std::invalid_argument("permutation length mismatch");
  std::vector<bool> seen(n + 1, false);
  for (int v : pi) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a permutation of 1..n");
    seen[v] = true;
  }
}

void check_fan_point(int n, const WeightVector& w) {
  auto dist = [&](int i, int j) -> const Rational& {
    return w.entries[edge_index(n, i, j) - 1];
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        const Rational& top = std::max({dist(i, j), dist(i, k), dist(j, k)});
        int hits = (dist(i, j) == top) + (dist(i, k) == top) + (dist(j, k) == top);
        if (hits < 2) throw std::invalid_argument("weight vector is not in the Bergman fan");
      }
    }
  }
}

}  // namespace

bool is_positive_point(int n_leaves, const WeightVector& w, std::span<const int> pi,
                       PositiveTest mode) {
  int n = n_leaves;
  check_permutation(n, pi);
  if (w.size() != edge_count(n)) throw std::invalid_argument("weight vector length is not C(n,2)");
  check_fan_point(n, w);

  std::vector<int> position(n + 1, 0);
  for (int p = 0; p < n; ++p) position[pi[p]] = p;

  switch (mode) {
    case PositiveTest::kFan: {
      Mask flip = 0;
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          if (position[j] < position[i]) flip |= Mask{1} << (edge_index(n, i, j) - 1);
        }
      }
      return in_positive_bergman_fan(reorient(complete_graph_matroid(n), flip), w);
    }
    case PositiveTest::kTriangleInitials: {
      int m = edge_count(n);
      for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
          for (int c = b + 1; c <= n; ++c) {
            Mask pos = 0;
            Mask neg = 0;
            auto add = [&](int from, int to) {
              int e = edge_index(n, from, to);
              if (position[from] < position[to]) {
                pos |= Mask{1} << (e - 1);
              } else {
                neg |= Mask{1} << (e - 1);
              }
            };
            add(a, b);
            add(b, c);
            add(c, a);
            SignedSet init = init_circuit(SignedSet(m, pos, neg), w);
            if (init.pos() == 0 || init.neg() == 0) return false;
          }
        }
      }
      return true;
    }
    case PositiveTest::kBranching: {
      auto dist = [&](int i, int j) -> const Rational& {
        return w.entries[edge_index(n, i, j) - 1];
      };
      for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
          for (int r = q + 1; r < n; ++r) {
            int i = pi[p];
            int j = pi[q];
            int k = pi[r];
            // The middle leaf j may not branch off before i and k.
            if (dist(i, k) < dist(i, j) && dist(i, k) < dist(j, k)) return false;
          }
        }
      }
      return true;
    }
    case PositiveTest::kPlanarDrawing: {
      EquidistantTree t = tree_from_point(n, w);
      TreeShape shape = shape_of(t);
      // Relabel leaves by position in pi and ask for an increasing drawing.
      struct Walker {
        const std::vector<int>& position;
        bool ok = true;
        Mask relabel(const TreeShape& s) {
          if (s.is_leaf()) return Mask{1} << position[s.leaf];
          Mask acc = 0;
          for (const TreeShape& c : s.children) acc |= relabel(c);
          if (!mask_is_interval(acc)) ok = false;
          return acc;
        }
      } walker{position};
      walker.relabel(shape);
      return walker.ok;
    }
  }
  throw std::invalid_argument("unknown positive test mode");
}

namespace {

std::vector<TreeShape> shapes_on_interval(int lo, int hi) {
  if (lo == hi) return {make_leaf(lo)};
  std::vector<TreeShape> out;
  int gaps = hi - lo;  // cut positions between lo..hi
  for (Mask cuts = 1; cuts < (Mask{1} << gaps); ++cuts) {
    // Parts delimited by the chosen cuts.
    std::vector<std::pair<int, int>> parts;
    int start = lo;
    for (int g = 0; g < gaps; ++g) {
      if (cuts & (Mask{1} << g)) {
        parts.emplace_back(start, lo + g);
        start = lo + g + 1;
      }
    }
    parts.emplace_back(start, hi);

    std::vector<std::vector<TreeShape>> options;
    for (auto [a, b] : parts) options.push_back(shapes_on_interval(a, b));
    std::vector<size_t> pick(parts.size(), 0);
    while (true) {
      std::vector<TreeShape> children;
      for (size_t i = 0; i < parts.size(); ++i) children.push_back(options[i][pick[i]]);
      out.push_back(make_internal(std::move(children)));
      size_t i = 0;
      while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }
  return out;
}

}  // namespace

std::vector<TreeShape> planar_shapes(int n_leaves) {
  if (n_leaves < 2) throw std::invalid_argument("planar_shapes needs n >= 2");
  if (n_leaves > 9) throw CapacityError("planar_shapes: n > 9");
  std::vector<TreeShape> out = shapes_on_interval(1, n_leaves);
  std::sort(out.begin(), out.end(), [](const TreeShape& a, const TreeShape& b) {
    return shape_key(a) < shape_key(b);
  });
  return out;
}

std::vector<TreeShape> planar_binary_shapes(int n_leaves) {
  std::vector<TreeShape> out;
  for (TreeShape& s : planar_shapes(n_leaves)) {
    if (is_binary_shape(s)) out.push_back(std::move(s));
  }
  return out;
}

namespace {

// Attach the new leaf above every node; the recursion yields each labeled
// shape exactly once.
void insertions(const TreeShape& s, int label, std::vector<TreeShape>& out) {
  out.push_back(make_internal({s, make_leaf(label)}));
  if (s.is_leaf()) return;
  std::vector<TreeShape> sub;
  for (size_t i = 0; i < s.children.size(); ++i) {
    sub.clear();
    insertions(s.children[i], label, sub);
    for (TreeShape& t : sub) {
      std::vector<TreeShape> children = s.children;
      children[i] = std::move(t);
      out.push_back(make_internal(std::move(children)));
    }
  }
}

}  // namespace

std::vector<TreeShape> labeled_binary_shapes(int n_leaves) {
  if (n_leaves < 2) throw std::invalid_argument("labeled_binary_shapes needs n >= 2");
  if (n_leaves > 8) throw CapacityError("labeled_binary_shapes: n > 8");
  std::vector<TreeShape> current = {make_internal({make_leaf(1), make_leaf(2)})};
  for (int label = 3; label <= n_leaves; ++label) {
    std::vector<TreeShape> next;
    for (const TreeShape& s : current) insertions(s, label, next);
    current = std::move(next);
  }
  std::sort(current.begin(), current.end(), [](const TreeShape& a, const TreeShape& b) {
    return shape_key(a) < shape_key(b);
  });
  return current;
}

bool ShapePoset::leq(int a, int b) const {
  return std::includes(brackets[b].begin(), brackets[b].end(), brackets[a].begin(),
                       brackets[a].end());
}

namespace {

void collect_brackets(const TreeShape& s, bool root, std::vector<Mask>& out) {
  if (s.is_leaf()) return;
  if (!root) out.push_back(s.leaf_set);
  for (const TreeShape& c : s.children) collect_brackets(c, false, out);
}

}  // namespace

ShapePoset planar_shape_poset(int n_leaves) {
  ShapePoset p;
  p.n_leaves = n_leaves;
  p.shapes = planar_shapes(n_leaves);
  p.brackets.reserve(p.shapes.size());
  for (const TreeShape& s : p.shapes) {
    std::vector<Mask> b;
    collect_brackets(s, true, b);
    std::sort(b.begin(), b.end());
    p.brackets.push_back(std::move(b));
  }
  return p;
}

std::vector<TreeShape> single_contractions(const TreeShape& s) {
  std::vector<TreeShape> out;
  if (s.is_leaf()) return out;
  for (size_t i = 0; i < s.children.size(); ++i) {
    const TreeShape& child = s.children[i];
    if (!child.is_leaf()) {
      std::vector<TreeShape> merged;
      for (size_t j = 0; j < s.children.size(); ++j) {
        if (j == i) continue;
        merged.push_back(s.children[j]);
      }
      merged.insert(merged.end(), child.children.begin(), child.children.end());
      out.push_back(make_internal(std::move(merged)));
    }
    for (TreeShape& t : single_contractions(child)) {
      std::vector<TreeShape> children = s.children;
      children[i] = std::move(t);
      out.push_back(make_internal(std::move(children)));
    }
  }
  return out;
}

std::vector<std::vector<Mask>> associahedron_face_sets(int n_leaves) {
  if (n_leaves < 3) throw std::invalid_argument("associahedron_face_sets needs n >= 3");
  if (n_leaves > 9) throw CapacityError("associahedron_face_sets: n > 9");
  std::vector<Mask> intervals;
  for (int lo = 1; lo <= n_leaves; ++lo) {
    for (int hi = lo + 1; hi <= n_leaves; ++hi) {
      if (hi - lo + 1 > n_leaves - 1) continue;
      Mask m = 0;
      for (int x = lo; x <= hi; ++x) m |= Mask{1} << (x - 1);
      intervals.push_back(m);
    }
  }
  auto compatible = [](Mask a, Mask b) {
    return (a & b) == 0 || is_subset(a, b) || is_subset(b, a);
  };

  std::vector<std::vector<Mask>> out;
  std::vector<Mask> chosen;
  auto rec = [&](auto&& self, size_t from) -> void {
    std::vector<Mask> sorted = chosen;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(std::move(sorted));
    for (size_t i = from; i < intervals.size(); ++i) {
      bool ok = true;
      for (Mask c : chosen) {
        if (!compatible(c, intervals[i])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(intervals[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

BinaryTree internal_tree(const TreeShape& binary_shape) {
  if (!is_binary_shape(binary_shape)) {
    throw std::invalid_argument("internal_tree requires a binary shape");
  }
  BinaryTree t;
  auto rec = [&](auto&& self, const TreeShape& s) -> int {
    if (s.is_leaf()) return -1;
    int idx = t.size();
    t.nodes.push_back({});
    int left = self(self, s.children[0]);
    int right = self(self, s.children[1]);
    t.nodes[idx].left = left;
    t.nodes[idx].right = right;
    return idx;
  };
  t.root = rec(rec, binary_shape);
  return t;
}

namespace {

int internal_descendant_count(const TreeShape& s, mpz_class& product) {
  if (s.is_leaf()) return 0;
  int d = 1;
  for (const TreeShape& c : s.children) d += internal_descendant_count(c, product);
  product *= d;
  return d;
}

}  // namespace

long long hook_count(const TreeShape& binary_shape) {
  if (!is_binary_shape(binary_shape)) {
    throw std::invalid_argument("hook_count is defined for binary shapes only");
  }
  int n = std::popcount(binary_shape.leaf_set);
  if (n > 20) throw CapacityError("hook_count: n > 20");
  mpz_class product = 1;
  internal_descendant_count(binary_shape, product);
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n - 1));
  if (!mpz_divisible_p(fact.get_mpz_t(), product.get_mpz_t())) {
    throw std::logic_error("hook product does not divide (n-1)!");
  }
  mpz_class result;
  mpz_divexact(result.get_mpz_t(), fact.get_mpz_t(), product.get_mpz_t());
  if (!result.fits_slong_p()) throw CapacityError("hook_count overflow");
  return result.get_si();
}

std::vector<std::vector<int>> increasing_labelings(const BinaryTree& t) {
  int m = t.size();
  if (m > 9) throw CapacityError("increasing_labelings: more than 9 internal vertices");
  std::vector<std::vector<int>> out;
  if (m == 0) {
    out.emplace_back();  // the empty labeling
    return out;
  }
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    bool ok = true;
    for (int v = 0; v < m && ok; ++v) {
      int l = t.nodes[v].left;
      int r = t.nodes[v].right;
      if (l >= 0 && perm[l] < perm[v]) ok = false;
      if (r >= 0 && perm[r] < perm[v]) ok = false;
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {

void inorder(const LabeledBinaryTree& t, int v, std::vector<int>& out) {
  if (v < 0) return;
  inorder(t, t.shape.nodes[v].left, out);
  out.push_back(t.labels[v]);
  inorder(t, t.shape.nodes[v].right, out);
}

}  // namespace

std::vector<int> permutation_of_tree(const LabeledBinaryTree& t) {
  if (t.labels.size() != t.shape.nodes.size()) {
    throw std::invalid_argument("label count must match node count");
  }
  std::vector<int> out;
  inorder(t, t.shape.root, out);
  return out;
}

LabeledBinaryTree tree_of_permutation(std::span<const int> pi) {
  std::vector<int> sorted(pi.begin(), pi.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("labels must be distinct");
  }
  LabeledBinaryTree t;
  auto rec = [&](auto&& self, int lo, int hi) -> int {  // [lo, hi)
    if (lo >= hi) return -1;
    int at = lo;
    for (int i = lo + 1; i < hi; ++i) {
      if (pi[i] < pi[at]) at = i;
    }
    int idx = static_cast<int>(t.shape.nodes.size());
    t.shape.nodes.push_back({});
    t.labels.push_back(pi[at]);
    int left = self(self, lo, at);
    int right = self(self, at + 1, hi);
    t.shape.nodes[idx].left = left;
    t.shape.nodes[idx].right = right;
    return idx;
  };
  t.shape.root = rec(rec, 0, static_cast<int>(pi.size()));
  return t;
}

CoveringReport covering_statistics(int n_vertices) {
  if (n_vertices < 3) throw std::invalid_argument("covering_statistics needs n >= 3");
  if (n_vertices > 5) throw CapacityError("covering_statistics: n > 5");
  int n = n_vertices;

  OrientedMatroid base = complete_graph_matroid(n);
  CellComplexSummary fine = fine_cells(base, false);

  std::vector<Flag> cells;
  for (const auto& chain : fine.fine_chains) {
    if (static_cast<int>(chain.size()) == fine.rank - 1) cells.emplace_back(base.ground_size(), chain);
  }

  CoveringReport report;
  report.n_vertices = n;
  report.full_dimensional_cells = static_cast<long long>(cells.size());
  report.expected_multiplicity = 1LL << (n - 1);
  report.cell_multiplicities.assign(cells.size(), 0);

  std::vector<bool> covered_by_first(cells.size(), false);
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 1);
  do {
    Mask flip = 0;
    std::vector<int> position(n + 1, 0);
    for (int p = 0; p < n; ++p) position[pi[p]] = p;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if (position[j] < position[i]) flip |= Mask{1} << (edge_index(n, i, j) - 1);
      }
    }
    OrientedMatroid oriented = reorient(base, flip);
    for (size_t c = 0; c < cells.size(); ++c) {
      if (is_acyclic(initial_matroid(oriented, cells[c]))) {
        report.cell_multiplicities[c] += 1;
        if (pi[0] == 1) covered_by_first[c] = true;
      }
    }
  } while (std::next_permutation(pi.begin(), pi.end()));

  report.multiplicity_uniform =
      std::all_of(report.cell_multiplicities.begin(), report.cell_multiplicities.end(),
                  [&](long long c) { return c == report.expected_multiplicity; });
  report.first_leaf_permutations_cover =
      std::all_of(covered_by_first.begin(), covered_by_first.end(), [](bool b) { return b; });

  long long fact_n = 1;
  for (int i = 2; i <= n; ++i) fact_n *= i;
  long long fact_n1 = fact_n / n;
  report.count_identity = fact_n * fact_n1 / (1LL << (n - 1));
  report.count_identity_holds = report.full_dimensional_cells == report.count_identity;
  return report;
}

}  // namespace bergman
