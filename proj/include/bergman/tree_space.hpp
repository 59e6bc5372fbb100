#pragma once

#include <span>
#include <utility>
#include <vector>

#include "bergman/complex.hpp"

namespace bergman {

// Edges of K_n in lexicographic order, 1-based: (1,2), (1,3), ..., (n-1,n).
int edge_count(int n_vertices);
int edge_index(int n_vertices, int i, int j);
std::pair<int, int> edge_endpoints(int n_vertices, int index);

// Graphic oriented matroid of a simple digraph: ground set = the given edges
// in order, circuits = simple cycles with traversal signs (+ when an edge is
// crossed forward).
OrientedMatroid graph_matroid(int n_vertices, std::span<const std::pair<int, int>> edges);

// K_n with each edge oriented i -> j for i < j; supported for 3 <= n <= 7.
OrientedMatroid complete_graph_matroid(int n_vertices);

// A rooted tree with n labeled leaves at a common height (distance from the
// root) and strictly increasing heights along internal edges.  Pendant edge
// lengths are unconstrained.
class EquidistantTree {
 public:
  struct Node {
    Rational height;
    std::vector<int> children;  // indices into nodes(); empty for leaves
    int leaf = 0;               // leaf label, 0 for internal nodes
  };

  EquidistantTree(int n_leaves, Rational leaf_height, std::vector<Node> nodes, int root);

  int n_leaves() const { return n_leaves_; }
  const Rational& leaf_height() const { return leaf_height_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  int root() const { return root_; }

 private:
  int n_leaves_;
  Rational leaf_height_;
  std::vector<Node> nodes_;
  int root_;
};

// d_ij = 2h - 2 height(lca(i,j)), as a weight vector on the edges of K_n.
WeightVector distance_vector(const EquidistantTree& t);

// Ultrametric reconstruction: merges leaf clusters at the distinct values of
// w in ascending order; simultaneous ties produce non-binary vertices.  The
// root is placed at height 0.  Rejects w whose maximum on some triangle of
// K_n is achieved only once.
EquidistantTree tree_from_point(int n_leaves, const WeightVector& w);

// Combinatorial type: leaf labels kept, heights dropped; children are stored
// sorted by smallest leaf so equal types compare equal.
struct TreeShape {
  int leaf = 0;  // > 0 for leaves
  std::vector<TreeShape> children;
  Mask leaf_set = 0;

  bool is_leaf() const { return leaf > 0; }
  friend bool operator==(const TreeShape&, const TreeShape&) = default;
};

TreeShape make_leaf(int label);
TreeShape make_internal(std::vector<TreeShape> children);
TreeShape shape_of(const EquidistantTree& t);
std::string shape_key(const TreeShape& s);

bool is_binary_shape(const TreeShape& s);
// Every subtree's leaf set is an interval of consecutive labels, which is
// equivalent to a crossing-free drawing with leaves 1..n left to right.
bool is_order_planar(const TreeShape& s);

enum class PositiveTest {
  kFan = 1,               // M_w acyclic under the orientation o(pi)
  kTriangleInitials = 2,  // every triangle's maximum met on both sides
  kBranching = 3,         // no middle leaf (in pi order) branching off first
  kPlanarDrawing = 4,     // drawing with leaves in pi order exists
};

// Is w in the positive Bergman fan for the orientation of K_n given by the
// permutation pi (edge pi_i -> pi_j for i < j)?  Requires w in the fan.
bool is_positive_point(int n_leaves, const WeightVector& w, std::span<const int> pi,
                       PositiveTest mode);

// All order-planar shapes with the identity leaf order, including the star;
// the coarse cells of the positive complex, ordered by edge contraction.
// Contracting internal edges removes exactly the corresponding non-root
// leaf intervals, so the order is bracket-set inclusion.
struct ShapePoset {
  int n_leaves = 0;
  std::vector<TreeShape> shapes;
  std::vector<std::vector<Mask>> brackets;  // sorted non-root internal leaf sets

  bool leq(int a, int b) const;
};

ShapePoset planar_shape_poset(int n_leaves);

// Shapes obtained by contracting one internal edge (an internal non-root
// vertex into its parent).
std::vector<TreeShape> single_contractions(const TreeShape& s);

// Faces of the associahedron on n ordered leaves, enumerated independently
// as the sets of pairwise compatible brackets: intervals of length 2..n-1,
// compatible = nested or disjoint.  Faces are ordered by reverse inclusion.
std::vector<std::vector<Mask>> associahedron_face_sets(int n_leaves);

std::vector<TreeShape> planar_shapes(int n_leaves);
std::vector<TreeShape> planar_binary_shapes(int n_leaves);
// All leaf-labeled binary shapes, (2n-3)!! of them.
std::vector<TreeShape> labeled_binary_shapes(int n_leaves);

// Binary tree on the internal vertices of a binary shape (left/right from
// the planar order; a child that was a leaf is dropped).
struct BinaryTree {
  struct Node {
    int left = -1;
    int right = -1;
  };
  std::vector<Node> nodes;
  int root = -1;

  int size() const { return static_cast<int>(nodes.size()); }
};

BinaryTree internal_tree(const TreeShape& binary_shape);

// (n-1)! / prod_v d(v) where d(v) counts internal descendants including v;
// the number of full-dimensional fine cells in the shape's coarse cell.
long long hook_count(const TreeShape& binary_shape);

// Labelings of the vertices with 1..size such that every parent's label is
// smaller than its children's; the brute-force oracle for hook_count.
std::vector<std::vector<int>> increasing_labelings(const BinaryTree& t);

struct LabeledBinaryTree {
  BinaryTree shape;
  std::vector<int> labels;  // labels[v]
};

// pi(T) = pi(left) label(root) pi(right), recursively.
std::vector<int> permutation_of_tree(const LabeledBinaryTree& t);
// Inverse: split the word at its minimum.
LabeledBinaryTree tree_of_permutation(std::span<const int> pi);

struct CoveringReport {
  int n_vertices = 0;
  long long full_dimensional_cells = 0;  // by chain enumeration
  long long expected_multiplicity = 0;   // 2^(n-1)
  std::vector<long long> cell_multiplicities;
  bool multiplicity_uniform = false;
  bool first_leaf_permutations_cover = false;  // pi with pi_1 = 1 suffice
  long long count_identity = 0;                // n!(n-1)!/2^(n-1)
  bool count_identity_holds = false;
};

// For every full-dimensional fine cell of the Bergman complex of K_n, the
// number of permutations whose positive complex contains it.
CoveringReport covering_statistics(int n_vertices);

}  // namespace bergman
