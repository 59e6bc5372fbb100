#include "bergman/json_io.hpp"

#include <algorithm>

namespace bergman::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) fail(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const json& v : j) {
    if (!v.is_number_integer()) fail(std::string(what) + " must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

json subset_json(Mask m) {
  json out = json::array();
  for (int e : elements_of(m)) out.push_back(e);
  return out;
}

}  // namespace

Rational parse_rational(const std::string& s) {
  if (s.empty()) fail("empty rational");
  size_t slash = s.find('/');
  std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
  auto digits = [](const std::string& t, bool sign_ok) {
    if (t.empty()) return false;
    size_t i = (sign_ok && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    }
    return true;
  };
  if (!digits(num, true) || !digits(den, true)) fail("malformed rational \"" + s + "\"");
  Rational q;
  if (q.set_str(num + "/" + den, 10) != 0) fail("malformed rational \"" + s + "\"");
  if (q.get_den() == 0) fail("zero denominator in \"" + s + "\"");
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

OrientedMatroid parse_circuits(const json& j) {
  int n = int_field(j, "n");
  if (n < 0 || n > 31) fail("ground size out of range");
  const json& list = field(j, "circuits");
  if (!list.is_array()) fail("\"circuits\" must be an array");
  std::vector<SignedSet> circuits;
  for (const json& c : list) {
    std::vector<int> pos = int_list(field(c, "pos"), "pos");
    std::vector<int> neg = int_list(field(c, "neg"), "neg");
    circuits.push_back(SignedSet(n, mask_of(pos, n), mask_of(neg, n)));
  }
  return OrientedMatroid(n, std::move(circuits));
}

json signed_sets_json(const std::vector<SignedSet>& sets) {
  json out = json::array();
  for (const SignedSet& s : sets) {
    out.push_back(json{{"pos", subset_json(s.pos())}, {"neg", subset_json(s.neg())}});
  }
  return out;
}

json circuits_json(const OrientedMatroid& m) {
  return json{{"n", m.ground_size()}, {"circuits", signed_sets_json(m.circuits())}};
}

WeightVector parse_weights(const json& j) {
  const json& list = field(j, "w");
  if (!list.is_array()) fail("\"w\" must be an array");
  WeightVector w;
  for (const json& v : list) {
    if (!v.is_string()) fail("weights must be rational strings");
    w.entries.push_back(parse_rational(v.get<std::string>()));
  }
  return w;
}

json weights_json(const WeightVector& w) {
  json list = json::array();
  for (const Rational& q : w.entries) list.push_back(format_rational(q));
  return json{{"w", list}};
}

Flag parse_flag(const json& j, int ground_size) {
  const json& chain = field(j, "chain");
  if (!chain.is_array()) fail("\"chain\" must be an array");
  std::vector<Mask> proper;
  for (const json& member : chain) {
    proper.push_back(mask_of(int_list(member, "chain member"), ground_size));
  }
  return Flag(ground_size, std::move(proper));
}

json flag_json(const Flag& f) {
  json chain = json::array();
  for (Mask m : f.proper()) chain.push_back(subset_json(m));
  return json{{"chain", chain}};
}

RationalMatrix parse_matrix(const json& j) {
  RationalMatrix a;
  a.cols = int_field(j, "n");
  const json& rows = field(j, "rows");
  if (!rows.is_array()) fail("\"rows\" must be an array");
  for (const json& row : rows) {
    if (!row.is_array()) fail("matrix rows must be arrays");
    std::vector<Rational> r;
    for (const json& v : row) {
      if (!v.is_string()) fail("matrix entries must be rational strings");
      r.push_back(parse_rational(v.get<std::string>()));
    }
    if (static_cast<int>(r.size()) != a.cols) fail("matrix row length does not match \"n\"");
    a.rows.push_back(std::move(r));
  }
  return a;
}

json matrix_json(const RationalMatrix& a) {
  json rows = json::array();
  for (const auto& row : a.rows) {
    json r = json::array();
    for (const Rational& v : row) r.push_back(format_rational(v));
    rows.push_back(r);
  }
  return json{{"n", a.cols}, {"rows", rows}};
}

namespace {

int parse_tree_node(const json& j, std::vector<EquidistantTree::Node>& nodes,
                    const Rational& leaf_height) {
  if (j.contains("leaf")) {
    EquidistantTree::Node node;
    node.leaf = field(j, "leaf").get<int>();
    node.height = leaf_height;
    nodes.push_back(std::move(node));
    return static_cast<int>(nodes.size()) - 1;
  }
  EquidistantTree::Node node;
  if (!field(j, "height").is_string()) fail("node heights must be rational strings");
  node.height = parse_rational(field(j, "height").get<std::string>());
  const json& children = field(j, "children");
  if (!children.is_array()) fail("\"children\" must be an array");
  int idx = static_cast<int>(nodes.size());
  nodes.push_back(std::move(node));
  for (const json& c : children) {
    int child = parse_tree_node(c, nodes, leaf_height);
    nodes[idx].children.push_back(child);
  }
  return idx;
}

int count_leaves(const std::vector<EquidistantTree::Node>& nodes) {
  int n = 0;
  for (const auto& node : nodes) {
    if (node.leaf > 0) ++n;
  }
  return n;
}

}  // namespace

EquidistantTree parse_tree(const json& j) {
  if (!field(j, "h").is_string()) fail("\"h\" must be a rational string");
  Rational leaf_height = parse_rational(field(j, "h").get<std::string>());
  std::vector<EquidistantTree::Node> nodes;
  int root = parse_tree_node(field(j, "root"), nodes, leaf_height);
  return EquidistantTree(count_leaves(nodes), leaf_height, std::move(nodes), root);
}

namespace {

json tree_node_json(const EquidistantTree& t, int v) {
  const auto& node = t.nodes()[v];
  if (node.leaf > 0) return json{{"leaf", node.leaf}};
  json children = json::array();
  for (int c : node.children) children.push_back(tree_node_json(t, c));
  return json{{"height", format_rational(node.height)}, {"children", children}};
}

}  // namespace

json tree_json(const EquidistantTree& t) {
  return json{{"h", format_rational(t.leaf_height())}, {"root", tree_node_json(t, t.root())}};
}

TreeShape parse_shape(const json& j) {
  if (j.contains("leaf")) {
    if (!field(j, "leaf").is_number_integer()) fail("\"leaf\" must be an integer");
    return make_leaf(field(j, "leaf").get<int>());
  }
  const json& children = field(j, "children");
  if (!children.is_array()) fail("\"children\" must be an array");
  std::vector<TreeShape> parts;
  for (const json& c : children) parts.push_back(parse_shape(c));
  return make_internal(std::move(parts));
}

json shape_json(const TreeShape& s) {
  if (s.is_leaf()) return json{{"leaf", s.leaf}};
  json children = json::array();
  for (const TreeShape& c : s.children) children.push_back(shape_json(c));
  return json{{"children", children}};
}

json validation_json(const ValidationReport& r) {
  json violations = json::array();
  for (const AxiomViolation& v : r.violations) {
    violations.push_back(json{{"axiom", v.axiom},
                              {"witnesses", signed_sets_json(v.witnesses)},
                              {"detail", v.detail}});
  }
  return json{{"passed", r.passed}, {"violations", violations}};
}

json summary_json(const CellComplexSummary& s, bool include_coarse) {
  json out;
  out["f_vector"] = s.f_vector;
  out["euler_char"] = euler_characteristic(s);
  out["full_dimensional_fine"] = s.full_dimensional_fine;
  if (include_coarse) {
    json cells = json::array();
    long long full_dim = 0;
    for (const CoarseCell& cell : s.coarse_cells) {
      json flags = json::array();
      for (const Flag& f : cell.members) flags.push_back(flag_json(f));
      cells.push_back(json{{"mw_circuits", signed_sets_json(cell.initial_matroid.circuits())},
                           {"flags", flags},
                           {"full_dimensional", cell.full_dimensional}});
      if (cell.full_dimensional) ++full_dim;
    }
    out["coarse_cells"] = cells;
    out["full_dimensional_coarse"] = full_dim;
  }
  return out;
}

namespace {

json labeled_node_json(const LabeledBinaryTree& t, int v) {
  json out{{"label", t.labels[v]}};
  if (t.shape.nodes[v].left >= 0) out["left"] = labeled_node_json(t, t.shape.nodes[v].left);
  if (t.shape.nodes[v].right >= 0) out["right"] = labeled_node_json(t, t.shape.nodes[v].right);
  return out;
}

}  // namespace

json labeled_tree_json(const LabeledBinaryTree& t) {
  if (t.shape.root < 0) return json(nullptr);
  return labeled_node_json(t, t.shape.root);
}

json covering_json(const CoveringReport& r) {
  return json{{"n", r.n_vertices},
              {"full_dimensional_cells", r.full_dimensional_cells},
              {"expected_multiplicity", r.expected_multiplicity},
              {"multiplicity_uniform", r.multiplicity_uniform},
              {"first_leaf_permutations_cover", r.first_leaf_permutations_cover},
              {"count_identity", r.count_identity},
              {"count_identity_holds", r.count_identity_holds}};
}

}  // namespace bergman::io
