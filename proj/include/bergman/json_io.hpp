#pragma once

#include <string>

#include <json.hpp>

#include "bergman/complex.hpp"
#include "bergman/matrix.hpp"
#include "bergman/tree_space.hpp"

// Wire formats.  Rationals travel as strings "p/q" in lowest terms with
// q > 0 ("p" when q = 1); sets as sorted 1-based element arrays.  Writers
// emit canonical forms so identical inputs serialize byte-identically.
namespace bergman::io {

using json = nlohmann::json;

Rational parse_rational(const std::string& s);
std::string format_rational(const Rational& q);

// {"n": 6, "circuits": [{"pos": [1,4], "neg": [2]}, ...]}
OrientedMatroid parse_circuits(const json& j);
json circuits_json(const OrientedMatroid& m);
json signed_sets_json(const std::vector<SignedSet>& sets);

// {"w": ["1", "1/2", ...]}
WeightVector parse_weights(const json& j);
json weights_json(const WeightVector& w);

// {"chain": [[6], [1,6]]} — the proper part only
Flag parse_flag(const json& j, int ground_size);
json flag_json(const Flag& f);

// {"n": 6, "rows": [["1","-1","0","0","0","0"], ...]}
RationalMatrix parse_matrix(const json& j);
json matrix_json(const RationalMatrix& a);

// {"h": "1", "root": {"height": "0", "children": [{"leaf": 1}, ...]}}
EquidistantTree parse_tree(const json& j);
json tree_json(const EquidistantTree& t);

// Same node structure without heights: {"children": [{"leaf": 1}, ...]}
TreeShape parse_shape(const json& j);
json shape_json(const TreeShape& s);

json validation_json(const ValidationReport& r);
json summary_json(const CellComplexSummary& s, bool include_coarse);
json labeled_tree_json(const LabeledBinaryTree& t);
json covering_json(const CoveringReport& r);

}  // namespace bergman::io
