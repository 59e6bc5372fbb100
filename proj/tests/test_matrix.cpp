#include <algorithm>
#include <random>

#include "doctest.h"

#include "bergman/matrix.hpp"
#include "bergman/tree_space.hpp"
#include "test_support.hpp"

using namespace bergman;
using namespace bergman::testsupport;

namespace {

RationalMatrix from_ints(int cols, std::vector<std::vector<long>> rows) {
  RationalMatrix a;
  a.cols = cols;
  for (const auto& row : rows) {
    std::vector<Rational> r;
    for (long v : row) r.push_back(Rational(v));
    a.rows.push_back(std::move(r));
  }
  return a;
}

// Vertex-edge incidence matrix of K_n oriented i -> j (tail -1, head +1).
RationalMatrix k4_incidence() {
  RationalMatrix a;
  a.cols = 6;
  a.rows.assign(4, std::vector<Rational>(6, Rational(0)));
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      int e = edge_index(4, i, j);
      a.rows[i - 1][e - 1] = Rational(-1);
      a.rows[j - 1][e - 1] = Rational(1);
    }
  }
  return a;
}

// Signed cycle-edge incidence matrix of the oriented K_4: one row per cycle.
RationalMatrix k4_cycle_matrix() {
  RationalMatrix a;
  a.cols = 6;
  for (const SignedSet& c : complete_graph_matroid(4).circuits()) {
    std::vector<Rational> row(6, Rational(0));
    for (int e : elements_of(c.pos())) row[e - 1] = Rational(1);
    for (int e : elements_of(c.neg())) row[e - 1] = Rational(-1);
    a.rows.push_back(std::move(row));
  }
  return a;
}

OrientedMatroid relabel(const OrientedMatroid& m, const std::vector<int>& p, Mask flip) {
  std::vector<SignedSet> out;
  for (const SignedSet& c : m.circuits()) {
    Mask pos = 0;
    Mask neg = 0;
    for (int e : elements_of(c.pos())) pos |= Mask{1} << (p[e - 1] - 1);
    for (int e : elements_of(c.neg())) neg |= Mask{1} << (p[e - 1] - 1);
    Mask npos = (pos & ~flip) | (neg & flip);
    Mask nneg = (neg & ~flip) | (pos & flip);
    out.emplace_back(m.ground_size(), npos, nneg);
  }
  return OrientedMatroid(m.ground_size(), std::move(out));
}

}  // namespace

TEST_CASE("single row (1,-1) gives one circuit") {
  OrientedMatroid m = circuits_from_matrix(from_ints(2, {{1, -1}}));
  REQUIRE(m.circuits().size() == 1);
  CHECK(m.circuits().front() == SignedSet::from_elements(2, std::vector<int>{1}, std::vector<int>{2}));
}

TEST_CASE("identity matrix: full row space makes every element a loop") {
  OrientedMatroid m = circuits_from_matrix(from_ints(2, {{1, 0}, {0, 1}}));
  REQUIRE(m.circuits().size() == 2);
  CHECK(loops(m) == full_mask(2));
}

TEST_CASE("zero matrix gives the free matroid") {
  OrientedMatroid m = circuits_from_matrix(from_ints(3, {{0, 0, 0}, {0, 0, 0}}));
  CHECK(m.circuits().empty());
  CHECK(matrix_rank(from_ints(3, {{0, 0, 0}})) == 0);
}

TEST_CASE("cycle-space matrix of the oriented K_4 recovers the graphic matroid") {
  OrientedMatroid m = circuits_from_matrix(k4_cycle_matrix());
  CHECK(m == complete_graph_matroid(4));
  CHECK(validate_circuits(m.circuits()).passed);
  CHECK(matrix_rank(k4_cycle_matrix()) == 3);
}

TEST_CASE("row operations do not change the circuits") {
  std::mt19937 rng(2718);
  RationalMatrix a = k4_cycle_matrix();
  OrientedMatroid reference = circuits_from_matrix(a);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<size_t> pick(0, a.rows.size() - 1);
  for (int trial = 0; trial < 20; ++trial) {
    RationalMatrix b = a;
    for (int step = 0; step < 8; ++step) {
      size_t i = pick(rng);
      size_t j = pick(rng);
      if (i == j) {
        for (Rational& q : b.rows[i]) q *= Rational(3, 2);
      } else {
        Rational c(coeff(rng));
        for (int col = 0; col < b.cols; ++col) b.rows[i][col] += c * b.rows[j][col];
      }
    }
    CHECK(circuits_from_matrix(b) == reference);
  }
}

TEST_CASE("example numbering equals the lexicographic numbering, found by search") {
  OrientedMatroid k4 = complete_graph_matroid(4);
  OrientedMatroid ex = example_matroid();
  std::vector<std::vector<int>> matches;
  std::vector<int> p = {1, 2, 3, 4, 5, 6};
  do {
    if (relabel(k4, p, 0) == ex) matches.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  // The identity, plus the relabeling induced by reversing the vertex order
  // (which negates every circuit and so fixes the circuit set).
  REQUIRE(matches.size() == 2);
  CHECK(matches[0] == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(matches[1] == std::vector<int>{6, 5, 3, 4, 2, 1});
}

TEST_CASE("vertex-edge incidence matrix gives the bond matroid, dual-isomorphic to the cycles") {
  OrientedMatroid bond = circuits_from_matrix(k4_incidence());
  CHECK(bond.circuits().size() == 7);
  CHECK(!is_acyclic(bond));  // a vertex star is an all-one-sign bond

  // K_4 is its own planar dual, so a relabeling plus a reorientation carries
  // the bonds onto the cycles.  Pinned from the search below.
  std::vector<int> pinned_perm = {1, 2, 4, 3, 5, 6};
  Mask pinned_flip = mask_of({2, 5}, 6);
  OrientedMatroid k4 = complete_graph_matroid(4);
  CHECK(relabel(bond, pinned_perm, pinned_flip) == k4);

  std::vector<int> p = {1, 2, 3, 4, 5, 6};
  bool found_pinned = false;
  do {
    for (Mask flip = 0; flip < 64; ++flip) {
      if (relabel(bond, p, flip) == k4 && p == pinned_perm && flip == pinned_flip) {
        found_pinned = true;
      }
    }
  } while (std::next_permutation(p.begin(), p.end()));
  CHECK(found_pinned);
}

TEST_CASE("membership pipeline for the cycle-space matrix") {
  OrientedMatroid m = circuits_from_matrix(k4_cycle_matrix());
  CHECK(in_positive_bergman_fan(m, example_weights()));
  WeightVector constant;
  constant.entries.assign(6, Rational(5));
  CHECK(in_positive_bergman_fan(m, constant));
}

TEST_CASE("rational matrices with denominators") {
  RationalMatrix a;
  a.cols = 3;
  a.rows = {{Rational(1, 2), Rational(-1, 3), Rational(0)}};
  OrientedMatroid m = circuits_from_matrix(a);
  REQUIRE(m.circuits().size() == 1);
  CHECK(m.circuits().front() ==
        SignedSet::from_elements(3, std::vector<int>{1}, std::vector<int>{2}));
}

TEST_CASE("matrix validation") {
  RationalMatrix bad;
  bad.cols = 2;
  bad.rows = {{Rational(1)}};
  CHECK_THROWS_AS(circuits_from_matrix(bad), std::invalid_argument);
}
