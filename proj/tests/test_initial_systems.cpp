#include <algorithm>
#include <bit>
#include <random>

#include "doctest.h"

#include "bergman/weights.hpp"
#include "test_support.hpp"

using namespace bergman;
using namespace bergman::testsupport;

namespace {

WeightVector wv(std::vector<long> values) {
  WeightVector w;
  for (long v : values) w.entries.push_back(Rational(v));
  return w;
}

SignedSet ss(int n, std::vector<int> pos, std::vector<int> neg) {
  return SignedSet::from_elements(n, pos, neg);
}

}  // namespace

TEST_CASE("flag_of groups equal weights in increasing order") {
  Flag f = flag_of(example_weights());
  CHECK(f.proper() == std::vector<Mask>{mask_of({6}, 6)});

  CHECK(flag_of(wv({5, 5, 5})).proper().empty());

  Flag g = flag_of(wv({3, 1, 2}));
  CHECK(g.proper() == std::vector<Mask>{mask_of({2}, 3), mask_of({2, 3}, 3)});
}

TEST_CASE("representative_weight is a section of flag_of") {
  Flag f(6, {mask_of({6}, 6)});
  WeightVector w = representative_weight(f);
  CHECK(w.entries == wv({1, 1, 1, 1, 1, 0}).entries);

  CHECK(representative_weight(Flag(3, {})).entries == wv({0, 0, 0}).entries);
  CHECK(representative_weight(Flag(3, {mask_of({2}, 3), mask_of({2, 3}, 3)})).entries ==
        wv({2, 0, 1}).entries);

  for (const Flag& flag : all_flags(4)) {
    CHECK(flag_of(representative_weight(flag)) == flag);
  }
}

TEST_CASE("flag construction rejects bad chains") {
  CHECK_THROWS_AS(Flag(3, {mask_of({1, 2, 3}, 3)}), std::invalid_argument);
  CHECK_THROWS_AS(Flag(3, std::vector<Mask>{0}), std::invalid_argument);
  CHECK_THROWS_AS(Flag(3, {mask_of({2}, 3), mask_of({1, 3}, 3)}), std::invalid_argument);
}

TEST_CASE("init_circuit keeps the maximum-weight part") {
  WeightVector w = example_weights();
  CHECK(init_circuit(ss(6, {2, 6}, {3}), w) == ss(6, {2}, {3}));
  CHECK(init_circuit(ss(6, {2, 5}, {3, 4}), w) == ss(6, {2, 5}, {3, 4}));
  CHECK(init_circuit(ss(6, {1, 4}, {2}), wv({7, 7, 7, 7, 7, 7})) == ss(6, {1, 4}, {2}));
}

TEST_CASE("initial matroid of the running example") {
  OrientedMatroid m = example_matroid();
  OrientedMatroid mw = initial_matroid(m, example_weights());
  CHECK(mw == example_initial_matroid());
  CHECK(validate_circuits(mw.circuits()).passed);

  // Constant weights leave the matroid unchanged.
  CHECK(initial_matroid(m, wv({2, 2, 2, 2, 2, 2})) == m);

  // Generic weights give the unique minimum basis.
  WeightVector generic = wv({1, 2, 4, 8, 16, 32});
  auto mwb = bases(initial_matroid(m, generic));
  auto minb = min_weight_bases(m, generic);
  REQUIRE(minb.size() == 1);
  CHECK(mwb == minb);
}

TEST_CASE("initial matroid depends only on the flag") {
  OrientedMatroid m = example_matroid();
  std::mt19937 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    WeightVector w = random_weights(rng, 6);
    OrientedMatroid a = initial_matroid(m, w);
    OrientedMatroid b = initial_matroid(m, flag_of(w));
    CHECK(a == b);
  }
}

TEST_CASE("initial matroid is idempotent at the flag level") {
  OrientedMatroid m = example_matroid();
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    WeightVector w = random_weights(rng, 6);
    OrientedMatroid mw = initial_matroid(m, w);
    CHECK(initial_matroid(mw, w) == mw);
  }
}

TEST_CASE("min-weight bases of the example: trees through the cheap edge") {
  OrientedMatroid m = example_matroid();
  auto mb = min_weight_bases(m, example_weights());
  CHECK(mb.size() == 8);  // spanning trees of K_4 through one fixed edge
  for (Mask b : mb) CHECK((b & mask_of({6}, 6)) != 0);

  CHECK(min_weight_bases(m, wv({0, 0, 0, 0, 0, 0})).size() == 16);
}

TEST_CASE("bases of the initial matroid are the min-weight bases") {
  OrientedMatroid m = example_matroid();
  for (const Flag& f : all_flags(6)) {
    WeightVector w = representative_weight(f);
    auto via_mw = bases(initial_matroid(m, w));
    auto direct = min_weight_bases(m, w);
    std::sort(via_mw.begin(), via_mw.end());
    CHECK(via_mw == direct);
  }
}

TEST_CASE("min-weight bases match on random graphic matroids") {
  std::mt19937 rng(1234);
  int done = 0;
  while (done < 100) {
    auto [m, edges] = random_graph_matroid(rng, 5);
    (void)edges;
    WeightVector w = random_weights(rng, m.ground_size());
    auto via_mw = bases(initial_matroid(m, w));
    auto direct = min_weight_bases(m, w);
    std::sort(via_mw.begin(), via_mw.end());
    CHECK(via_mw == direct);
    ++done;
  }
}

TEST_CASE("adjacent min-weight bases have equal sign products in M and M_w") {
  OrientedMatroid m = example_matroid();
  for (const Flag& f : all_flags(6)) {
    WeightVector w = representative_weight(f);
    OrientedMatroid mw = initial_matroid(m, w);
    auto minb = min_weight_bases(m, w);
    for (Mask b1 : minb) {
      for (Mask b2 : minb) {
        if (std::popcount(b1 ^ b2) != 2) continue;
        // Align the ordered tuples: shared elements first, the exchange last.
        std::vector<int> shared = elements_of(b1 & b2);
        std::vector<int> t1 = shared;
        std::vector<int> t2 = shared;
        t1.push_back(elements_of(b1 & ~b2).front());
        t2.push_back(elements_of(b2 & ~b1).front());
        CHECK(basis_sign_product(m, t1, t2) == basis_sign_product(mw, t1, t2));
      }
    }
  }
}

TEST_CASE("three modes of is_valid_flag and is_positive_flag agree exhaustively") {
  OrientedMatroid m = example_matroid();
  std::vector<Flag> flags = all_flags(6);
  CHECK(flags.size() == 4683);
  for (const Flag& f : flags) {
    bool v1 = is_valid_flag(m, f, FlagTest::kInitialMatroid);
    bool v2 = is_valid_flag(m, f, FlagTest::kCircuitInitials);
    bool v3 = is_valid_flag(m, f, FlagTest::kFlatsChain);
    CHECK(v1 == v2);
    CHECK(v2 == v3);
    bool p1 = is_positive_flag(m, f, FlagTest::kInitialMatroid);
    bool p2 = is_positive_flag(m, f, FlagTest::kCircuitInitials);
    bool p3 = is_positive_flag(m, f, FlagTest::kFlatsChain);
    CHECK(p1 == p2);
    CHECK(p2 == p3);
    // Positive flags are valid flags.
    if (p1) CHECK(v1);
  }
}

TEST_CASE("mode agreement on random flags of a K_5 subgraph matroid") {
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 60; ++trial) {
    auto [m, edges] = random_graph_matroid(rng, 5);
    (void)edges;
    Flag f = random_flag(rng, m.ground_size());
    bool v1 = is_valid_flag(m, f, FlagTest::kInitialMatroid);
    bool v2 = is_valid_flag(m, f, FlagTest::kCircuitInitials);
    bool v3 = is_valid_flag(m, f, FlagTest::kFlatsChain);
    CHECK(v1 == v2);
    CHECK(v2 == v3);
    bool p1 = is_positive_flag(m, f, FlagTest::kInitialMatroid);
    bool p2 = is_positive_flag(m, f, FlagTest::kCircuitInitials);
    bool p3 = is_positive_flag(m, f, FlagTest::kFlatsChain);
    CHECK(p1 == p2);
    CHECK(p2 == p3);
  }
}

TEST_CASE("specific flags of the example") {
  OrientedMatroid m = example_matroid();
  Flag f6(6, {mask_of({6}, 6)});
  CHECK(is_valid_flag(m, f6, FlagTest::kInitialMatroid));
  // {6} is a positive flat, and the initial matroid is acyclic.
  CHECK(is_positive_flag(m, f6, FlagTest::kInitialMatroid));
  CHECK(is_positive_flag(m, f6, FlagTest::kFlatsChain));

  // {2} is not a positive flat.
  Flag f2(6, {mask_of({2}, 6)});
  CHECK(!is_positive_flag(m, f2, FlagTest::kInitialMatroid));
  CHECK(!is_positive_flag(m, f2, FlagTest::kFlatsChain));

  // Trivial flag of an acyclic loop-free matroid.
  Flag trivial(6, {});
  CHECK(is_valid_flag(m, trivial, FlagTest::kFlatsChain));
  CHECK(is_positive_flag(m, trivial, FlagTest::kInitialMatroid));
}

TEST_CASE("fan membership") {
  OrientedMatroid m = example_matroid();
  WeightVector w = example_weights();
  CHECK(in_bergman_fan(m, w));
  CHECK(in_positive_bergman_fan(m, w));

  // A positive circuit keeps constant weights out of the positive fan.
  OrientedMatroid cyc(2, {ss(2, {1, 2}, {})});
  CHECK(!in_positive_bergman_fan(cyc, wv({0, 0})));
  CHECK(in_bergman_fan(cyc, wv({0, 0})));

  // Lineality: shifting by a constant does not change the flag.
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 30; ++trial) {
    WeightVector a = random_weights(rng, 6);
    WeightVector b = a;
    for (Rational& q : b.entries) q += Rational(7, 3);
    CHECK(flag_of(a) == flag_of(b));
    CHECK(in_bergman_fan(m, a) == in_bergman_fan(m, b));
    CHECK(in_positive_bergman_fan(m, a) == in_positive_bergman_fan(m, b));
  }
}

TEST_CASE("loop element forces invalid flags") {
  OrientedMatroid lp(2, {ss(2, {1}, {})});
  for (const Flag& f : all_flags(2)) {
    CHECK(!is_valid_flag(lp, f, FlagTest::kInitialMatroid));
    CHECK(!is_valid_flag(lp, f, FlagTest::kCircuitInitials));
    CHECK(!is_valid_flag(lp, f, FlagTest::kFlatsChain));
  }
}
