#pragma once

#include <span>
#include <vector>

#include "bergman/oriented_matroid.hpp"

namespace bergman {

// Exact rational weight per ground-set element; entries[e-1] weights e.
struct WeightVector {
  std::vector<Rational> entries;

  int size() const { return static_cast<int>(entries.size()); }
  const Rational& of(int element) const { return entries[element - 1]; }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

// The combinatorial type of a weight vector: the chain of its lower level
// sets, ∅ = F_0 ⊂ F_1 ⊂ ... ⊂ F_k ⊂ F_{k+1} = [n].  Only the proper part
// F_1..F_k is stored; it is empty for constant weights.
class Flag {
 public:
  Flag(int ground_size, std::vector<Mask> proper_chain);

  int ground_size() const { return n_; }
  const std::vector<Mask>& proper() const { return proper_; }
  int proper_length() const { return static_cast<int>(proper_.size()); }
  std::vector<Mask> full_chain() const;

  friend bool operator==(const Flag&, const Flag&) = default;

 private:
  int n_;
  std::vector<Mask> proper_;
};

bool flag_less(const Flag& a, const Flag& b);

Flag flag_of(const WeightVector& w);

// Canonical weight in the flag's class: elements of F_{i+1} \ F_i get weight i.
WeightVector representative_weight(const Flag& f);

// Restriction of the circuit to its maximum-weight elements, signs kept.
SignedSet init_circuit(const SignedSet& c, const WeightVector& w);

// The initial oriented matroid M_w: inclusion-minimal initial parts of the
// circuits of m.  Depends only on flag_of(w).
OrientedMatroid initial_matroid(const OrientedMatroid& m, const WeightVector& w);
OrientedMatroid initial_matroid(const OrientedMatroid& m, const Flag& f);

// Bases of m of minimal total weight, by direct enumeration.  Kept
// independent of initial_matroid so the two routes can be compared.
std::vector<Mask> min_weight_bases(const OrientedMatroid& m, const WeightVector& w);

enum class FlagTest {
  kInitialMatroid = 1,   // loop-freeness (valid) / acyclicity (positive) of M_F
  kCircuitInitials = 2,  // per-circuit condition on init_w(C)
  kFlatsChain = 3,       // every chain member is a (positive) flat
};

// The three equivalent characterizations of a valid flag (M_F loop-free).
bool is_valid_flag(const OrientedMatroid& m, const Flag& f, FlagTest mode);

// The three equivalent characterizations of a positive flag (M_F acyclic).
bool is_positive_flag(const OrientedMatroid& m, const Flag& f, FlagTest mode);

bool in_bergman_fan(const OrientedMatroid& m, const WeightVector& w);
bool in_positive_bergman_fan(const OrientedMatroid& m, const WeightVector& w);

// Every flag on {1..n}, i.e. every ordered set partition.  Exhaustive-test
// helper; 4683 flags at n = 6.
std::vector<Flag> all_flags(int n);

}  // namespace bergman
