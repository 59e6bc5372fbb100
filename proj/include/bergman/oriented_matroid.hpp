#pragma once

#include <span>
#include <string>
#include <vector>

#include "bergman/signed_set.hpp"

namespace bergman {

struct AxiomViolation {
  std::string axiom;  // "C1", "C3", "C4", "C4'"
  std::vector<SignedSet> witnesses;
  std::string detail;
};

struct ValidationReport {
  bool passed = true;
  std::vector<AxiomViolation> violations;
};

struct ValidateOptions {
  bool report_all = false;
  bool check_c4_prime = false;  // strong elimination instead of weak
};

// An oriented matroid given by signed circuits.  One canonical representative
// per {C, -C} pair is stored; the collection is logically closed under
// negation.  Construction canonicalizes, sorts and dedups but does not check
// the circuit axioms; validate_circuits does.
class OrientedMatroid {
 public:
  OrientedMatroid(int ground_size, std::vector<SignedSet> circuits);

  int ground_size() const { return n_; }
  const std::vector<SignedSet>& circuits() const { return circuits_; }

  friend bool operator==(const OrientedMatroid&, const OrientedMatroid&) = default;

 private:
  int n_;
  std::vector<SignedSet> circuits_;
};

// Total order for use as a map key (coarse cells group by initial matroid).
bool matroid_less(const OrientedMatroid& a, const OrientedMatroid& b);

// Checks C1, C3 and C4 (or C4' when requested) on the closure of the given
// collection under negation.  C2 holds by construction of the closure.
ValidationReport validate_circuits(std::span<const SignedSet> circuits, ValidateOptions opts = {});

bool has_loops(const OrientedMatroid& m);
Mask loops(const OrientedMatroid& m);

// No circuit has all its support on one side.
bool is_acyclic(const OrientedMatroid& m);

bool is_independent(const OrientedMatroid& m, Mask s);
int rank(const OrientedMatroid& m);
int rank_of(const OrientedMatroid& m, Mask s);

// All maximal circuit-support-free subsets, i.e. the independent sets of
// full rank.  2^n-bounded.
std::vector<Mask> bases(const OrientedMatroid& m);

// F is a flat iff no circuit support meets its complement in one element.
bool is_flat(const OrientedMatroid& m, Mask f);
std::vector<Mask> flats(const OrientedMatroid& m);

// All sign vectors orthogonal to every circuit; includes the zero vector.
// 3^n-bounded.
std::vector<SignedSet> covectors(const OrientedMatroid& m);

// The non-zero covectors with entries in {+, 0}.  2^n-bounded.
std::vector<SignedSet> positive_covectors(const OrientedMatroid& m);

// Zero sets of positive covectors, plus the full ground set.  The definition
// is intended for acyclic matroids but evaluates on any input.
std::vector<Mask> positive_flats(const OrientedMatroid& m);

// Independent characterization: flats F (including [n]) whose contraction
// M/F is acyclic.  Used to cross-check positive_flats.
std::vector<Mask> positive_flats_by_contraction(const OrientedMatroid& m);

struct Contraction {
  OrientedMatroid minor;
  // minor element i corresponds to original element ground_map[i-1]
  std::vector<int> ground_map;
};

// Circuits of M/S are the inclusion-minimal non-empty restrictions C \ S,
// signs inherited; the minor is re-indexed onto {1..n-|S|}.
Contraction contract(const OrientedMatroid& m, Mask s);

// Flip the signs of the given elements in every circuit.
OrientedMatroid reorient(const OrientedMatroid& m, Mask flipped);

// For ordered bases differing in exactly one position, the sign -C(e)C(f)
// where C is the circuit of m contained in B1 ∪ B2 through e and f.
int basis_sign_product(const OrientedMatroid& m, std::span<const int> b1, std::span<const int> b2);

}  // namespace bergman
