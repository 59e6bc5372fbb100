#pragma once

#include <span>
#include <string>

#include "bergman/types.hpp"

namespace bergman {

// A signed subset of {1..n}: disjoint positive and negative parts.  Both
// circuits and covectors are represented this way.
class SignedSet {
 public:
  SignedSet(int ground_size, Mask pos, Mask neg);
  static SignedSet from_elements(int ground_size, std::span<const int> pos,
                                 std::span<const int> neg);

  int ground_size() const { return n_; }
  Mask pos() const { return pos_; }
  Mask neg() const { return neg_; }
  Mask support() const { return pos_ | neg_; }
  Mask zero_set() const { return full_mask(n_) & ~support(); }
  bool is_zero() const { return support() == 0; }
  int sign_of(int element) const;

  SignedSet negated() const { return SignedSet(n_, neg_, pos_); }

  // The representative of {X, -X} whose (pos, neg) encoding is the smaller
  // one, comparing sorted element lists lexicographically.
  SignedSet canonical() const { return set_lex_less(neg_, pos_) ? negated() : *this; }

  SignedSet restricted_to(Mask keep) const { return SignedSet(n_, pos_ & keep, neg_ & keep); }

  friend bool operator==(const SignedSet&, const SignedSet&) = default;

 private:
  int n_;
  Mask pos_;
  Mask neg_;
};

// Deterministic listing order: support size, then support, then signs.
bool signed_set_less(const SignedSet& a, const SignedSet& b);

// Sign-vector orthogonality: the agreement set (X+ ∩ Y+) ∪ (X- ∩ Y-) and the
// disagreement set (X+ ∩ Y-) ∪ (X- ∩ Y+) are both empty or both non-empty.
bool is_orthogonal(const SignedSet& x, const SignedSet& y);

std::string format_signed_set(const SignedSet& s);

}  // namespace bergman
