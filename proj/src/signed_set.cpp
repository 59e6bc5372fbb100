#include "bergman/signed_set.hpp"

#include <bit>
#include <vector>

namespace bergman {

SignedSet::SignedSet(int ground_size, Mask pos, Mask neg) : n_(ground_size), pos_(pos), neg_(neg) {
  Mask full = full_mask(ground_size);
  if ((pos & ~full) != 0 || (neg & ~full) != 0) {
    throw std::invalid_argument("signed set exceeds ground set of size " + std::to_string(ground_size));
  }
  if ((pos & neg) != 0) {
    throw std::invalid_argument("positive and negative parts overlap on " + format_subset(pos & neg));
  }
}

SignedSet SignedSet::from_elements(int ground_size, std::span<const int> pos,
                                   std::span<const int> neg) {
  return SignedSet(ground_size, mask_of({pos.begin(), pos.end()}, ground_size),
                   mask_of({neg.begin(), neg.end()}, ground_size));
}

int SignedSet::sign_of(int element) const {
  Mask bit = Mask{1} << (element - 1);
  if (pos_ & bit) return 1;
  if (neg_ & bit) return -1;
  return 0;
}

bool signed_set_less(const SignedSet& a, const SignedSet& b) {
  int ca = std::popcount(a.support());
  int cb = std::popcount(b.support());
  if (ca != cb) return ca < cb;
  if (a.support() != b.support()) return set_lex_less(a.support(), b.support());
  if (a.pos() != b.pos()) return set_lex_less(a.pos(), b.pos());
  return false;
}

bool is_orthogonal(const SignedSet& x, const SignedSet& y) {
  bool agree = ((x.pos() & y.pos()) | (x.neg() & y.neg())) != 0;
  bool disagree = ((x.pos() & y.neg()) | (x.neg() & y.pos())) != 0;
  return agree == disagree;
}

std::string format_signed_set(const SignedSet& s) {
  return "+" + format_subset(s.pos()) + "-" + format_subset(s.neg());
}

}  // namespace bergman
