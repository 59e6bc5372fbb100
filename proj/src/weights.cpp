#include "bergman/weights.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "internal.hpp"

namespace bergman {

Flag::Flag(int ground_size, std::vector<Mask> proper_chain)
    : n_(ground_size), proper_(std::move(proper_chain)) {
  Mask full = full_mask(ground_size);
  Mask prev = 0;
  for (Mask f : proper_) {
    if (f == 0 || f == full || (f & ~full) != 0) {
      throw std::invalid_argument("flag member " + format_subset(f) +
                                  " must lie strictly between ∅ and the ground set");
    }
    if (!is_subset(prev, f) || prev == f) {
      throw std::invalid_argument("flag chain is not strictly increasing at " + format_subset(f));
    }
    prev = f;
  }
}

std::vector<Mask> Flag::full_chain() const {
  std::vector<Mask> out;
  out.reserve(proper_.size() + 2);
  out.push_back(0);
  out.insert(out.end(), proper_.begin(), proper_.end());
  out.push_back(full_mask(n_));
  return out;
}

bool flag_less(const Flag& a, const Flag& b) {
  if (a.ground_size() != b.ground_size()) return a.ground_size() < b.ground_size();
  return std::lexicographical_compare(a.proper().begin(), a.proper().end(), b.proper().begin(),
                                      b.proper().end(), set_lex_less);
}

Flag flag_of(const WeightVector& w) {
  int n = w.size();
  std::vector<Rational> values(w.entries);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  std::vector<Mask> proper;
  Mask acc = 0;
  for (size_t level = 0; level + 1 < values.size(); ++level) {
    for (int e = 1; e <= n; ++e) {
      if (w.of(e) == values[level]) acc |= Mask{1} << (e - 1);
    }
    proper.push_back(acc);
  }
  return Flag(n, std::move(proper));
}

WeightVector representative_weight(const Flag& f) {
  int n = f.ground_size();
  WeightVector w;
  w.entries.assign(n, Rational(0));
  std::vector<Mask> chain = f.full_chain();
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    Mask block = chain[i + 1] & ~chain[i];
    for (int e : elements_of(block)) w.entries[e - 1] = Rational(static_cast<long>(i));
  }
  return w;
}

SignedSet init_circuit(const SignedSet& c, const WeightVector& w) {
  if (c.is_zero()) throw std::invalid_argument("init_circuit: empty support");
  std::vector<int> support = elements_of(c.support());
  const Rational* max = &w.of(support.front());
  for (int e : support) {
    if (w.of(e) > *max) max = &w.of(e);
  }
  Mask keep = 0;
  for (int e : support) {
    if (w.of(e) == *max) keep |= Mask{1} << (e - 1);
  }
  return c.restricted_to(keep);
}

OrientedMatroid initial_matroid(const OrientedMatroid& m, const WeightVector& w) {
  if (w.size() != m.ground_size()) {
    throw std::invalid_argument("weight vector length does not match ground size");
  }
  std::vector<SignedSet> inits;
  inits.reserve(m.circuits().size());
  for (const SignedSet& c : m.circuits()) inits.push_back(init_circuit(c, w));
  return OrientedMatroid(m.ground_size(),
                         internal::minimal_support_circuits(inits, "initial_matroid"));
}

OrientedMatroid initial_matroid(const OrientedMatroid& m, const Flag& f) {
  return initial_matroid(m, representative_weight(f));
}

std::vector<Mask> min_weight_bases(const OrientedMatroid& m, const WeightVector& w) {
  if (w.size() != m.ground_size()) {
    throw std::invalid_argument("weight vector length does not match ground size");
  }
  std::vector<Mask> all = bases(m);
  std::vector<Mask> out;
  Rational best;
  bool have = false;
  for (Mask b : all) {
    Rational total(0);
    for (int e : elements_of(b)) total += w.of(e);
    if (!have || total < best) {
      best = total;
      out.clear();
      have = true;
    }
    if (total == best) out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_valid_flag(const OrientedMatroid& m, const Flag& f, FlagTest mode) {
  switch (mode) {
    case FlagTest::kInitialMatroid:
      return !has_loops(initial_matroid(m, f));
    case FlagTest::kCircuitInitials: {
      WeightVector w = representative_weight(f);
      for (const SignedSet& c : m.circuits()) {
        if (std::popcount(init_circuit(c, w).support()) < 2) return false;
      }
      return true;
    }
    case FlagTest::kFlatsChain: {
      for (Mask member : f.full_chain()) {
        if (!is_flat(m, member)) return false;
      }
      return true;
    }
  }
  throw std::invalid_argument("unknown flag test mode");
}

bool is_positive_flag(const OrientedMatroid& m, const Flag& f, FlagTest mode) {
  switch (mode) {
    case FlagTest::kInitialMatroid:
      return is_acyclic(initial_matroid(m, f));
    case FlagTest::kCircuitInitials: {
      WeightVector w = representative_weight(f);
      for (const SignedSet& c : m.circuits()) {
        SignedSet init = init_circuit(c, w);
        if (init.pos() == 0 || init.neg() == 0) return false;
      }
      return true;
    }
    case FlagTest::kFlatsChain: {
      std::vector<Mask> pf = positive_flats(m);
      for (Mask member : f.full_chain()) {
        if (!std::binary_search(pf.begin(), pf.end(), member, [](Mask a, Mask b) {
              if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
              return set_lex_less(a, b);
            })) {
          return false;
        }
      }
      return true;
    }
  }
  throw std::invalid_argument("unknown flag test mode");
}

bool in_bergman_fan(const OrientedMatroid& m, const WeightVector& w) {
  return !has_loops(initial_matroid(m, w));
}

bool in_positive_bergman_fan(const OrientedMatroid& m, const WeightVector& w) {
  return is_acyclic(initial_matroid(m, w));
}

namespace {

void enumerate_flags(int n, Mask remaining, std::vector<Mask>& acc, std::vector<Flag>& out) {
  if (remaining == 0) {
    // The last accumulated prefix equals [n]; drop it to form the proper part.
    std::vector<Mask> proper(acc.begin(), acc.end() - 1);
    out.emplace_back(n, std::move(proper));
    return;
  }
  Mask base = acc.empty() ? 0 : acc.back();
  for (Mask block = remaining;; block = (block - 1) & remaining) {
    if (block != 0) {
      acc.push_back(base | block);
      enumerate_flags(n, remaining & ~block, acc, out);
      acc.pop_back();
    }
    if (block == 0) break;
  }
}

}  // namespace

std::vector<Flag> all_flags(int n) {
  check_ground_size(n, kCovectorGroundCap, "all_flags");
  std::vector<Flag> out;
  std::vector<Mask> acc;
  enumerate_flags(n, full_mask(n), acc, out);
  std::sort(out.begin(), out.end(), flag_less);
  return out;
}

}  // namespace bergman
