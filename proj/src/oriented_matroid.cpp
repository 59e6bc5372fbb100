#include "bergman/oriented_matroid.hpp"

#include <algorithm>
#include <bit>

#include "internal.hpp"

namespace bergman {

namespace internal {

std::vector<SignedSet> minimal_support_circuits(const std::vector<SignedSet>& candidates,
                                                const char* context) {
  std::vector<SignedSet> kept;
  for (const SignedSet& c : candidates) {
    bool minimal = true;
    for (const SignedSet& d : candidates) {
      if (d.support() != c.support() && is_subset(d.support(), c.support())) {
        minimal = false;
        break;
      }
    }
    if (minimal) kept.push_back(c.canonical());
  }
  std::sort(kept.begin(), kept.end(), signed_set_less);
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  for (size_t i = 0; i + 1 < kept.size(); ++i) {
    if (kept[i].support() == kept[i + 1].support()) {
      throw std::invalid_argument(std::string(context) +
                                  ": equal-support circuits with non-proportional signs: " +
                                  format_signed_set(kept[i]) + " vs " +
                                  format_signed_set(kept[i + 1]));
    }
  }
  return kept;
}

}  // namespace internal

namespace {

std::vector<SignedSet> canonicalize_circuits(int n, std::vector<SignedSet> circuits) {
  for (const SignedSet& c : circuits) {
    if (c.ground_size() != n) {
      throw std::invalid_argument("circuit ground size " + std::to_string(c.ground_size()) +
                                  " does not match matroid ground size " + std::to_string(n));
    }
  }
  std::vector<SignedSet> out;
  out.reserve(circuits.size());
  for (const SignedSet& c : circuits) out.push_back(c.canonical());
  std::sort(out.begin(), out.end(), signed_set_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Closure under negation, for axiom checks that quantify over all circuits.
std::vector<SignedSet> signed_closure(std::span<const SignedSet> reps) {
  std::vector<SignedSet> out;
  out.reserve(reps.size() * 2);
  for (const SignedSet& c : reps) {
    out.push_back(c);
    if (!c.is_zero()) out.push_back(c.negated());
  }
  return out;
}

}  // namespace

OrientedMatroid::OrientedMatroid(int ground_size, std::vector<SignedSet> circuits)
    : n_(ground_size), circuits_(canonicalize_circuits(ground_size, std::move(circuits))) {
  full_mask(ground_size);  // range check
}

bool matroid_less(const OrientedMatroid& a, const OrientedMatroid& b) {
  if (a.ground_size() != b.ground_size()) return a.ground_size() < b.ground_size();
  const auto& ca = a.circuits();
  const auto& cb = b.circuits();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end(),
                                      signed_set_less);
}

ValidationReport validate_circuits(std::span<const SignedSet> circuits, ValidateOptions opts) {
  ValidationReport report;
  if (circuits.empty()) return report;

  int n = circuits.front().ground_size();
  for (const SignedSet& c : circuits) {
    if (c.ground_size() != n) {
      throw std::invalid_argument("inconsistent ground sizes: " + std::to_string(n) + " vs " +
                                  std::to_string(c.ground_size()));
    }
  }

  auto add = [&](AxiomViolation v) {
    report.passed = false;
    report.violations.push_back(std::move(v));
  };
  auto done = [&] { return !report.passed && !opts.report_all; };

  std::vector<SignedSet> reps;
  for (const SignedSet& c : circuits) reps.push_back(c.canonical());
  std::sort(reps.begin(), reps.end(), signed_set_less);
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());

  // C1: the empty set is not a circuit.
  for (const SignedSet& c : reps) {
    if (c.is_zero()) {
      add({"C1", {c}, "empty signed set"});
      if (done()) return report;
    }
  }

  // C3: no circuit support properly contains another; equal supports must be
  // proportional (they collapse to one canonical representative otherwise).
  for (size_t i = 0; i < reps.size(); ++i) {
    for (size_t j = 0; j < reps.size(); ++j) {
      if (i == j) continue;
      Mask si = reps[i].support();
      Mask sj = reps[j].support();
      if (si == sj) {
        if (i < j) {
          add({"C3", {reps[i], reps[j]}, "equal supports with non-proportional signs"});
          if (done()) return report;
        }
      } else if (is_subset(si, sj)) {
        add({"C3", {reps[i], reps[j]}, "support properly contained in another circuit"});
        if (done()) return report;
      }
    }
  }

  std::vector<SignedSet> all = signed_closure(reps);

  if (!opts.check_c4_prime) {
    // C4, weak elimination.
    for (const SignedSet& x0 : all) {
      for (const SignedSet& x1 : all) {
        if (x1 == x0.negated()) continue;
        Mask common = x0.pos() & x1.neg();
        for (int e : elements_of(common)) {
          Mask bit = Mask{1} << (e - 1);
          Mask pos_bound = (x0.pos() | x1.pos()) & ~bit;
          Mask neg_bound = (x0.neg() | x1.neg()) & ~bit;
          bool found = false;
          for (const SignedSet& z : all) {
            if (is_subset(z.pos(), pos_bound) && is_subset(z.neg(), neg_bound)) {
              found = true;
              break;
            }
          }
          if (!found) {
            add({"C4", {x0, x1}, "no eliminating circuit for e=" + std::to_string(e)});
            if (done()) return report;
          }
        }
      }
    }
  } else {
    // C4', strong elimination: the eliminating circuit must pass through f.
    for (const SignedSet& x0 : all) {
      for (const SignedSet& x1 : all) {
        Mask common = x0.pos() & x1.neg();
        for (int e : elements_of(common)) {
          Mask bit = Mask{1} << (e - 1);
          Mask pos_bound = (x0.pos() | x1.pos()) & ~bit;
          Mask neg_bound = (x0.neg() | x1.neg()) & ~bit;
          Mask fs = (x0.pos() & ~x1.neg()) | (x0.neg() & ~x1.pos());
          for (int f : elements_of(fs)) {
            Mask fbit = Mask{1} << (f - 1);
            bool found = false;
            for (const SignedSet& z : all) {
              if ((z.support() & fbit) != 0 && is_subset(z.pos(), pos_bound) &&
                  is_subset(z.neg(), neg_bound)) {
                found = true;
                break;
              }
            }
            if (!found) {
              add({"C4'",
                   {x0, x1},
                   "no eliminating circuit through f=" + std::to_string(f) +
                       " for e=" + std::to_string(e)});
              if (done()) return report;
            }
          }
        }
      }
    }
  }

  return report;
}

bool has_loops(const OrientedMatroid& m) { return loops(m) != 0; }

Mask loops(const OrientedMatroid& m) {
  Mask out = 0;
  for (const SignedSet& c : m.circuits()) {
    if (std::popcount(c.support()) == 1) out |= c.support();
  }
  return out;
}

bool is_acyclic(const OrientedMatroid& m) {
  for (const SignedSet& c : m.circuits()) {
    if (!c.is_zero() && (c.pos() == 0 || c.neg() == 0)) return false;
  }
  return true;
}

bool is_independent(const OrientedMatroid& m, Mask s) {
  for (const SignedSet& c : m.circuits()) {
    if (is_subset(c.support(), s)) return false;
  }
  return true;
}

int rank(const OrientedMatroid& m) { return rank_of(m, full_mask(m.ground_size())); }

int rank_of(const OrientedMatroid& m, Mask s) {
  // Greedy extension; valid because independence is a matroid oracle.
  Mask acc = 0;
  for (int e = 1; e <= m.ground_size(); ++e) {
    Mask bit = Mask{1} << (e - 1);
    if ((s & bit) && is_independent(m, acc | bit)) acc |= bit;
  }
  return std::popcount(acc);
}

std::vector<Mask> bases(const OrientedMatroid& m) {
  int n = m.ground_size();
  check_ground_size(n, kSubsetGroundCap, "bases");
  int r = rank(m);
  std::vector<Mask> out;
  if (r == 0) {
    out.push_back(0);
    return out;
  }
  // Gosper's hack over r-subsets; maximal independent sets all have size r.
  Mask limit = Mask{1} << n;
  for (Mask s = (Mask{1} << r) - 1; s < limit;) {
    if (is_independent(m, s)) out.push_back(s);
    Mask c = s & -s;
    Mask rr = s + c;
    s = (((rr ^ s) >> 2) / c) | rr;
  }
  return out;
}

bool is_flat(const OrientedMatroid& m, Mask f) {
  for (const SignedSet& c : m.circuits()) {
    if (std::popcount(c.support() & ~f) == 1) return false;
  }
  return true;
}

std::vector<Mask> flats(const OrientedMatroid& m) {
  int n = m.ground_size();
  check_ground_size(n, kSubsetGroundCap, "flats");
  std::vector<Mask> out;
  Mask full = full_mask(n);
  for (Mask f = 0;; ++f) {
    if (is_flat(m, f)) out.push_back(f);
    if (f == full) break;
  }
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    return set_lex_less(a, b);
  });
  return out;
}

std::vector<SignedSet> covectors(const OrientedMatroid& m) {
  int n = m.ground_size();
  check_ground_size(n, kCovectorGroundCap, "covectors");
  Mask full = full_mask(n);
  std::vector<SignedSet> out;
  for (Mask pos = 0;; ++pos) {
    Mask rest = full & ~pos;
    Mask neg = rest;
    while (true) {
      SignedSet v(n, pos, neg);
      bool ok = true;
      for (const SignedSet& c : m.circuits()) {
        if (!is_orthogonal(v, c)) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(v);
      if (neg == 0) break;
      neg = (neg - 1) & rest;
    }
    if (pos == full) break;
  }
  std::sort(out.begin(), out.end(), signed_set_less);
  return out;
}

std::vector<SignedSet> positive_covectors(const OrientedMatroid& m) {
  int n = m.ground_size();
  check_ground_size(n, kSubsetGroundCap, "positive_covectors");
  Mask full = full_mask(n);
  std::vector<SignedSet> out;
  if (full == 0) return out;
  for (Mask pos = 1;; ++pos) {
    bool ok = true;
    for (const SignedSet& c : m.circuits()) {
      // Orthogonality against an all-positive vector on pos.
      if (((c.pos() & pos) != 0) != ((c.neg() & pos) != 0)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(SignedSet(n, pos, 0));
    if (pos == full) break;
  }
  std::sort(out.begin(), out.end(), signed_set_less);
  return out;
}

namespace {

std::vector<Mask> sorted_flat_list(std::vector<Mask> v) {
  std::sort(v.begin(), v.end(), [](Mask a, Mask b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    return set_lex_less(a, b);
  });
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::vector<Mask> positive_flats(const OrientedMatroid& m) {
  std::vector<Mask> out;
  for (const SignedSet& v : positive_covectors(m)) out.push_back(v.zero_set());
  out.push_back(full_mask(m.ground_size()));
  return sorted_flat_list(std::move(out));
}

std::vector<Mask> positive_flats_by_contraction(const OrientedMatroid& m) {
  Mask full = full_mask(m.ground_size());
  std::vector<Mask> out;
  for (Mask f : flats(m)) {
    if (f == full || is_acyclic(contract(m, f).minor)) out.push_back(f);
  }
  return sorted_flat_list(std::move(out));
}

Contraction contract(const OrientedMatroid& m, Mask s) {
  int n = m.ground_size();
  Mask keep = full_mask(n) & ~s;
  std::vector<int> ground_map = elements_of(keep);
  int new_n = static_cast<int>(ground_map.size());

  std::vector<SignedSet> restrictions;
  for (const SignedSet& c : m.circuits()) {
    SignedSet r = c.restricted_to(keep);
    if (!r.is_zero()) restrictions.push_back(r);
  }
  std::vector<SignedSet> minimal = internal::minimal_support_circuits(restrictions, "contract");

  // Re-index onto {1..new_n}.
  std::vector<int> new_of_old(n + 1, 0);
  for (int i = 0; i < new_n; ++i) new_of_old[ground_map[i]] = i + 1;
  auto remap = [&](Mask mm) {
    Mask out = 0;
    for (int e : elements_of(mm)) out |= Mask{1} << (new_of_old[e] - 1);
    return out;
  };
  std::vector<SignedSet> remapped;
  remapped.reserve(minimal.size());
  for (const SignedSet& c : minimal) remapped.emplace_back(new_n, remap(c.pos()), remap(c.neg()));
  return Contraction{OrientedMatroid(new_n, std::move(remapped)), std::move(ground_map)};
}

OrientedMatroid reorient(const OrientedMatroid& m, Mask flipped) {
  std::vector<SignedSet> out;
  out.reserve(m.circuits().size());
  for (const SignedSet& c : m.circuits()) {
    Mask pos = (c.pos() & ~flipped) | (c.neg() & flipped);
    Mask neg = (c.neg() & ~flipped) | (c.pos() & flipped);
    out.emplace_back(m.ground_size(), pos, neg);
  }
  return OrientedMatroid(m.ground_size(), std::move(out));
}

int basis_sign_product(const OrientedMatroid& m, std::span<const int> b1, std::span<const int> b2) {
  int n = m.ground_size();
  int r = rank(m);
  auto check_basis = [&](std::span<const int> b, const char* name) {
    Mask mask = mask_of({b.begin(), b.end()}, n);
    if (std::popcount(mask) != static_cast<int>(b.size())) {
      throw std::invalid_argument(std::string(name) + " has repeated elements");
    }
    if (static_cast<int>(b.size()) != r || !is_independent(m, mask)) {
      throw std::invalid_argument(std::string(name) + " is not a basis");
    }
    return mask;
  };
  Mask m1 = check_basis(b1, "b1");
  Mask m2 = check_basis(b2, "b2");

  int diff_at = -1;
  for (size_t i = 0; i < b1.size(); ++i) {
    if (b1[i] != b2[i]) {
      if (diff_at >= 0) throw std::invalid_argument("ordered bases differ in more than one position");
      diff_at = static_cast<int>(i);
    }
  }
  if (diff_at < 0 || m1 == m2) {
    throw std::invalid_argument("ordered bases must differ in exactly one element");
  }
  int e = b1[diff_at];
  int f = b2[diff_at];

  Mask span = m1 | m2;
  Mask ebit = Mask{1} << (e - 1);
  Mask fbit = Mask{1} << (f - 1);
  for (const SignedSet& c : m.circuits()) {
    if (is_subset(c.support(), span) && (c.support() & ebit) && (c.support() & fbit)) {
      return -c.sign_of(e) * c.sign_of(f);
    }
  }
  throw std::invalid_argument("no circuit through the exchanged pair; bases not adjacent");
}

}  // namespace bergman
