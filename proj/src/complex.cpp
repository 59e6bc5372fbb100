#include "bergman/complex.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace bergman {

std::vector<Mask> FaceLattice::proper_elements() const {
  std::vector<Mask> out;
  for (Mask e : elements) {
    if (e != bottom && e != top) out.push_back(e);
  }
  return out;
}

FaceLattice lattice_of_flats(const OrientedMatroid& m) {
  FaceLattice l;
  l.ground_size = m.ground_size();
  l.elements = flats(m);
  l.bottom = l.elements.front();  // closure of ∅, the unique minimum
  l.top = full_mask(m.ground_size());
  return l;
}

FaceLattice las_vergnas_lattice(const OrientedMatroid& m) {
  if (!is_acyclic(m)) {
    throw std::invalid_argument("las_vergnas_lattice requires an acyclic oriented matroid");
  }
  FaceLattice l;
  l.ground_size = m.ground_size();
  l.elements = positive_flats(m);
  l.bottom = l.elements.front();
  l.top = full_mask(m.ground_size());
  return l;
}

namespace {

void extend_chains(const std::vector<Mask>& proper, std::vector<Mask>& chain, size_t from,
                   std::vector<std::vector<Mask>>& out) {
  for (size_t i = from; i < proper.size(); ++i) {
    if (!chain.empty() && !(is_subset(chain.back(), proper[i]) && chain.back() != proper[i])) {
      continue;
    }
    chain.push_back(proper[i]);
    out.push_back(chain);
    extend_chains(proper, chain, i + 1, out);
    chain.pop_back();
  }
}

}  // namespace

CellComplexSummary fine_cells(const OrientedMatroid& m, bool positive) {
  if (positive && !is_acyclic(m)) {
    throw std::invalid_argument("fine_cells(positive) requires an acyclic oriented matroid");
  }
  if (!positive && has_loops(m)) {
    throw std::invalid_argument("fine_cells requires a loop-free matroid");
  }

  FaceLattice lattice = positive ? las_vergnas_lattice(m) : lattice_of_flats(m);
  std::vector<Mask> proper = lattice.proper_elements();
  // proper is sorted by size, so chains extend strictly upward.
  CellComplexSummary s;
  s.ground_size = m.ground_size();
  s.rank = rank(m);
  s.positive = positive;
  std::vector<Mask> chain;
  extend_chains(proper, chain, 0, s.fine_chains);

  size_t max_len = 0;
  for (const auto& c : s.fine_chains) max_len = std::max(max_len, c.size());
  s.f_vector.assign(max_len, 0);
  for (const auto& c : s.fine_chains) s.f_vector[c.size() - 1] += 1;

  for (const auto& c : s.fine_chains) {
    Flag f(m.ground_size(), c);
    bool ok = positive ? is_positive_flag(m, f, FlagTest::kCircuitInitials)
                       : is_valid_flag(m, f, FlagTest::kCircuitInitials);
    if (!ok) {
      throw std::logic_error("lattice chain fails the flag characterization; inconsistent input");
    }
  }

  if (s.rank >= 2) {
    for (const auto& c : s.fine_chains) {
      if (static_cast<int>(c.size()) == s.rank - 1) s.full_dimensional_fine += 1;
    }
  }
  return s;
}

CellComplexSummary coarse_cells(const OrientedMatroid& m, bool positive) {
  CellComplexSummary s = fine_cells(m, positive);
  std::map<std::vector<SignedSet>, CoarseCell,
           bool (*)(const std::vector<SignedSet>&, const std::vector<SignedSet>&)>
      groups([](const std::vector<SignedSet>& a, const std::vector<SignedSet>& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            signed_set_less);
      });
  for (const auto& c : s.fine_chains) {
    Flag f(m.ground_size(), c);
    OrientedMatroid mw = initial_matroid(m, f);
    auto [it, inserted] = groups.try_emplace(mw.circuits(), CoarseCell{mw, {}, false});
    it->second.members.push_back(f);
    if (s.rank >= 2 && static_cast<int>(c.size()) == s.rank - 1) {
      it->second.full_dimensional = true;
    }
  }
  s.coarse_cells.reserve(groups.size());
  for (auto& [key, cell] : groups) {
    std::sort(cell.members.begin(), cell.members.end(), flag_less);
    s.coarse_cells.push_back(std::move(cell));
  }
  return s;
}

std::vector<long long> f_vector(const CellComplexSummary& s) { return s.f_vector; }

long long euler_characteristic(const CellComplexSummary& s) {
  long long chi = 0;
  int sign = 1;
  for (long long f : s.f_vector) {
    chi += sign * f;
    sign = -sign;
  }
  return chi;
}

}  // namespace bergman
