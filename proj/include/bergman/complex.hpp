#pragma once

#include <vector>

#include "bergman/weights.hpp"

namespace bergman {

// A containment-ordered family of subsets with a unique bottom and top.
struct FaceLattice {
  int ground_size = 0;
  std::vector<Mask> elements;  // sorted by (size, elements); includes bottom and top
  Mask bottom = 0;
  Mask top = 0;

  std::vector<Mask> proper_elements() const;
};

// All flats, ordered by containment; bottom is the closure of ∅.
FaceLattice lattice_of_flats(const OrientedMatroid& m);

// Positive flats ordered by containment.  Defined for acyclic matroids.
FaceLattice las_vergnas_lattice(const OrientedMatroid& m);

struct CoarseCell {
  OrientedMatroid initial_matroid;
  std::vector<Flag> members;  // the fine cells, as flags
  bool full_dimensional = false;
};

// Chains in the proper part of the lattice of flats (positive flats when
// positive) are the fine cells; a chain of k flats is a (k-1)-cell.
struct CellComplexSummary {
  int ground_size = 0;
  int rank = 0;
  bool positive = false;
  std::vector<std::vector<Mask>> fine_chains;
  std::vector<long long> f_vector;      // f_vector[d] = number of d-cells
  long long full_dimensional_fine = 0;  // chains of rank-1 proper flats
  std::vector<CoarseCell> coarse_cells;
};

// Requires a loop-free matroid (acyclic when positive); every enumerated
// chain is re-checked against the flag characterization.
CellComplexSummary fine_cells(const OrientedMatroid& m, bool positive);

// fine_cells plus the grouping of fine cells by their initial matroid.
CellComplexSummary coarse_cells(const OrientedMatroid& m, bool positive);

std::vector<long long> f_vector(const CellComplexSummary& s);

// Alternating sum over cell dimensions; 0 for the empty complex.
long long euler_characteristic(const CellComplexSummary& s);

}  // namespace bergman
