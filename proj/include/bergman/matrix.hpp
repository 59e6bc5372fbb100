#pragma once

#include <vector>

#include "bergman/oriented_matroid.hpp"

namespace bergman {

// Exact rational matrix.  Rows are linear forms on {1..n}; the row space is
// what matters, so row operations do not change derived results.
struct RationalMatrix {
  int cols = 0;
  std::vector<std::vector<Rational>> rows;
};

int matrix_rank(const RationalMatrix& a);

// The oriented matroid whose circuits are the sign patterns of the
// minimal-support non-zero vectors of the row space of a.  A zero matrix
// yields the free matroid.
OrientedMatroid circuits_from_matrix(const RationalMatrix& a);

}  // namespace bergman
