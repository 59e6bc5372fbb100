#include "bergman/matrix.hpp"

#include <algorithm>

namespace bergman {

namespace {

void validate(const RationalMatrix& a) {
  if (a.cols < 0) throw std::invalid_argument("negative column count");
  for (const auto& row : a.rows) {
    if (static_cast<int>(row.size()) != a.cols) {
      throw std::invalid_argument("matrix row length does not match column count");
    }
  }
}

// In-place reduced row echelon form; returns the non-zero rows.
std::vector<std::vector<Rational>> row_basis(const RationalMatrix& a) {
  std::vector<std::vector<Rational>> m = a.rows;
  int rows = static_cast<int>(m.size());
  int lead = 0;
  for (int col = 0; col < a.cols && lead < rows; ++col) {
    int pivot = -1;
    for (int r = lead; r < rows; ++r) {
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[lead], m[pivot]);
    Rational inv = m[lead][col];
    for (int c = col; c < a.cols; ++c) m[lead][c] /= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == lead || m[r][col] == 0) continue;
      Rational factor = m[r][col];
      for (int c = col; c < a.cols; ++c) m[r][c] -= factor * m[lead][c];
    }
    ++lead;
  }
  m.resize(lead);
  return m;
}

// One-dimensional kernel of the (k x r) system rows*c = 0, or empty if the
// kernel dimension is not exactly one.
std::vector<Rational> kernel_if_line(std::vector<std::vector<Rational>> sys, int r) {
  int rows = static_cast<int>(sys.size());
  std::vector<int> pivot_col;
  int lead = 0;
  for (int col = 0; col < r && lead < rows; ++col) {
    int pivot = -1;
    for (int i = lead; i < rows; ++i) {
      if (sys[i][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(sys[lead], sys[pivot]);
    Rational inv = sys[lead][col];
    for (int c = col; c < r; ++c) sys[lead][c] /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == lead || sys[i][col] == 0) continue;
      Rational factor = sys[i][col];
      for (int c = col; c < r; ++c) sys[i][c] -= factor * sys[lead][c];
    }
    pivot_col.push_back(col);
    ++lead;
  }
  if (lead != r - 1) return {};

  std::vector<bool> is_pivot(r, false);
  for (int c : pivot_col) is_pivot[c] = true;
  int free_col = 0;
  while (is_pivot[free_col]) ++free_col;

  std::vector<Rational> c(r, Rational(0));
  c[free_col] = 1;
  for (int i = 0; i < lead; ++i) c[pivot_col[i]] = -sys[i][free_col];
  return c;
}

}  // namespace

int matrix_rank(const RationalMatrix& a) {
  validate(a);
  return static_cast<int>(row_basis(a).size());
}

OrientedMatroid circuits_from_matrix(const RationalMatrix& a) {
  validate(a);
  int n = a.cols;
  check_ground_size(n, kSubsetGroundCap, "circuits_from_matrix");

  std::vector<std::vector<Rational>> basis = row_basis(a);
  int r = static_cast<int>(basis.size());
  if (r == 0) return OrientedMatroid(n, {});

  // Minimal-support row-space vectors vanish exactly on a hyperplane of the
  // column matroid; every hyperplane is spanned by an (r-1)-subset of
  // columns, so sweeping those subsets finds every circuit.
  std::vector<SignedSet> found;
  auto process_subset = [&](Mask t) {
    std::vector<std::vector<Rational>> sys;
    for (int e : elements_of(t)) {
      std::vector<Rational> eq(r);
      for (int i = 0; i < r; ++i) eq[i] = basis[i][e - 1];
      sys.push_back(std::move(eq));
    }
    std::vector<Rational> c = kernel_if_line(std::move(sys), r);
    if (c.empty()) return;
    Mask pos = 0;
    Mask neg = 0;
    for (int col = 0; col < n; ++col) {
      Rational v(0);
      for (int i = 0; i < r; ++i) v += c[i] * basis[i][col];
      int s = sgn(v);
      if (s > 0) pos |= Mask{1} << col;
      if (s < 0) neg |= Mask{1} << col;
    }
    if (pos != 0 || neg != 0) found.emplace_back(n, pos, neg);
  };

  int k = r - 1;
  if (k == 0) {
    process_subset(0);
  } else {
    Mask limit = Mask{1} << n;
    for (Mask s = (Mask{1} << k) - 1; s < limit;) {
      process_subset(s);
      Mask c = s & -s;
      Mask rr = s + c;
      s = (((rr ^ s) >> 2) / c) | rr;
    }
  }
  return OrientedMatroid(n, std::move(found));
}

}  // namespace bergman
