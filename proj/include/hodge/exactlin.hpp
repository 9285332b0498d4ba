/*
  Exact integer / rational linear algebra kernel: primitive vectors, row
  Hermite normal form with transform, rational solving, integer kernels
  and lattice saturation. All functions are pure; no shared state.
*/

#pragma once

#include "hodge/errors.hpp"
#include "hodge/ints.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hodge {

struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Int> a;  // row-major

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

  Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  IntVec row(std::size_t i) const {
    return IntVec(a.begin() + static_cast<std::ptrdiff_t>(i * cols),
                  a.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols));
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<IntVec>& rows_in) {
    if (rows_in.empty()) return IntMatrix();
    IntMatrix m(rows_in.size(), rows_in[0].size());
    for (std::size_t i = 0; i < rows_in.size(); ++i)
      for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows_in[i][j];
    return m;
  }

  IntMatrix transposed() const {
    IntMatrix t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  bool operator==(const IntMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

// v divided by the gcd of its entries; direction preserved. Throws ZeroVector.
IntVec primitive(const IntVec& v);

struct HermiteResult {
  IntMatrix h;        // row HNF, same shape as input
  IntMatrix u;        // unimodular, u * m = h
  std::size_t rank;   // number of nonzero rows of h
};

// Row Hermite normal form: pivots positive, entries above a pivot reduced
// into [0, pivot), zero rows at the bottom.
HermiteResult hermite_form(const IntMatrix& m);

// Exact solution of a * x = b, if any (free variables set to zero).
std::optional<std::vector<Rat>> solve_rational(const IntMatrix& a,
                                               const std::vector<Rat>& b);
std::optional<std::vector<Rat>> solve_rational(const IntMatrix& a,
                                               const IntVec& b);

// Rank of the row span over Q.
std::size_t rank_of(const std::vector<IntVec>& rows);

// Basis of { x in Z^n : m x = 0 }, m given by rows (each of length n).
// The returned rows span the full (saturated) kernel lattice.
std::vector<IntVec> integer_kernel(const std::vector<IntVec>& m_rows,
                                   std::size_t n);

// Basis of Z^n intersected with the rational row span of the given vectors
// (the saturation of the generated lattice).
std::vector<IntVec> saturated_span_basis(const std::vector<IntVec>& rows,
                                         std::size_t n);

// determinant via fraction-free elimination (square matrices only)
Int determinant(const IntMatrix& m);

}  // namespace hodge
