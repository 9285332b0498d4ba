#include "hodge/exactlin.hpp"

#include <algorithm>
#include <utility>

namespace hodge {

IntVec primitive(const IntVec& v) {
  Int g = vec_gcd(v);
  if (g == 0) throw ZeroVector("primitive: zero vector");
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

HermiteResult hermite_form(const IntMatrix& m) {
  const std::size_t rows = m.rows, cols = m.cols;
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(rows);
  std::size_t r = 0;

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap(h.at(i, c), h.at(j, c));
    for (std::size_t c = 0; c < rows; ++c) std::swap(u.at(i, c), u.at(j, c));
  };
  auto row_axpy = [&](std::size_t dst, std::size_t src, const Int& q) {
    // row[dst] -= q * row[src]
    if (q == 0) return;
    for (std::size_t c = 0; c < cols; ++c) h.at(dst, c) -= q * h.at(src, c);
    for (std::size_t c = 0; c < rows; ++c) u.at(dst, c) -= q * u.at(src, c);
  };
  auto negate_row = [&](std::size_t i) {
    for (std::size_t c = 0; c < cols; ++c) h.at(i, c) = -h.at(i, c);
    for (std::size_t c = 0; c < rows; ++c) u.at(i, c) = -u.at(i, c);
  };

  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // gcd-reduce column c below row r until a single nonzero pivot remains
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (h.at(i, c) == 0) continue;
        if (best == rows ||
            boost::multiprecision::abs(h.at(i, c)) <
                boost::multiprecision::abs(h.at(best, c)))
          best = i;
      }
      if (best == rows) break;  // column all zero below r
      swap_rows(r, best);
      bool cleared = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h.at(i, c) == 0) continue;
        Int q = h.at(i, c) / h.at(r, c);  // truncating is fine here
        row_axpy(i, r, q);
        if (h.at(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (r < rows && h.at(r, c) != 0) {
      if (h.at(r, c) < 0) negate_row(r);
      // reduce entries above the pivot into [0, pivot)
      for (std::size_t i = 0; i < r; ++i) {
        Int q = floor_div(h.at(i, c), h.at(r, c));
        row_axpy(i, r, q);
      }
      ++r;
    }
  }
  return HermiteResult{std::move(h), std::move(u), r};
}

namespace {

// Gaussian elimination over Q; returns (reduced matrix with rhs appended,
// pivot columns). Used by both solvers.
struct Reduced {
  std::vector<std::vector<Rat>> m;
  std::vector<std::size_t> pivots;
};

Reduced reduce(const IntMatrix& a, const std::vector<Rat>& b) {
  const std::size_t rows = a.rows, cols = a.cols;
  std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = Rat(a.at(i, j));
    m[i][cols] = b[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    Rat inv = m[r][c];
    for (std::size_t j = c; j <= cols; ++j) m[r][j] /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return Reduced{std::move(m), std::move(pivots)};
}

}  // namespace

std::optional<std::vector<Rat>> solve_rational(const IntMatrix& a,
                                               const std::vector<Rat>& b) {
  Reduced red = reduce(a, b);
  const std::size_t cols = a.cols;
  // inconsistent iff a zero row has nonzero rhs
  for (std::size_t i = red.pivots.size(); i < a.rows; ++i)
    if (red.m[i][cols] != 0) return std::nullopt;
  std::vector<Rat> x(cols, Rat(0));
  for (std::size_t i = 0; i < red.pivots.size(); ++i)
    x[red.pivots[i]] = red.m[i][cols];
  return x;
}

std::optional<std::vector<Rat>> solve_rational(const IntMatrix& a,
                                               const IntVec& b) {
  std::vector<Rat> rb(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) rb[i] = Rat(b[i]);
  return solve_rational(a, rb);
}

std::size_t rank_of(const std::vector<IntVec>& rows) {
  if (rows.empty()) return 0;
  return hermite_form(IntMatrix::from_rows(rows)).rank;
}

std::vector<IntVec> integer_kernel(const std::vector<IntVec>& m_rows,
                                   std::size_t n) {
  // x with m x = 0  <=>  x^T m^T = 0: left kernel of m^T, read off the
  // transform rows that map to zero rows of the HNF.
  if (m_rows.empty()) {
    std::vector<IntVec> id;
    for (std::size_t i = 0; i < n; ++i) {
      IntVec e(n, 0);
      e[i] = 1;
      id.push_back(std::move(e));
    }
    return id;
  }
  IntMatrix mt(n, m_rows.size());
  for (std::size_t i = 0; i < m_rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) mt.at(j, i) = m_rows[i][j];
  HermiteResult hr = hermite_form(mt);
  std::vector<IntVec> ker;
  for (std::size_t i = hr.rank; i < n; ++i) ker.push_back(hr.u.row(i));
  return ker;
}

std::vector<IntVec> saturated_span_basis(const std::vector<IntVec>& rows,
                                         std::size_t n) {
  std::vector<IntVec> nz;
  for (const auto& r : rows)
    if (!is_zero_vec(r)) nz.push_back(r);
  if (nz.empty()) return {};
  std::vector<IntVec> ortho = integer_kernel(nz, n);
  if (ortho.empty()) {
    std::vector<IntVec> id;
    for (std::size_t i = 0; i < n; ++i) {
      IntVec e(n, 0);
      e[i] = 1;
      id.push_back(std::move(e));
    }
    return id;
  }
  return integer_kernel(ortho, n);
}

Int determinant(const IntMatrix& m) {
  // Bareiss fraction-free elimination
  const std::size_t n = m.rows;
  IntMatrix w = m;
  Int prev = 1;
  Int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      std::size_t piv = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(w.at(k, c), w.at(piv, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
    prev = w.at(k, k);
  }
  return sign * w.at(n - 1, n - 1);
}

}  // namespace hodge
