#include "hodge/ehrhart.hpp"

namespace hodge {

namespace {

Int binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (long i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

}  // namespace

UniPoly s_poly_empty() { return UniPoly::one(); }

UniPoly s_poly(const Polytope& p, int face_id) {
  const FaceLattice& fl = p.face_lattice();
  if (face_id == fl.empty_id()) return UniPoly::one();
  const Face& f = fl.face(face_id);
  const int d = f.dim;
  std::vector<Int> ell(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) ell[static_cast<std::size_t>(k)] = p.count_points(f, k);
  // coefficient j of (1-t)^{d+1} * sum ell_k t^k for j <= d
  std::vector<Int> s(static_cast<std::size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) {
    Int acc = 0;
    for (int k = 0; k <= j; ++k) {
      Int term = binom(d + 1, j - k) * ell[static_cast<std::size_t>(k)];
      if ((j - k) % 2) acc -= term;
      else acc += term;
    }
    s[static_cast<std::size_t>(j)] = acc;
  }
  return UniPoly(std::move(s));
}

UniPoly t_poly(const Polytope& p, int face_id) {
  const FaceLattice& fl = p.face_lattice();
  if (face_id == fl.empty_id()) throw EmptyFace("t_poly: empty face");
  const int d = fl.face(face_id).dim;
  UniPoly s = s_poly(p, face_id);
  // T_j = S_{d+1-j}
  std::vector<Int> t(static_cast<std::size_t>(d) + 2);
  for (int j = 0; j <= d + 1; ++j)
    t[static_cast<std::size_t>(j)] = s.coeff(static_cast<std::size_t>(d + 1 - j));
  return UniPoly(std::move(t));
}

UniPoly t_poly_direct(const Polytope& p, int face_id) {
  const FaceLattice& fl = p.face_lattice();
  if (face_id == fl.empty_id()) throw EmptyFace("t_poly_direct: empty face");
  const Face& f = fl.face(face_id);
  const int d = f.dim;
  std::vector<Int> ells(static_cast<std::size_t>(d) + 2);
  for (int k = 1; k <= d + 1; ++k)
    ells[static_cast<std::size_t>(k)] = p.count_interior(f, k);
  std::vector<Int> t(static_cast<std::size_t>(d) + 2);
  for (int j = 1; j <= d + 1; ++j) {
    Int acc = 0;
    for (int k = 1; k <= j; ++k) {
      Int term = binom(d + 1, j - k) * ells[static_cast<std::size_t>(k)];
      if ((j - k) % 2) acc -= term;
      else acc += term;
    }
    t[static_cast<std::size_t>(j)] = acc;
  }
  return UniPoly(std::move(t));
}

bool gorenstein_index_check(const Polytope& p, int r) {
  const int d = static_cast<int>(p.ambient_dim());
  UniPoly s = s_poly(p, p.face_lattice().full_id());
  const int want = d - r + 1;
  if (s.degree() != want) return false;
  for (int i = 0; i <= want; ++i)
    if (s.coeff(static_cast<std::size_t>(i)) !=
        s.coeff(static_cast<std::size_t>(want - i)))
      return false;
  return true;
}

const UniPoly& EhrhartCache::s(int face_id) {
  {
    std::scoped_lock lk(mu_);
    auto it = memo_.find(face_id);
    if (it != memo_.end()) return it->second;
  }
  // compute outside the lock; concurrent duplicates are identical, the
  // first insert wins
  UniPoly val = s_poly(p_, face_id);
  std::scoped_lock lk(mu_);
  return memo_.emplace(face_id, std::move(val)).first->second;
}

}  // namespace hodge
