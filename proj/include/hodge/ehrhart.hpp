/*
  S and T polynomials of faces: numerator transforms of the Ehrhart
  series over all lattice points and over relative-interior points,
  related by reciprocity (coefficient reversal in degree d+1).
*/

#pragma once

#include "hodge/polytope.hpp"
#include "hodge/poset.hpp"

namespace hodge {

// S_F(t) = (1-t)^{d+1} sum_k l(kF) t^k, a polynomial of degree <= d.
// Computed from counts at k = 0..d. The empty face yields 1.
UniPoly s_poly(const Polytope& p, int face_id);
UniPoly s_poly_empty();

// T_F(t) from reciprocity: S_F(t) = t^{d+1} T_F(1/t); degree exactly d+1.
UniPoly t_poly(const Polytope& p, int face_id);

// T_F computed directly from interior counts l*(kF), k = 1..d+1 (the
// independent route used to test reciprocity).
UniPoly t_poly_direct(const Polytope& p, int face_id);

// true iff S of the full polytope has degree d-r+1 and is palindromic
bool gorenstein_index_check(const Polytope& p, int r);

// memoizing wrapper used by the generating-function assembly
class EhrhartCache {
 public:
  explicit EhrhartCache(const Polytope& p) : p_(p) {}
  const UniPoly& s(int face_id);  // face_id == empty face allowed
  const Polytope& polytope() const { return p_; }

 private:
  const Polytope& p_;
  std::map<int, UniPoly> memo_;
  std::mutex mu_;
};

}  // namespace hodge
