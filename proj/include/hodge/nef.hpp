/*
  Nef partitions and the Cayley construction.

  A validated nef partition of a reflexive polytope gives the Cayley
  polytope P* in N x Z^r, its supporting Gorenstein cone C*, the dual
  cone C and dual Cayley polytope P, plus the inclusion-reversing face
  duality between P and P*. Both P and P* are realized full-dimensionally
  in the height-sum-one slice (drop the last height coordinate); lattice
  point counts agree with the ambient ones because the projection is a
  lattice bijection on every dilated slice.
*/

#pragma once

#include "hodge/polytope.hpp"

#include <memory>
#include <vector>

namespace hodge {

struct NefPartition {
  Polytope delta;                       // reflexive, dim n
  std::vector<std::vector<int>> parts;  // disjoint vertex index sets
  std::vector<std::vector<IntVec>> part_points;  // V_i together with 0
  Polytope nabla_polar;                 // Delta_1 + ... + Delta_r, reflexive

  int n() const { return static_cast<int>(delta.ambient_dim()); }
  int r() const { return static_cast<int>(parts.size()); }
};

class CayleyPair {
 public:
  int n = 0, r = 0;

  const Polytope& p_star() const { return *p_star_; }
  const Polytope& p() const { return *p_; }

  // ambient N x Z^r / M x Z^r coordinates aligned with the realized
  // vertex order
  const std::vector<IntVec>& p_star_ambient() const { return p_star_amb_; }
  const std::vector<IntVec>& p_ambient() const { return p_amb_; }

  // face id in p's lattice -> face id of the dual face in p_star's lattice
  int dual_face(int p_face_id) const { return dual_of_p_face_[static_cast<std::size_t>(p_face_id)]; }
  // inverse direction
  int dual_face_star(int pstar_face_id) const {
    return dual_of_pstar_face_[static_cast<std::size_t>(pstar_face_id)];
  }

  // the same pair with the roles of P and P* exchanged (shares geometry
  // and caches with this object)
  CayleyPair swapped() const;

 private:
  friend CayleyPair cayley(const NefPartition& np);
  std::shared_ptr<const Polytope> p_star_, p_;
  std::vector<IntVec> p_star_amb_, p_amb_;
  std::vector<int> dual_of_p_face_, dual_of_pstar_face_;
};

// checks disjoint cover and reflexivity of the Minkowski sum, then builds
// the partition object. Throws NotReflexive / InvalidPartition / NotNef.
NefPartition validate_nef_partition(const Polytope& delta,
                                    const std::vector<std::vector<int>>& parts);

// builds P*, C*, C, P and the face duality. Throws NonLatticeDual if a
// vertex of P is non-integral (invalid partition upstream).
CayleyPair cayley(const NefPartition& np);

// the polytopes nabla_i of the dual nef partition, as vertex sets in M
// (they are faces of P cut out by the height coordinates). Verifies
// nabla_1 + ... + nabla_r = polar(delta).
std::vector<std::vector<IntVec>> dual_nef_parts(const CayleyPair& cp,
                                                const NefPartition& np);

// no proper subset of the parts has a Minkowski sum that is reflexive in
// the sublattice generated by its lattice points
bool is_indecomposable(const NefPartition& np);

}  // namespace hodge
