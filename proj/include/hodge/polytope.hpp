/*
  Exact lattice-polytope geometry.

  A Polytope is always full-dimensional in its ambient lattice and stores
  both descriptions: an irredundant vertex list and an irredundant facet
  list with primitive inner normals (<normal, x> + offset >= 0). Vertices
  and facets are kept lexicographically sorted, so equality of polytopes
  is structural equality.

  Faces are closed incidence pairs (vertex bitset, facet bitset); the
  vertex bitset is the canonical face identity within a fixed polytope.
  Lattice point counts of face dilates are cached per polytope and safe
  for concurrent use.
*/

#pragma once

#include "hodge/bits.hpp"
#include "hodge/errors.hpp"
#include "hodge/exactlin.hpp"
#include "hodge/ints.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

namespace hodge {

struct Facet {
  IntVec normal;  // primitive
  Int offset;     // <normal, x> + offset >= 0 on the polytope

  bool operator==(const Facet& o) const {
    return normal == o.normal && offset == o.offset;
  }
  bool operator<(const Facet& o) const {
    return normal != o.normal ? normal < o.normal : offset < o.offset;
  }
};

struct Face {
  Bits vertex_set;
  Bits facet_set;
  int dim = -1;  // -1 for the empty face
};

class Polytope;

class FaceLattice {
 public:
  // face ids are indices into faces(); includes the empty face and the
  // full polytope
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int id) const { return faces_[static_cast<std::size_t>(id)]; }
  int empty_id() const { return empty_id_; }
  int full_id() const { return full_id_; }
  int dim() const { return top_dim_; }

  const std::vector<int>& faces_of_dim(int d) const;  // d in [-1, dim()]
  int face_by_vertex_set(const Bits& vs) const;       // -1 if absent

  bool leq(int a, int b) const;  // containment (empty face below everything)

  // f-vector indexed from dim -1 to dim()
  std::vector<std::size_t> f_vector() const;

  // Moebius function of the interval [a, b]; the lattice is Eulerian iff
  // this equals (-1)^(rank difference) for every comparable pair.
  Int mobius(int a, int b) const;

 private:
  friend class Polytope;
  std::vector<Face> faces_;
  std::vector<std::vector<int>> by_dim_;  // index 0 <-> dim -1
  std::map<Bits, int> by_vertex_set_;
  int empty_id_ = -1, full_id_ = -1, top_dim_ = -1;
};

class Polytope {
 public:
  // Irredundant dual description of the convex hull of a full-dimensional
  // point set. Throws NotFullDimensional if the affine span is proper.
  static Polytope hull(const std::vector<IntVec>& points);

  std::size_t ambient_dim() const { return dim_; }
  int affine_dim() const { return static_cast<int>(dim_); }
  const std::vector<IntVec>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }

  const FaceLattice& face_lattice() const;  // built lazily, cached

  // l(k F): ambient lattice points in the k-th dilate of a face (dilation
  // about the lattice origin). k = 0 gives 1.
  Int count_points(const Face& f, long k) const;
  Int count_points(int face_id, long k) const;
  // l*(k F): points in the relative interior, k >= 1.
  Int count_interior(const Face& f, long k) const;
  Int count_interior(int face_id, long k) const;

  // all lattice points of the polytope itself
  std::vector<IntVec> lattice_points() const;

  bool operator==(const Polytope& o) const {
    return dim_ == o.dim_ && vertices_ == o.vertices_ && facets_ == o.facets_;
  }
  bool operator!=(const Polytope& o) const { return !(*this == o); }

  Polytope();  // empty; assign from hull()
  Polytope(const Polytope& o);
  Polytope& operator=(const Polytope& o);
  Polytope(Polytope&& o) noexcept;
  Polytope& operator=(Polytope&& o) noexcept;
  ~Polytope();

 private:
  struct FaceCounts;
  FaceCounts& realization(const Bits& vertex_set) const;

  std::size_t dim_ = 0;
  std::vector<IntVec> vertices_;  // lex sorted
  std::vector<Facet> facets_;     // lex sorted

  mutable std::mutex mu_;
  mutable std::unique_ptr<FaceLattice> lattice_;
  mutable std::map<Bits, std::unique_ptr<FaceCounts>> counts_;
};

// ---- free operations ----

// origin interior and every facet at lattice distance one
bool is_reflexive(const Polytope& p);

// convex hull of the primitive inner facet normals; throws NotReflexive
Polytope polar(const Polytope& p);

// hull of pairwise vertex sums; throws DimensionMismatch
Polytope minkowski_sum(const Polytope& a, const Polytope& b);
std::vector<IntVec> minkowski_sum_points(const std::vector<IntVec>& a,
                                         const std::vector<IntVec>& b);

// k(y): number of vertices of a face; throws EmptyFace
std::size_t vertex_count(const Face& f);

// Affine lattice generated by a point set, with the polytope re-expressed
// in coordinates of that lattice (full-dimensional there). If the ambient
// origin lies in the generated affine lattice, it maps to the coordinate
// origin; otherwise the first point does.
struct SublatticeTransform {
  IntVec base;                 // ambient base point (maps to 0)
  std::vector<IntVec> basis;   // rows: ambient vectors of the lattice basis
};
struct RestrictedPolytope {
  std::optional<Polytope> polytope;  // empty when the point set is a single point
  SublatticeTransform transform;
  int lattice_dim = 0;
};
RestrictedPolytope sublattice_restrict(const std::vector<IntVec>& points);

// ---- exact cone/hull kernel (shared with nef) ----

// Extreme rays and lineality of { y : <y, c> >= 0 for all c in constraints }.
// Rays are primitive; the result is canonical (sorted).
struct DualDescription {
  std::vector<IntVec> rays;
  std::vector<IntVec> lineality;
};
DualDescription dual_cone(const std::vector<IntVec>& constraints,
                          std::size_t dim);

// Vertices of { x : <n_i, x> + c_i >= 0 } when bounded; rational in general.
// Throws if the polyhedron is unbounded in some direction.
std::vector<std::vector<Rat>> enumerate_h_vertices(
    const std::vector<Facet>& facets, std::size_t dim);

}  // namespace hodge
