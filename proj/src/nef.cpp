#include "hodge/nef.hpp"

#include <algorithm>
#include <set>

namespace hodge {

namespace {

// realized slice coordinates: drop the last height coordinate
IntVec realize(const IntVec& amb, int n, int r) {
  IntVec v(amb.begin(), amb.end() - 1);
  (void)n;
  (void)r;
  return v;
}

// lift realized coordinates back to the height-sum-one slice
IntVec lift(const IntVec& real, int n, int r) {
  IntVec v = real;
  Int h = 1;
  for (int j = 0; j < r - 1; ++j) h -= real[static_cast<std::size_t>(n + j)];
  v.push_back(h);
  return v;
}

}  // namespace

NefPartition validate_nef_partition(const Polytope& delta,
                                    const std::vector<std::vector<int>>& parts) {
  if (!is_reflexive(delta))
    throw NotReflexive("validate_nef_partition: delta is not reflexive");
  const int nv = static_cast<int>(delta.vertices().size());
  std::vector<int> seen(static_cast<std::size_t>(nv), 0);
  for (const auto& part : parts) {
    if (part.empty())
      throw InvalidPartition("validate_nef_partition: empty part");
    for (int i : part) {
      if (i < 0 || i >= nv)
        throw IndexOutOfRange("validate_nef_partition: vertex index out of range");
      if (seen[static_cast<std::size_t>(i)]++)
        throw InvalidPartition("validate_nef_partition: overlapping parts");
    }
  }
  for (int i = 0; i < nv; ++i)
    if (!seen[static_cast<std::size_t>(i)])
      throw InvalidPartition("validate_nef_partition: vertex not covered");

  NefPartition np;
  np.delta = delta;
  np.parts = parts;
  const std::size_t n = delta.ambient_dim();
  for (const auto& part : parts) {
    std::vector<IntVec> pts;
    for (int i : part) pts.push_back(delta.vertices()[static_cast<std::size_t>(i)]);
    pts.push_back(IntVec(n, 0));
    np.part_points.push_back(std::move(pts));
  }
  // Minkowski sum of all parts must be reflexive
  std::vector<IntVec> sum = np.part_points[0];
  for (std::size_t i = 1; i < np.part_points.size(); ++i)
    sum = minkowski_sum_points(sum, np.part_points[i]);
  Polytope nab;
  try {
    nab = Polytope::hull(sum);
  } catch (const NotFullDimensional&) {
    throw NotNef("validate_nef_partition: Minkowski sum is not full-dimensional");
  }
  if (!is_reflexive(nab))
    throw NotNef("validate_nef_partition: Minkowski sum is not reflexive");
  np.nabla_polar = std::move(nab);
  return np;
}

CayleyPair cayley(const NefPartition& np) {
  const int n = np.n(), r = np.r();
  const std::size_t d_amb = static_cast<std::size_t>(n + r);

  // generators of the Cayley cone C*: Delta_i x e_i at height e_i
  std::vector<IntVec> gens;
  for (int i = 0; i < r; ++i) {
    for (const auto& pt : np.part_points[static_cast<std::size_t>(i)]) {
      IntVec g = pt;
      for (int j = 0; j < r; ++j) g.push_back(j == i ? 1 : 0);
      gens.push_back(std::move(g));
    }
  }

  CayleyPair cp;
  cp.n = n;
  cp.r = r;

  // P*: realized hull in the slice
  {
    std::vector<IntVec> pts;
    for (const auto& g : gens) pts.push_back(realize(g, n, r));
    cp.p_star_ = std::make_shared<Polytope>(Polytope::hull(pts));
    for (const auto& v : cp.p_star_->vertices())
      cp.p_star_amb_.push_back(lift(v, n, r));
  }

  // dual cone C and its degree-one slice P
  DualDescription dd = dual_cone(gens, d_amb);
  if (!dd.lineality.empty())
    throw ConsistencyError("cayley: dual cone has lineality");
  {
    std::vector<IntVec> pts;
    for (const auto& ray : dd.rays) {
      Int h = 0;
      for (int j = 0; j < r; ++j) h += ray[static_cast<std::size_t>(n + j)];
      if (h <= 0)
        throw ConsistencyError("cayley: dual ray at non-positive height");
      IntVec v(d_amb);
      for (std::size_t i = 0; i < d_amb; ++i) {
        if (ray[i] % h != 0)
          throw NonLatticeDual("cayley: dual Cayley polytope has a non-lattice vertex");
        v[i] = ray[i] / h;
      }
      pts.push_back(realize(v, n, r));
    }
    cp.p_ = std::make_shared<Polytope>(Polytope::hull(pts));
    for (const auto& v : cp.p_->vertices())
      cp.p_amb_.push_back(lift(v, n, r));
  }

  // face duality from the vertex pairing matrix <p_i, p*_j> == 0
  const FaceLattice& fl = cp.p_->face_lattice();
  const FaceLattice& fls = cp.p_star_->face_lattice();
  const std::size_t nv = cp.p_amb_.size(), nvs = cp.p_star_amb_.size();
  std::vector<Bits> orth(nv, Bits(nvs));  // vertex of P -> orthogonal P* set
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = 0; j < nvs; ++j)
      if (dot(cp.p_amb_[i], cp.p_star_amb_[j]) == 0) orth[i].set(j);

  cp.dual_of_p_face_.assign(fl.faces().size(), -1);
  cp.dual_of_pstar_face_.assign(fls.faces().size(), -1);
  for (std::size_t fi = 0; fi < fl.faces().size(); ++fi) {
    const Face& f = fl.faces()[fi];
    Bits w = Bits::full(nvs);
    for (std::size_t i = 0; i < nv; ++i)
      if (f.vertex_set.test(i)) w = w & orth[i];
    int dual_id = fls.face_by_vertex_set(w);
    if (dual_id < 0)
      throw ConsistencyError("cayley: dual vertex set is not a face of P*");
    const int want = n + r - 2 - f.dim;
    if (fls.face(dual_id).dim != want)
      throw ConsistencyError("cayley: dual face has unexpected dimension");
    cp.dual_of_p_face_[fi] = dual_id;
    cp.dual_of_pstar_face_[static_cast<std::size_t>(dual_id)] =
        static_cast<int>(fi);
  }
  // duality must be a bijection
  for (int id : cp.dual_of_pstar_face_)
    if (id < 0)
      throw ConsistencyError("cayley: face duality is not a bijection");
  return cp;
}

CayleyPair CayleyPair::swapped() const {
  CayleyPair s;
  s.n = n;
  s.r = r;
  s.p_star_ = p_;
  s.p_ = p_star_;
  s.p_star_amb_ = p_amb_;
  s.p_amb_ = p_star_amb_;
  s.dual_of_p_face_ = dual_of_pstar_face_;
  s.dual_of_pstar_face_ = dual_of_p_face_;
  return s;
}

std::vector<std::vector<IntVec>> dual_nef_parts(const CayleyPair& cp,
                                                const NefPartition& np) {
  const int n = cp.n, r = cp.r;
  std::vector<std::vector<IntVec>> parts;
  for (int i = 0; i < r; ++i) {
    std::vector<IntVec> vs;
    for (const auto& v : cp.p_ambient()) {
      bool on = true;
      for (int j = 0; j < r; ++j)
        if (v[static_cast<std::size_t>(n + j)] != (j == i ? 1 : 0)) on = false;
      if (on) vs.push_back(IntVec(v.begin(), v.begin() + n));
    }
    if (vs.empty())
      throw ConsistencyError("dual_nef_parts: empty slice");
    parts.push_back(std::move(vs));
  }
  // nabla_1 + ... + nabla_r must reproduce polar(delta)
  std::vector<IntVec> sum = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i)
    sum = minkowski_sum_points(sum, parts[i]);
  if (Polytope::hull(sum) != polar(np.delta))
    throw ConsistencyError("dual_nef_parts: sum of slices is not polar(delta)");
  return parts;
}

bool is_indecomposable(const NefPartition& np) {
  const int r = np.r();
  if (r == 1) return true;
  for (unsigned mask = 1; mask + 1 < (1u << r); ++mask) {
    // Minkowski sum over the subset
    std::vector<IntVec> sum;
    for (int i = 0; i < r; ++i) {
      if (!(mask & (1u << i))) continue;
      sum = sum.empty()
                ? np.part_points[static_cast<std::size_t>(i)]
                : minkowski_sum_points(sum, np.part_points[static_cast<std::size_t>(i)]);
    }
    // restrict to the sublattice generated by the lattice points of the sum
    std::vector<IntVec> pts;
    try {
      Polytope sp = Polytope::hull(sum);
      pts = sp.lattice_points();
    } catch (const NotFullDimensional&) {
      // lower-dimensional subset sum: restrict first, then enumerate
      RestrictedPolytope rp = sublattice_restrict(sum);
      if (!rp.polytope) continue;  // single point, never reflexive
      // lattice points of the restricted polytope, mapped back
      std::vector<IntVec> tpts = rp.polytope->lattice_points();
      for (const auto& t : tpts) {
        IntVec x = rp.transform.base;
        for (std::size_t i = 0; i < rp.transform.basis.size(); ++i)
          for (std::size_t j = 0; j < x.size(); ++j)
            x[j] += t[i] * rp.transform.basis[i][j];
        pts.push_back(std::move(x));
      }
    }
    if (pts.empty()) continue;
    RestrictedPolytope rp = sublattice_restrict(pts);
    if (!rp.polytope) continue;
    if (is_reflexive(*rp.polytope)) return false;
  }
  return true;
}

}  // namespace hodge
