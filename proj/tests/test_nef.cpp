#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hodge/ehrhart.hpp"
#include "hodge/io.hpp"
#include "hodge/nef.hpp"

#include <algorithm>

using namespace hodge;

namespace {

IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::vector<IntVec> pts(std::initializer_list<std::initializer_list<long>> ps) {
  std::vector<IntVec> v;
  for (const auto& p : ps) v.push_back(iv(p));
  return v;
}

// vertex indices of p matching the given points
std::vector<int> indices_of(const Polytope& p,
                            const std::vector<IntVec>& points) {
  std::vector<int> out;
  for (const auto& q : points) {
    auto it = std::find(p.vertices().begin(), p.vertices().end(), q);
    REQUIRE(it != p.vertices().end());
    out.push_back(static_cast<int>(it - p.vertices().begin()));
  }
  return out;
}

NefPartition load_partition(const std::string& file) {
  InputData in = parse_input(std::string(FIXTURE_DIR) + "/" + file);
  REQUIRE(in.parts);
  Polytope delta = Polytope::hull(in.vertices);
  std::vector<std::vector<int>> parts;
  for (const auto& part : *in.parts) {
    std::vector<IntVec> sel;
    for (int c : part) sel.push_back(in.vertices[static_cast<std::size_t>(c)]);
    parts.push_back(indices_of(delta, sel));
  }
  return validate_nef_partition(delta, parts);
}

Polytope diamond() {
  return Polytope::hull(pts({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
}

}  // namespace

TEST_CASE("validate_nef_partition on the diamond") {
  Polytope d = diamond();
  auto v1 = indices_of(d, pts({{1, 0}, {-1, 0}}));
  auto v2 = indices_of(d, pts({{0, 1}, {0, -1}}));
  NefPartition np = validate_nef_partition(d, {v1, v2});
  CHECK(np.r() == 2);
  // the Minkowski sum of the two segments is the unit square scaled by 1
  CHECK(np.nabla_polar ==
        Polytope::hull(pts({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}})));
}

TEST_CASE("validate_nef_partition rejects bad partitions") {
  Polytope d = diamond();
  std::vector<int> all = {0, 1, 2, 3};
  CHECK_THROWS_AS(validate_nef_partition(d, {all, {}}), InvalidPartition);
  CHECK_THROWS_AS(validate_nef_partition(d, {{0, 1}, {1, 2, 3}}),
                  InvalidPartition);
  CHECK_THROWS_AS(validate_nef_partition(d, {{0, 1}, {2}}), InvalidPartition);
  CHECK_THROWS_AS(validate_nef_partition(d, {{0, 1}, {2, 9}}),
                  IndexOutOfRange);
  Polytope notref = Polytope::hull(pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  CHECK_THROWS_AS(validate_nef_partition(notref, {{0, 1, 2, 3}}),
                  NotReflexive);
}

TEST_CASE("a vertex split of the square is not nef") {
  Polytope sq = Polytope::hull(pts({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}));
  auto v1 = indices_of(sq, pts({{1, 1}}));
  auto v2 = indices_of(sq, pts({{1, -1}, {-1, 1}, {-1, -1}}));
  CHECK_THROWS_AS(validate_nef_partition(sq, {v1, v2}), NotNef);
}

TEST_CASE("r = 1 Cayley pair degenerates to (Delta, Delta polar)") {
  Polytope tri = Polytope::hull(pts({{1, 0}, {0, 1}, {-1, -1}}));
  NefPartition np = validate_nef_partition(tri, {{0, 1, 2}});
  CayleyPair cp = cayley(np);
  CHECK(cp.p_star() == tri);
  CHECK(cp.p() == polar(tri));
  // r = 1 partitions are trivially indecomposable
  CHECK(is_indecomposable(np));
  auto parts = dual_nef_parts(cp, np);
  REQUIRE(parts.size() == 1);
  CHECK(Polytope::hull(parts[0]) == polar(tri));
}

TEST_CASE("Cayley pair of the first worked example") {
  NefPartition np = load_partition("example1.poly");
  CayleyPair cp = cayley(np);
  CHECK(cp.n == 5);
  CHECK(cp.r == 2);
  const Polytope& ps = cp.p_star();
  const Polytope& p = cp.p();
  CHECK(ps.count_points(ps.face_lattice().full_id(), 1) == 8);
  CHECK(p.count_points(p.face_lattice().full_id(), 1) == 98);

  // duality: inclusion-reversing involution with complementary dimension
  const FaceLattice& fl = p.face_lattice();
  const FaceLattice& fls = ps.face_lattice();
  for (std::size_t i = 0; i < fl.faces().size(); ++i) {
    int y = static_cast<int>(i);
    int yd = cp.dual_face(y);
    CHECK(fl.face(y).dim + fls.face(yd).dim == cp.n + cp.r - 2);
    CHECK(cp.dual_face_star(yd) == y);
  }
  for (int y : fl.faces_of_dim(0))
    CHECK(fls.face(cp.dual_face(y)).dim == 5);
  // inclusion reversal on a sample of comparable pairs
  for (std::size_t a = 0; a < fl.faces().size(); ++a)
    for (std::size_t b = a; b < fl.faces().size(); ++b) {
      int x = static_cast<int>(a), y = static_cast<int>(b);
      if (!fl.leq(x, y)) continue;
      CHECK(fls.leq(cp.dual_face(y), cp.dual_face(x)));
    }

  // swapped pair exchanges the roles
  CayleyPair sw = cp.swapped();
  CHECK(sw.p() == ps);
  CHECK(sw.p_star() == p);
  CHECK(sw.dual_face(fls.empty_id()) == fl.full_id());
  CHECK(sw.dual_face(fls.full_id()) == fl.empty_id());
}

TEST_CASE("dual nef parts of example 1 sum to the polar") {
  NefPartition np = load_partition("example1.poly");
  CayleyPair cp = cayley(np);
  // dual_nef_parts itself asserts nabla_1 + nabla_2 = polar(delta)
  auto parts = dual_nef_parts(cp, np);
  CHECK(parts.size() == 2);
  // and Conv(nabla_1, nabla_2) is the nabla polytope: full-dimensional,
  // with polar equal to the nef partition's Minkowski sum
  std::vector<IntVec> uni = parts[0];
  uni.insert(uni.end(), parts[1].begin(), parts[1].end());
  Polytope nabla = Polytope::hull(uni);
  CHECK(is_reflexive(nabla));
  CHECK(polar(nabla) == np.nabla_polar);
}

TEST_CASE("dual parts of the diamond partition are segments summing to the square polar") {
  Polytope d = diamond();
  auto v1 = indices_of(d, pts({{1, 0}, {-1, 0}}));
  auto v2 = indices_of(d, pts({{0, 1}, {0, -1}}));
  NefPartition np = validate_nef_partition(d, {v1, v2});
  CayleyPair cp = cayley(np);
  auto parts = dual_nef_parts(cp, np);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].size() == 2);
  CHECK(parts[1].size() == 2);
}

TEST_CASE("decomposability") {
  // diamond split into two segments: decomposable
  Polytope d = diamond();
  auto v1 = indices_of(d, pts({{1, 0}, {-1, 0}}));
  auto v2 = indices_of(d, pts({{0, 1}, {0, -1}}));
  CHECK(!is_indecomposable(validate_nef_partition(d, {v1, v2})));

  for (const char* f :
       {"example1.poly", "example2.poly", "example3.poly", "example4.poly"})
    CHECK(is_indecomposable(load_partition(f)));

  CHECK(!is_indecomposable(load_partition("decomposable.poly")));
}

TEST_CASE("Gorenstein structure of the Cayley pair") {
  NefPartition np = load_partition("example1.poly");
  CayleyPair cp = cayley(np);
  // P and P* are 6-dim Gorenstein polytopes of index 2
  CHECK(gorenstein_index_check(cp.p(), 2));
  CHECK(gorenstein_index_check(cp.p_star(), 2));
  // 2 P* is reflexive after translating by the unique interior lattice
  // point of the dilate
  const Polytope& ps = cp.p_star();
  CHECK(ps.count_interior(ps.face_lattice().full_id(), 2) == 1);
  std::vector<IntVec> doubled;
  for (const auto& v : ps.vertices()) doubled.push_back(vec_scale(v, 2));
  Polytope twops = Polytope::hull(doubled);
  std::vector<IntVec> interior;
  for (const auto& pt : twops.lattice_points()) {
    bool strict = true;
    for (const auto& f : twops.facets())
      if (dot(f.normal, pt) + f.offset <= 0) strict = false;
    if (strict) interior.push_back(pt);
  }
  REQUIRE(interior.size() == 1);
  std::vector<IntVec> shifted;
  for (const auto& v : twops.vertices())
    shifted.push_back(vec_sub(v, interior[0]));
  CHECK(is_reflexive(Polytope::hull(shifted)));
}

TEST_CASE("double polar recovers the example-1 polytope") {
  NefPartition np = load_partition("example1.poly");
  CHECK(polar(polar(np.delta)) == np.delta);
}

TEST_CASE("the interval from the empty face to P has rank 7") {
  NefPartition np = load_partition("example1.poly");
  CayleyPair cp = cayley(np);
  const FaceLattice& fl = cp.p().face_lattice();
  Interval iv7 = interval(fl, fl.empty_id(), fl.full_id());
  CHECK(iv7.rank == 7);
}

TEST_CASE("dual parts of indecomposable partitions have no interior points") {
  // the slices nabla_i arise as facets of P; for an indecomposable
  // partition none of them has a relative-interior lattice point
  for (const char* f :
       {"example1.poly", "example2.poly", "example3.poly", "example4.poly"}) {
    NefPartition np = load_partition(f);
    CayleyPair cp = cayley(np);
    const Polytope& p = cp.p();
    const FaceLattice& fl = p.face_lattice();
    for (int i = 0; i < cp.r; ++i) {
      Bits vs(p.vertices().size());
      for (std::size_t vi = 0; vi < cp.p_ambient().size(); ++vi) {
        bool on = true;
        for (int j = 0; j < cp.r; ++j)
          if (cp.p_ambient()[vi][static_cast<std::size_t>(cp.n + j)] !=
              (j == i ? 1 : 0))
            on = false;
        if (on) vs.set(vi);
      }
      int fid = fl.face_by_vertex_set(vs);
      REQUIRE(fid >= 0);
      CHECK(p.count_interior(fid, 1) == 0);
    }
  }
}

TEST_CASE("dual cone of the dual cone returns the original rays") {
  // cone over the example-1 Cayley polytope
  NefPartition np = load_partition("example1.poly");
  std::vector<IntVec> gens;
  for (std::size_t i = 0; i < np.part_points.size(); ++i)
    for (const auto& pt : np.part_points[i]) {
      IntVec g = pt;
      for (std::size_t j = 0; j < np.part_points.size(); ++j)
        g.push_back(j == i ? 1 : 0);
      gens.push_back(std::move(g));
    }
  DualDescription dual = dual_cone(gens, 7);
  CHECK(dual.lineality.empty());
  DualDescription back = dual_cone(dual.rays, 7);
  CHECK(back.lineality.empty());
  // the double dual recovers exactly the extreme rays of the original
  // cone, which are the lifted vertices of P*
  CayleyPair cp = cayley(np);
  std::vector<IntVec> expect = cp.p_star_ambient();
  std::sort(expect.begin(), expect.end());
  CHECK(back.rays == expect);
  // ... and every original generator pairs nonnegatively with the dual
  for (const auto& g : gens)
    for (const auto& r : dual.rays) CHECK(dot(g, r) >= 0);
}
