#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hodge/poset.hpp"

#include <random>

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

Polytope kgon(int k) {
  switch (k) {
    case 3:
      return Polytope::hull(pts({{1, 0}, {0, 1}, {-1, -1}}));
    case 4:
      return Polytope::hull(pts({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}));
    case 5:
      return Polytope::hull(pts({{0, 0}, {1, 0}, {2, 1}, {1, 2}, {0, 1}}));
    case 6:
      return Polytope::hull(
          pts({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}));
    default:
      REQUIRE(false);
      return Polytope::hull(pts({{1, 0}, {0, 1}, {-1, -1}}));
  }
}

Polytope cube3() {
  return Polytope::hull(pts({{1, 1, 1},
                             {1, 1, -1},
                             {1, -1, 1},
                             {1, -1, -1},
                             {-1, 1, 1},
                             {-1, 1, -1},
                             {-1, -1, 1},
                             {-1, -1, -1}}));
}

LaurentBiPoly one_minus_u_pow(int k) {
  LaurentBiPoly base;
  base.m[{0, 0}] = 1;
  base.m[{1, 0}] = -1;
  LaurentBiPoly r = LaurentBiPoly::one();
  for (int i = 0; i < k; ++i) r = r * base;
  return r;
}

// closed form for B of the face poset of a k-gon
LaurentBiPoly kgon_b(int k) {
  LaurentBiPoly r;
  r.m[{0, 0}] = 1;
  r.add(2, 0, Int(k));
  r.add(1, 0, Int(-k));
  r.add(2, 1, Int(-(k - 3)));
  r.add(1, 1, Int(k - 3));
  r.add(3, 0, Int(-1));
  return r;
}

// independent recursive oracle for H/G straight from the definition,
// no memoization of any kind
struct Oracle {
  const FaceLattice& fl;

  UniPoly g(int x, int y) const {
    const int d = fl.face(y).dim - fl.face(x).dim;
    if (d == 0) return UniPoly::one();
    UniPoly hp = h(x, y);
    UniPoly one_minus_t(std::vector<Int>{Int(1), Int(-1)});
    UniPoly prod = one_minus_t * hp;
    std::vector<Int> gc;
    for (std::size_t i = 0; i < prod.c.size(); ++i)
      if (2 * static_cast<int>(i) < d) gc.push_back(prod.c[i]);
    return UniPoly(std::move(gc));
  }

  UniPoly h(int x, int y) const {
    const int d = fl.face(y).dim - fl.face(x).dim;
    if (d == 0) return UniPoly::one();
    UniPoly acc;
    for (std::size_t i = 0; i < fl.faces().size(); ++i) {
      int z = static_cast<int>(i);
      if (z == x || !fl.leq(x, z) || !fl.leq(z, y)) continue;
      int rk = fl.face(z).dim - fl.face(x).dim;
      acc = acc + t_minus_one_pow(static_cast<std::size_t>(rk - 1)) * g(z, y);
    }
    return acc;
  }
};

}  // namespace

TEST_CASE("interval materialization") {
  Polytope square = kgon(4);
  const FaceLattice& fl = square.face_lattice();
  int v0 = fl.faces_of_dim(0)[0];

  Interval self = interval(fl, v0, v0);
  CHECK(self.rank == 0);
  CHECK(self.elements.size() == 1);

  Interval up = interval(fl, v0, fl.full_id());
  CHECK(up.rank == 2);
  CHECK(up.elements.size() == 4);  // vertex, two edges, square

  Interval whole = interval(fl, fl.empty_id(), fl.full_id());
  CHECK(whole.rank == 3);

  int v1 = fl.faces_of_dim(0)[1];
  CHECK_THROWS_AS(interval(fl, v0, v1), NotComparable);
}

TEST_CASE("rank-0 and rank-1 polynomials") {
  Polytope square = kgon(4);
  const FaceLattice& fl = square.face_lattice();
  IntervalCalc calc(fl);
  int v0 = fl.faces_of_dim(0)[0];
  CHECK(calc.h(v0, v0) == UniPoly::one());
  CHECK(calc.g(v0, v0) == UniPoly::one());
  CHECK(calc.b(v0, v0) == LaurentBiPoly::one());

  // rank 1: H = 1, G = 1, B = 1 - u
  int e0 = -1;
  for (int e : fl.faces_of_dim(1))
    if (fl.leq(v0, e)) e0 = e;
  REQUIRE(e0 >= 0);
  CHECK(calc.h(v0, e0) == UniPoly::one());
  CHECK(calc.g(v0, e0) == UniPoly::one());
  CHECK(calc.b(v0, e0) == one_minus_u_pow(1));
}

TEST_CASE("B closed form for ranks up to two") {
  Polytope cube = cube3();
  const FaceLattice& fl = cube.face_lattice();
  IntervalCalc calc(fl);
  for (std::size_t a = 0; a < fl.faces().size(); ++a)
    for (std::size_t b = 0; b < fl.faces().size(); ++b) {
      int x = static_cast<int>(a), y = static_cast<int>(b);
      if (!fl.leq(x, y)) continue;
      int rank = fl.face(y).dim - fl.face(x).dim;
      if (rank <= 2) CHECK(calc.b(x, y) == one_minus_u_pow(rank));
    }
}

TEST_CASE("k-gon polynomials match the closed forms") {
  for (int k : {3, 4, 5, 6}) {
    Polytope p = kgon(k);
    const FaceLattice& fl = p.face_lattice();
    IntervalCalc calc(fl);
    int bot = fl.empty_id(), top = fl.full_id();
    // G = 1 + (k-3) t
    UniPoly want_g = k == 3 ? UniPoly::one()
                            : UniPoly(std::vector<Int>{Int(1), Int(k - 3)});
    CHECK(calc.g(bot, top) == want_g);
    CHECK(calc.b(bot, top) == kgon_b(k));
    CHECK(calc.b_inv_u(bot, top) == kgon_b(k).invert_u());
    // H against the brute-force definitional oracle
    Oracle oracle{fl};
    CHECK(calc.h(bot, top) == oracle.h(bot, top));
  }
}

TEST_CASE("square-face poset B is the k = 4 substitution") {
  Polytope square = kgon(4);
  const FaceLattice& fl = square.face_lattice();
  IntervalCalc calc(fl);
  LaurentBiPoly b = calc.b(fl.empty_id(), fl.full_id());
  // 1 + (4 - v)(u^2 - u) - u^3
  LaurentBiPoly want;
  want.m[{0, 0}] = 1;
  want.m[{2, 0}] = 4;
  want.m[{1, 0}] = -4;
  want.m[{2, 1}] = -1;
  want.m[{1, 1}] = 1;
  want.m[{3, 0}] = -1;
  CHECK(b == want);
}

TEST_CASE("definitional oracle agrees on every interval of the 3-cube") {
  Polytope cube = cube3();
  const FaceLattice& fl = cube.face_lattice();
  IntervalCalc calc(fl);
  Oracle oracle{fl};
  for (std::size_t a = 0; a < fl.faces().size(); ++a)
    for (std::size_t b = 0; b < fl.faces().size(); ++b) {
      int x = static_cast<int>(a), y = static_cast<int>(b);
      if (!fl.leq(x, y)) continue;
      CHECK(calc.h(x, y) == oracle.h(x, y));
      CHECK(calc.g(x, y) == oracle.g(x, y));
    }
}

TEST_CASE("convolution identity and v-degree bound hold on the 3-cube") {
  Polytope cube = cube3();
  const FaceLattice& fl = cube.face_lattice();
  IntervalCalc calc(fl);
  for (std::size_t a = 0; a < fl.faces().size(); ++a)
    for (std::size_t b = 0; b < fl.faces().size(); ++b) {
      int x = static_cast<int>(a), y = static_cast<int>(b);
      if (!fl.leq(x, y)) continue;
      CHECK(calc.verify_convolution(x, y));
      const LaurentBiPoly& bb = calc.b(x, y);
      int rank = fl.face(y).dim - fl.face(x).dim;
      CHECK(bb.min_u() >= 0);  // true polynomial
      CHECK(2 * bb.max_v() < std::max(rank, 1));
      CHECK(calc.g(x, y).coeff(0) == 1);
    }
}

TEST_CASE("memoized and unmemoized calculators agree") {
  Polytope hexagon = kgon(6);
  const FaceLattice& fl = hexagon.face_lattice();
  IntervalCalc memo(fl, true), plain(fl, false);
  for (std::size_t a = 0; a < fl.faces().size(); ++a)
    for (std::size_t b = 0; b < fl.faces().size(); ++b) {
      int x = static_cast<int>(a), y = static_cast<int>(b);
      if (!fl.leq(x, y)) continue;
      CHECK(memo.b(x, y) == plain.b(x, y));
      CHECK(memo.h(x, y) == plain.h(x, y));
    }
}

TEST_CASE("flag vectors count chains by rank sets") {
  Polytope square = kgon(4);
  const FaceLattice& fl = square.face_lattice();
  auto flag = flag_vector_of(fl, fl.empty_id(), fl.full_id());
  REQUIRE(flag.size() == 4);  // subsets of internal ranks {1, 2}
  CHECK(flag[0] == 1);        // empty chain
  CHECK(flag[1] == 4);        // rank-1 elements (vertices)
  CHECK(flag[2] == 4);        // rank-2 elements (edges)
  CHECK(flag[3] == 8);        // vertex < edge incidences
}

TEST_CASE("eval_b_at on small intervals") {
  Polytope square = kgon(4);
  const FaceLattice& fl = square.face_lattice();
  int v0 = fl.faces_of_dim(0)[0];
  int e0 = -1;
  for (int e : fl.faces_of_dim(1))
    if (fl.leq(v0, e)) e0 = e;
  // rank 1: 1 - u^{-1}
  LaurentBiPoly r1;
  r1.m[{0, 0}] = 1;
  r1.m[{-1, 0}] = -1;
  CHECK(eval_b_at(interval(fl, v0, e0)) == r1);
  // rank 2: (1 - u^{-1})^2
  LaurentBiPoly r2 = r1 * r1;
  CHECK(eval_b_at(interval(fl, v0, fl.full_id())) == r2);
}

TEST_CASE("polynomial types maintain canonical form") {
  UniPoly z(std::vector<Int>{Int(0), Int(0)});
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  UniPoly a(std::vector<Int>{Int(1), Int(2)});
  CHECK((a - a).is_zero());

  LaurentBiPoly p;
  p.add(1, 1, Int(3));
  p.add(1, 1, Int(-3));
  CHECK(p.is_zero());
}
