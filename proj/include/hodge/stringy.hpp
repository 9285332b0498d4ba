/*
  Stringy Hodge numbers of Calabi-Yau hypersurfaces and bipartite
  complete intersections: the generating function E_C(u,v) assembled
  over comparable face pairs of the dual Cayley polytope, plus the
  closed-form lattice-point formulas, with a cross-check between the
  two routes.
*/

#pragma once

#include "hodge/ehrhart.hpp"
#include "hodge/nef.hpp"
#include "hodge/poset.hpp"
#include "hodge/polytope.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hodge {

/* ---- result types ---- */

struct Term {
  std::string name;
  Int value;       // signed contribution to the total
  int print_sign;  // sign symbol used when rendering the breakdown
};

struct TermBreakdown {
  std::vector<Term> terms;

  Int total() const {
    Int s = 0;
    for (const auto& t : terms) s += t.value;
    return s;
  }
  // "8 - 7 - 0 + 0 + 0 - 0 - 0 + 0 = 1" (ASCII minus)
  std::string render() const;
};

struct HodgeDiamond {
  int n_minus_r = 0;
  std::vector<std::vector<Int>> h;  // h[p][q], 0 <= p,q <= n-r
  LaurentBiPoly e;
};

/* ---- generating function route ---- */

struct EPolyOptions {
  int threads = 1;           // workers for the lattice-point phase
  bool no_flag_memo = false; // bypass the flag-vector memo key
};

// E_C(u,v) of the dual Cayley cone; exact Laurent assembly over all
// comparable face pairs of P. Throws NotPolynomial if negative exponents
// survive or the degree bound fails.
LaurentBiPoly e_poly(const CayleyPair& cp, const EPolyOptions& opts = {});

// read the (p,q) table off the generating function
HodgeDiamond hodge_from_e(const LaurentBiPoly& e, int n, int r);

/* ---- closed forms ---- */

// face duality of a reflexive polar pair: face id of p -> face id of pp
std::vector<int> polar_face_duality(const Polytope& p, const Polytope& pp);

// h^{1,1} of the generic anticanonical hypersurface of a 4-dim reflexive
// polytope (sums over faces of polar(delta))
TermBreakdown h11_hypersurface(const Polytope& delta);

// Theorem-route breakdowns for n = 5, r = 2 complete intersections.
// When np is supplied, the indecomposable variant refuses decomposable
// partitions with Decomposable.
TermBreakdown h11_ci_generic(const CayleyPair& cp);
TermBreakdown h11_ci_indecomposable(const CayleyPair& cp,
                                    const NefPartition* np = nullptr);

enum class CiMode { Generic, Indecomposable };
// h^{2,1} = h^{1,1} of the mirror: same formula on the swapped pair
TermBreakdown h21_ci(const CayleyPair& cp, CiMode mode);

struct AuxiliaryHodge {
  TermBreakdown h33, h23, h32;
};
AuxiliaryHodge auxiliary_hodge(const CayleyPair& cp);

struct RelationCheck {
  std::string name;
  bool ok;
  std::string detail;  // offending face/value when not ok
};
struct ConsistencyReport {
  std::vector<RelationCheck> checks;
  bool all_ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};
// Verifies the vanishing/Pick relations that hold for indecomposable
// partitions; throws Decomposable when np is supplied and decomposable,
// RelationViolated when a relation fails.
ConsistencyReport consistency_relations(const CayleyPair& cp,
                                        const NefPartition* np = nullptr);

/* ---- ample case ---- */

// true iff a is a Minkowski summand of b: mu*b = a + c for some positive
// integer mu and lattice polytope c
bool is_minkowski_summand(const std::vector<IntVec>& a,
                          const std::vector<IntVec>& b);
bool is_minkowski_summand(const Polytope& a, const Polytope& b);

std::pair<TermBreakdown, TermBreakdown> ample_case_hodge(const NefPartition& np);

/* ---- cross-route checking ---- */

struct CrossCheckResult {
  HodgeDiamond diamond;
  bool ok = false;
};
// runs e_poly and compares the extracted (h11, h21) with the closed-form
// totals; throws CrossCheckFailed on disagreement
CrossCheckResult cross_check(const CayleyPair& cp, const Int& h11,
                             const Int& h21, const EPolyOptions& opts = {});

}  // namespace hodge
