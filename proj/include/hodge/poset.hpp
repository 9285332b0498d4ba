/*
  Eulerian poset interval machinery over face lattices.

  H, G are univariate recursions over chains; B is the two-variable
  invariant defined by a convolution against G. All three depend only on
  the flag f-vector of the interval, which is what the shared memo table
  is keyed by; a no-memo mode bypasses that key so tests can guard
  against key collisions (per-interval results are then recomputed from
  the recursion each time).
*/

#pragma once

#include "hodge/errors.hpp"
#include "hodge/ints.hpp"
#include "hodge/polytope.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

namespace hodge {

/* ---- exact integer polynomials ---- */

struct UniPoly {
  std::vector<Int> c;  // c[i] is the coefficient of t^i; trailing zeros trimmed

  UniPoly() = default;
  explicit UniPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }
  static UniPoly one() { return UniPoly({Int(1)}); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for 0
  Int coeff(std::size_t i) const { return i < c.size() ? c[i] : Int(0); }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  bool operator==(const UniPoly& o) const { return c == o.c; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }
};

// (t - 1)^k
UniPoly t_minus_one_pow(std::size_t k);

struct LaurentBiPoly {
  // (u exponent, v exponent) -> coefficient; zero coefficients never stored
  std::map<std::pair<int, int>, Int> m;

  static LaurentBiPoly one() {
    LaurentBiPoly p;
    p.m[{0, 0}] = 1;
    return p;
  }
  bool is_zero() const { return m.empty(); }
  Int coeff(int i, int j) const {
    auto it = m.find({i, j});
    return it == m.end() ? Int(0) : it->second;
  }
  void add(int i, int j, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = m.emplace(std::make_pair(i, j), c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) m.erase(it);
    }
  }
  LaurentBiPoly operator+(const LaurentBiPoly& o) const;
  LaurentBiPoly operator-(const LaurentBiPoly& o) const;
  LaurentBiPoly operator*(const LaurentBiPoly& o) const;
  // multiply by u^a v^b
  LaurentBiPoly shifted(int a, int b) const;
  // substitute u -> 1/u
  LaurentBiPoly invert_u() const;
  bool operator==(const LaurentBiPoly& o) const { return m == o.m; }
  bool operator!=(const LaurentBiPoly& o) const { return !(*this == o); }

  int min_u() const;
  int max_u() const;
  int min_v() const;
  int max_v() const;
};

// p(t) substituted with t -> u^a v^b (a, b may be negative)
LaurentBiPoly substitute(const UniPoly& p, int a, int b);

/* ---- intervals ---- */

struct Interval {
  const FaceLattice* lattice = nullptr;
  int bottom = -1, top = -1;
  int rank = 0;                 // dim(top) - dim(bottom)
  std::vector<int> elements;    // face ids of [bottom, top], sorted by dim
  std::vector<Int> flag_vector; // chain counts by internal-rank subsets
};

// chain-count flag vector of [x, y]: entry for bitmask S over internal
// ranks 1..rank-1 counts chains hitting exactly the ranks in S
std::vector<Int> flag_vector_of(const FaceLattice& fl, int x, int y);

// materialize the subposet [x, y]; throws NotComparable
Interval interval(const FaceLattice& fl, int x, int y);

/* ---- calculator ---- */

class IntervalCalc {
 public:
  // use_flag_memo = false bypasses the flag-vector key (verification mode)
  explicit IntervalCalc(const FaceLattice& fl, bool use_flag_memo = true);

  const UniPoly& h(int x, int y);
  const UniPoly& g(int x, int y);
  const LaurentBiPoly& b(int x, int y);
  // B_{[x,y]}(u^{-1}, v)
  LaurentBiPoly b_inv_u(int x, int y);

  // re-evaluates the defining convolution of the B recursion for [x, y]
  // and checks it equals G(uv) exactly
  bool verify_convolution(int x, int y);

  const FaceLattice& lattice() const { return fl_; }

 private:
  struct Entry {
    UniPoly h, g;
    LaurentBiPoly b;
    bool has_h = false, has_g = false, has_b = false;
  };
  Entry& entry(int x, int y);

  struct FlagEntry {
    UniPoly h, g;
    LaurentBiPoly b;
    bool has = false;
  };

  const FaceLattice& fl_;
  bool use_flag_memo_;
  std::map<std::pair<int, int>, Entry> pair_memo_;
  std::map<std::vector<Int>, FlagEntry> flag_memo_;
  std::map<std::pair<int, int>, std::vector<Int>> flag_of_pair_;
  std::mutex mu_;

  const std::vector<Int>& flag_key(int x, int y);
  void compute_all(int x, int y, Entry& e);
};

// convenience entry points matching the per-operation contracts
UniPoly h_poly(const Interval& iv);
UniPoly g_poly(const Interval& iv);
LaurentBiPoly b_poly(const Interval& iv);
LaurentBiPoly eval_b_at(const Interval& iv);  // B(u^{-1}, v)

}  // namespace hodge
