#include "hodge/poset.hpp"

#include <algorithm>
#include <cassert>

namespace hodge {

/* ------------------------------------------------------------------ */
/* polynomial arithmetic                                                */
/* ------------------------------------------------------------------ */

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Int> r(std::max(c.size(), o.c.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) r[i] += c[i];
  for (std::size_t i = 0; i < o.c.size(); ++i) r[i] += o.c[i];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  std::vector<Int> r(std::max(c.size(), o.c.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) r[i] += c[i];
  for (std::size_t i = 0; i < o.c.size(); ++i) r[i] -= o.c[i];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Int> r(c.size() + o.c.size() - 1, 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
  return UniPoly(std::move(r));
}

UniPoly t_minus_one_pow(std::size_t k) {
  UniPoly r = UniPoly::one();
  UniPoly base(std::vector<Int>{Int(-1), Int(1)});
  for (std::size_t i = 0; i < k; ++i) r = r * base;
  return r;
}

LaurentBiPoly LaurentBiPoly::operator+(const LaurentBiPoly& o) const {
  LaurentBiPoly r = *this;
  for (const auto& [k, v] : o.m) r.add(k.first, k.second, v);
  return r;
}

LaurentBiPoly LaurentBiPoly::operator-(const LaurentBiPoly& o) const {
  LaurentBiPoly r = *this;
  for (const auto& [k, v] : o.m) r.add(k.first, k.second, -v);
  return r;
}

LaurentBiPoly LaurentBiPoly::operator*(const LaurentBiPoly& o) const {
  LaurentBiPoly r;
  for (const auto& [ka, va] : m)
    for (const auto& [kb, vb] : o.m)
      r.add(ka.first + kb.first, ka.second + kb.second, va * vb);
  return r;
}

LaurentBiPoly LaurentBiPoly::shifted(int a, int b) const {
  LaurentBiPoly r;
  for (const auto& [k, v] : m) r.m[{k.first + a, k.second + b}] = v;
  return r;
}

LaurentBiPoly LaurentBiPoly::invert_u() const {
  LaurentBiPoly r;
  for (const auto& [k, v] : m) r.m[{-k.first, k.second}] = v;
  return r;
}

int LaurentBiPoly::min_u() const {
  int r = 0;
  bool first = true;
  for (const auto& [k, v] : m) {
    (void)v;
    if (first || k.first < r) r = k.first;
    first = false;
  }
  return r;
}
int LaurentBiPoly::max_u() const {
  int r = 0;
  bool first = true;
  for (const auto& [k, v] : m) {
    (void)v;
    if (first || k.first > r) r = k.first;
    first = false;
  }
  return r;
}
int LaurentBiPoly::min_v() const {
  int r = 0;
  bool first = true;
  for (const auto& [k, v] : m) {
    (void)v;
    if (first || k.second < r) r = k.second;
    first = false;
  }
  return r;
}
int LaurentBiPoly::max_v() const {
  int r = 0;
  bool first = true;
  for (const auto& [k, v] : m) {
    (void)v;
    if (first || k.second > r) r = k.second;
    first = false;
  }
  return r;
}

LaurentBiPoly substitute(const UniPoly& p, int a, int b) {
  LaurentBiPoly r;
  for (std::size_t i = 0; i < p.c.size(); ++i)
    if (p.c[i] != 0)
      r.m[{a * static_cast<int>(i), b * static_cast<int>(i)}] = p.c[i];
  return r;
}

/* ------------------------------------------------------------------ */
/* intervals and flag vectors                                          */
/* ------------------------------------------------------------------ */

std::vector<Int> flag_vector_of(const FaceLattice& fl, int x, int y) {
  const int d = fl.face(y).dim - fl.face(x).dim;
  // elements grouped by internal rank 0..d
  std::vector<std::vector<int>> layer(static_cast<std::size_t>(d) + 1);
  for (std::size_t i = 0; i < fl.faces().size(); ++i) {
    int z = static_cast<int>(i);
    if (fl.leq(x, z) && fl.leq(z, y))
      layer[static_cast<std::size_t>(fl.face(z).dim - fl.face(x).dim)]
          .push_back(z);
  }
  const int internal = d > 0 ? d - 1 : 0;
  std::vector<Int> flag(static_cast<std::size_t>(1)
                        << static_cast<std::size_t>(internal));
  for (std::size_t mask = 0; mask < flag.size(); ++mask) {
    // ranks selected by mask, ascending
    std::vector<int> sel;
    for (int r = 1; r < d; ++r)
      if (mask & (std::size_t{1} << (r - 1))) sel.push_back(r);
    // DP along selected layers
    std::vector<std::pair<int, Int>> cur{{x, Int(1)}};
    for (int r : sel) {
      std::vector<std::pair<int, Int>> nxt;
      for (int z : layer[static_cast<std::size_t>(r)]) {
        Int s = 0;
        for (const auto& [w, cnt] : cur)
          if (fl.leq(w, z)) s += cnt;
        if (s != 0) nxt.emplace_back(z, s);
      }
      cur = std::move(nxt);
    }
    Int total = 0;
    for (const auto& [w, cnt] : cur)
      if (fl.leq(w, y)) total += cnt;
    flag[mask] = total;
  }
  return flag;
}

Interval interval(const FaceLattice& fl, int x, int y) {
  if (!fl.leq(x, y)) throw NotComparable("interval: x is not below y");
  Interval iv;
  iv.lattice = &fl;
  iv.bottom = x;
  iv.top = y;
  iv.rank = fl.face(y).dim - fl.face(x).dim;
  for (std::size_t i = 0; i < fl.faces().size(); ++i) {
    int z = static_cast<int>(i);
    if (fl.leq(x, z) && fl.leq(z, y)) iv.elements.push_back(z);
  }
  std::sort(iv.elements.begin(), iv.elements.end(), [&](int a, int b) {
    return fl.face(a).dim != fl.face(b).dim ? fl.face(a).dim < fl.face(b).dim
                                            : a < b;
  });
  iv.flag_vector = flag_vector_of(fl, x, y);
  return iv;
}

/* ------------------------------------------------------------------ */
/* calculator                                                          */
/* ------------------------------------------------------------------ */

IntervalCalc::IntervalCalc(const FaceLattice& fl, bool use_flag_memo)
    : fl_(fl), use_flag_memo_(use_flag_memo) {}

const std::vector<Int>& IntervalCalc::flag_key(int x, int y) {
  auto it = flag_of_pair_.find({x, y});
  if (it == flag_of_pair_.end())
    it = flag_of_pair_.emplace(std::make_pair(x, y), flag_vector_of(fl_, x, y))
             .first;
  return it->second;
}

IntervalCalc::Entry& IntervalCalc::entry(int x, int y) {
  auto it = pair_memo_.find({x, y});
  if (it == pair_memo_.end())
    it = pair_memo_.emplace(std::make_pair(x, y), Entry{}).first;
  return it->second;
}

void IntervalCalc::compute_all(int x, int y, Entry& e) {
  const int d = fl_.face(y).dim - fl_.face(x).dim;

  if (d == 0) {
    e.h = UniPoly::one();
    e.g = UniPoly::one();
    e.b = LaurentBiPoly::one();
    e.has_h = e.has_g = e.has_b = true;
    return;
  }

  if (use_flag_memo_) {
    const auto& key = flag_key(x, y);
    auto fit = flag_memo_.find(key);
    if (fit != flag_memo_.end() && fit->second.has) {
      e.h = fit->second.h;
      e.g = fit->second.g;
      e.b = fit->second.b;
      e.has_h = e.has_g = e.has_b = true;
      return;
    }
  }

  // elements of (x, y]
  std::vector<int> upper;
  for (std::size_t i = 0; i < fl_.faces().size(); ++i) {
    int z = static_cast<int>(i);
    if (z != x && fl_.leq(x, z) && fl_.leq(z, y)) upper.push_back(z);
  }

  // H = sum_{x < z <= y} (t-1)^{rk z - 1} G_{[z, y]}
  UniPoly hp;
  for (int z : upper) {
    const int rk = fl_.face(z).dim - fl_.face(x).dim;
    hp = hp + t_minus_one_pow(static_cast<std::size_t>(rk - 1)) * g(z, y);
  }
  e.h = hp;
  e.has_h = true;

  // G = tau_{< d/2} (1 - t) H
  UniPoly one_minus_t(std::vector<Int>{Int(1), Int(-1)});
  UniPoly prod = one_minus_t * hp;
  std::vector<Int> gc;
  for (std::size_t i = 0; i < prod.c.size(); ++i)
    if (2 * static_cast<int>(i) < d) gc.push_back(prod.c[i]);
  e.g = UniPoly(std::move(gc));
  // committed before the B convolution below: its z = x term references
  // G of this same interval
  e.has_g = true;

  // B = G(uv) - sum_{x <= z < y} B_{[x,z]}(u,v) u^{d - rk z} G_{[z,y]}(1/u v)
  LaurentBiPoly bp = substitute(e.g, 1, 1);
  for (std::size_t i = 0; i < fl_.faces().size(); ++i) {
    int z = static_cast<int>(i);
    if (z == y || !fl_.leq(x, z) || !fl_.leq(z, y)) continue;
    const int rk = fl_.face(z).dim - fl_.face(x).dim;
    LaurentBiPoly term = b(x, z).shifted(d - rk, 0) * substitute(g(z, y), -1, 1);
    bp = bp - term;
  }
  e.b = bp;
  e.has_b = true;
  if (use_flag_memo_) {
    FlagEntry fe;
    fe.h = e.h;
    fe.g = e.g;
    fe.b = e.b;
    fe.has = true;
    flag_memo_[flag_key(x, y)] = std::move(fe);
  }
}

const UniPoly& IntervalCalc::h(int x, int y) {
  Entry& e = entry(x, y);
  if (!e.has_h) compute_all(x, y, e);
  return e.h;
}

const UniPoly& IntervalCalc::g(int x, int y) {
  Entry& e = entry(x, y);
  if (!e.has_g) compute_all(x, y, e);
  return e.g;
}

const LaurentBiPoly& IntervalCalc::b(int x, int y) {
  Entry& e = entry(x, y);
  if (!e.has_b) compute_all(x, y, e);
  return e.b;
}

LaurentBiPoly IntervalCalc::b_inv_u(int x, int y) { return b(x, y).invert_u(); }

bool IntervalCalc::verify_convolution(int x, int y) {
  const int d = fl_.face(y).dim - fl_.face(x).dim;
  LaurentBiPoly lhs;
  for (std::size_t i = 0; i < fl_.faces().size(); ++i) {
    int z = static_cast<int>(i);
    if (!fl_.leq(x, z) || !fl_.leq(z, y)) continue;
    const int rk = fl_.face(z).dim - fl_.face(x).dim;
    lhs = lhs + b(x, z).shifted(d - rk, 0) * substitute(g(z, y), -1, 1);
  }
  return lhs == substitute(g(x, y), 1, 1);
}

/* ---- free entries over materialized intervals ---- */

UniPoly h_poly(const Interval& iv) {
  IntervalCalc calc(*iv.lattice);
  return calc.h(iv.bottom, iv.top);
}

UniPoly g_poly(const Interval& iv) {
  IntervalCalc calc(*iv.lattice);
  return calc.g(iv.bottom, iv.top);
}

LaurentBiPoly b_poly(const Interval& iv) {
  IntervalCalc calc(*iv.lattice);
  return calc.b(iv.bottom, iv.top);
}

LaurentBiPoly eval_b_at(const Interval& iv) {
  return b_poly(iv).invert_u();
}

}  // namespace hodge
