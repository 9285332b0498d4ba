#include "hodge/polytope.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>

namespace hodge {

/* ------------------------------------------------------------------ */
/* Double description kernel                                          */
/* ------------------------------------------------------------------ */

namespace {

struct DDRay {
  IntVec v;
  Bits zero;  // processed constraints this ray is tight on
};

}  // namespace

DualDescription dual_cone(const std::vector<IntVec>& constraints_in,
                          std::size_t dim) {
  // drop zero constraints, keep order
  std::vector<IntVec> cs;
  for (const auto& c : constraints_in)
    if (!is_zero_vec(c)) cs.push_back(c);

  const std::size_t m = cs.size();
  std::vector<IntVec> lineality;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVec e(dim, 0);
    e[i] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<DDRay> rays;

  // exact tight set of a ray over the constraints processed so far;
  // accidental cancellations mean combination bookkeeping undercounts, and
  // the adjacency test needs the true sets
  auto zero_set_of = [&](const IntVec& v, std::size_t upto) {
    Bits z(m);
    for (std::size_t j = 0; j <= upto; ++j)
      if (dot(v, cs[j]) == 0) z.set(j);
    return z;
  };

  for (std::size_t ci = 0; ci < m; ++ci) {
    const IntVec& a = cs[ci];

    std::size_t pivot = lineality.size();
    for (std::size_t i = 0; i < lineality.size(); ++i)
      if (dot(lineality[i], a) != 0) {
        pivot = i;
        break;
      }

    if (pivot < lineality.size()) {
      IntVec l0 = lineality[pivot];
      Int d0 = dot(l0, a);
      if (d0 < 0) {
        l0 = vec_neg(l0);
        d0 = -d0;
      }
      std::vector<IntVec> new_lin;
      for (std::size_t i = 0; i < lineality.size(); ++i) {
        if (i == pivot) continue;
        Int di = dot(lineality[i], a);
        IntVec w = vec_sub(vec_scale(lineality[i], d0), vec_scale(l0, di));
        if (!is_zero_vec(w)) new_lin.push_back(primitive(w));
      }
      for (auto& r : rays) {
        Int dr = dot(r.v, a);
        if (dr != 0)
          r.v = primitive(vec_sub(vec_scale(r.v, d0), vec_scale(l0, dr)));
        r.zero = zero_set_of(r.v, ci);
      }
      Bits z = zero_set_of(l0, ci);
      rays.push_back(DDRay{std::move(l0), std::move(z)});
      lineality = std::move(new_lin);
      continue;
    }

    // lineality orthogonal to a: split rays by sign
    std::vector<Int> dots(rays.size());
    bool any_neg = false;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      dots[i] = dot(rays[i].v, a);
      if (dots[i] < 0) any_neg = true;
    }
    if (!any_neg) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (dots[i] == 0) rays[i].zero.set(ci);
      continue;
    }

    std::vector<DDRay> next;
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (dots[i] > 0) {
        pos.push_back(i);
        next.push_back(rays[i]);
      } else if (dots[i] == 0) {
        DDRay r = rays[i];
        r.zero.set(ci);
        next.push_back(std::move(r));
      } else {
        neg.push_back(i);
      }
    }
    for (std::size_t ip : pos) {
      for (std::size_t in : neg) {
        Bits common = rays[ip].zero & rays[in].zero;
        // combinatorial adjacency: no third ray is tight on the whole
        // common set
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size(); ++k) {
          if (k == ip || k == in) continue;
          if (common.is_subset_of(rays[k].zero)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        IntVec w = primitive(vec_sub(vec_scale(rays[in].v, dots[ip]),
                                     vec_scale(rays[ip].v, dots[in])));
        Bits z = zero_set_of(w, ci);
        next.push_back(DDRay{std::move(w), std::move(z)});
      }
    }
    rays = std::move(next);
  }

  DualDescription out;
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  std::sort(out.rays.begin(), out.rays.end());
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()),
                 out.rays.end());
  out.lineality = std::move(lineality);
  std::sort(out.lineality.begin(), out.lineality.end());
  return out;
}

std::vector<std::vector<Rat>> enumerate_h_vertices(
    const std::vector<Facet>& facets, std::size_t dim) {
  std::vector<IntVec> cs;
  for (const auto& f : facets) {
    IntVec c = f.normal;
    c.push_back(f.offset);
    cs.push_back(std::move(c));
  }
  DualDescription dd = dual_cone(cs, dim + 1);
  if (!dd.lineality.empty())
    throw NotFullDimensional("enumerate_h_vertices: unbounded (lineality)");
  std::vector<std::vector<Rat>> verts;
  bool has_positive = false, has_zero = false;
  for (const auto& r : dd.rays) {
    const Int& t = r[dim];
    if (t > 0) {
      has_positive = true;
      std::vector<Rat> v(dim);
      for (std::size_t i = 0; i < dim; ++i) v[i] = Rat(r[i], t);
      verts.push_back(std::move(v));
    } else if (t == 0) {
      has_zero = true;
    }
  }
  if (has_zero && has_positive)
    throw NotFullDimensional("enumerate_h_vertices: unbounded polyhedron");
  if (!has_positive) return {};  // empty polyhedron
  std::sort(verts.begin(), verts.end());
  return verts;
}

/* ------------------------------------------------------------------ */
/* Hull                                                               */
/* ------------------------------------------------------------------ */

Polytope Polytope::hull(const std::vector<IntVec>& points_in) {
  if (points_in.empty()) throw NotFullDimensional("hull: no points");
  const std::size_t d = points_in[0].size();
  std::vector<IntVec> pts = points_in;
  for (const auto& p : pts)
    if (p.size() != d) throw DimensionMismatch("hull: mixed point dimensions");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::vector<IntVec> cs;
  cs.reserve(pts.size());
  for (const auto& p : pts) {
    IntVec c = p;
    c.push_back(1);
    cs.push_back(std::move(c));
  }
  DualDescription dd = dual_cone(cs, d + 1);
  if (!dd.lineality.empty())
    throw NotFullDimensional("hull: point set is not full-dimensional");

  Polytope p;
  p.dim_ = d;
  for (const auto& r : dd.rays) {
    Facet f;
    f.normal = IntVec(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(d));
    f.offset = r[d];
    // a facet spanned by lattice points forces gcd(normal) | offset, so a
    // primitive ray already has a primitive normal
    p.facets_.push_back(std::move(f));
  }
  std::sort(p.facets_.begin(), p.facets_.end());

  // vertices: points whose tight facet normals span the ambient space
  for (const auto& pt : pts) {
    std::vector<IntVec> tight;
    for (const auto& f : p.facets_)
      if (dot(f.normal, pt) + f.offset == 0) tight.push_back(f.normal);
    if (tight.size() >= d && rank_of(tight) == d) p.vertices_.push_back(pt);
  }
  std::sort(p.vertices_.begin(), p.vertices_.end());
  return p;
}

Polytope::Polytope() = default;
Polytope::~Polytope() = default;

Polytope::Polytope(const Polytope& o)
    : dim_(o.dim_), vertices_(o.vertices_), facets_(o.facets_) {}

Polytope& Polytope::operator=(const Polytope& o) {
  if (this != &o) {
    dim_ = o.dim_;
    vertices_ = o.vertices_;
    facets_ = o.facets_;
    std::scoped_lock lk(mu_);
    lattice_.reset();
    counts_.clear();
  }
  return *this;
}

Polytope::Polytope(Polytope&& o) noexcept
    : dim_(o.dim_),
      vertices_(std::move(o.vertices_)),
      facets_(std::move(o.facets_)),
      lattice_(std::move(o.lattice_)),
      counts_(std::move(o.counts_)) {}

Polytope& Polytope::operator=(Polytope&& o) noexcept {
  if (this != &o) {
    dim_ = o.dim_;
    vertices_ = std::move(o.vertices_);
    facets_ = std::move(o.facets_);
    lattice_ = std::move(o.lattice_);
    counts_ = std::move(o.counts_);
  }
  return *this;
}

/* ------------------------------------------------------------------ */
/* Face lattice                                                       */
/* ------------------------------------------------------------------ */

const std::vector<int>& FaceLattice::faces_of_dim(int d) const {
  static const std::vector<int> kEmpty;
  const int idx = d + 1;
  if (idx < 0 || idx >= static_cast<int>(by_dim_.size())) return kEmpty;
  return by_dim_[static_cast<std::size_t>(idx)];
}

int FaceLattice::face_by_vertex_set(const Bits& vs) const {
  auto it = by_vertex_set_.find(vs);
  return it == by_vertex_set_.end() ? -1 : it->second;
}

bool FaceLattice::leq(int a, int b) const {
  return face(a).vertex_set.is_subset_of(face(b).vertex_set);
}

std::vector<std::size_t> FaceLattice::f_vector() const {
  std::vector<std::size_t> f(by_dim_.size());
  for (std::size_t i = 0; i < by_dim_.size(); ++i) f[i] = by_dim_[i].size();
  return f;
}

Int FaceLattice::mobius(int a, int b) const {
  if (!leq(a, b)) throw NotComparable("mobius: faces not comparable");
  std::map<int, Int> mu;  // mu(a, z) for z in [a, b]
  std::vector<int> elems;
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    int z = static_cast<int>(i);
    if (leq(a, z) && leq(z, b)) elems.push_back(z);
  }
  std::sort(elems.begin(), elems.end(), [&](int x, int y) {
    return face(x).dim < face(y).dim;
  });
  for (int z : elems) {
    Int s = 0;
    for (int w : elems)
      if (w != z && leq(w, z)) s += mu[w];
    mu[z] = (z == a) ? Int(1) : -s;
  }
  return mu[b];
}

const FaceLattice& Polytope::face_lattice() const {
  std::scoped_lock lk(mu_);
  if (lattice_) return *lattice_;

  auto fl = std::make_unique<FaceLattice>();
  const std::size_t nv = vertices_.size(), nf = facets_.size();

  std::vector<Bits> fverts(nf, Bits(nv));  // facet -> incident vertices
  for (std::size_t j = 0; j < nf; ++j)
    for (std::size_t i = 0; i < nv; ++i)
      if (dot(facets_[j].normal, vertices_[i]) + facets_[j].offset == 0)
        fverts[j].set(i);

  auto closure = [&](const Bits& s, Bits& facet_set_out) -> Bits {
    facet_set_out = Bits(nf);
    Bits cl = Bits::full(nv);
    bool any = false;
    for (std::size_t j = 0; j < nf; ++j) {
      if (s.is_subset_of(fverts[j])) {
        facet_set_out.set(j);
        cl = cl & fverts[j];
        any = true;
      }
    }
    if (!any) cl = Bits::full(nv);  // only the full face lies on no facet
    return cl;
  };

  std::map<Bits, Bits> seen;  // vertex set -> facet set
  Bits top = Bits::full(nv);
  Bits top_facets(nf);
  seen.emplace(top, top_facets);
  std::vector<Bits> work{top};
  while (!work.empty()) {
    Bits cur = std::move(work.back());
    work.pop_back();
    for (std::size_t j = 0; j < nf; ++j) {
      Bits inter = cur & fverts[j];
      if (inter == cur) continue;
      Bits fs;
      Bits cl = closure(inter, fs);
      if (!seen.count(cl)) {
        seen.emplace(cl, fs);
        work.push_back(cl);
      }
    }
  }
  if (!seen.count(Bits(nv))) {
    Bits all_facets = Bits::full(nf);
    seen.emplace(Bits(nv), all_facets);
  }

  auto face_dim = [&](const Bits& s) -> int {
    auto mem = s.members();
    if (mem.empty()) return -1;
    if (mem.size() == 1) return 0;
    std::vector<IntVec> diffs;
    for (std::size_t i = 1; i < mem.size(); ++i)
      diffs.push_back(vec_sub(vertices_[mem[i]], vertices_[mem[0]]));
    return static_cast<int>(rank_of(diffs));
  };

  for (auto& [vs, fs] : seen) {
    Face f;
    f.vertex_set = vs;
    f.facet_set = fs;
    f.dim = face_dim(vs);
    fl->faces_.push_back(std::move(f));
  }
  std::sort(fl->faces_.begin(), fl->faces_.end(),
            [](const Face& a, const Face& b) {
              return a.dim != b.dim ? a.dim < b.dim
                                    : a.vertex_set < b.vertex_set;
            });
  fl->top_dim_ = static_cast<int>(dim_);
  fl->by_dim_.assign(dim_ + 2, {});
  for (std::size_t i = 0; i < fl->faces_.size(); ++i) {
    const Face& f = fl->faces_[i];
    fl->by_dim_[static_cast<std::size_t>(f.dim + 1)].push_back(
        static_cast<int>(i));
    fl->by_vertex_set_.emplace(f.vertex_set, static_cast<int>(i));
    if (f.dim == -1) fl->empty_id_ = static_cast<int>(i);
    if (f.dim == static_cast<int>(dim_)) fl->full_id_ = static_cast<int>(i);
  }
  lattice_ = std::move(fl);
  return *lattice_;
}

/* ------------------------------------------------------------------ */
/* Lattice point counting                                             */
/* ------------------------------------------------------------------ */

namespace {

struct Ineq {
  IntVec a;  // coefficients in loop-depth order (length = top_var + 1)
  Int c;     // inequality: sum a_j t_j + k*c >= 0
};

}  // namespace

struct Polytope::FaceCounts {
  int s = 0;  // intrinsic dimension of the face
  std::vector<std::vector<Ineq>> levels;  // levels[i]: top variable == i
  std::vector<Ineq> original;             // full system, depth indexing
  std::map<long, std::pair<Int, Int>> counts;
  std::mutex mu;
};

namespace {

// Fourier-Motzkin preparation: returns per-depth bound inequalities plus
// the reindexed original system. Variable order chosen greedily to limit
// intermediate blowup; enumeration assigns depth 0 first.
void build_fm(const std::vector<Facet>& facets, std::size_t s,
              std::vector<std::vector<Ineq>>& levels,
              std::vector<Ineq>& original) {
  // greedy elimination order: repeatedly eliminate the variable with the
  // smallest pos*neg product
  std::vector<Ineq> sys;
  for (const auto& f : facets) sys.push_back(Ineq{f.normal, f.offset});
  std::vector<std::size_t> elim_order;  // first entry eliminated first
  std::vector<bool> gone(s, false);
  {
    std::vector<Ineq> cur = sys;
    for (std::size_t step = 0; step + 1 < s; ++step) {
      std::size_t best = s;
      long best_score = 0;
      for (std::size_t v = 0; v < s; ++v) {
        if (gone[v]) continue;
        long p = 0, n = 0;
        for (const auto& q : cur) {
          if (q.a[v] > 0) ++p;
          else if (q.a[v] < 0) ++n;
        }
        long score = p * n - (p + n);
        if (best == s || score < best_score) {
          best = v;
          best_score = score;
        }
      }
      elim_order.push_back(best);
      gone[best] = true;
      // eliminate var best from cur
      std::vector<Ineq> keep;
      std::vector<std::size_t> pos, neg;
      for (std::size_t i = 0; i < cur.size(); ++i) {
        if (cur[i].a[best] > 0) pos.push_back(i);
        else if (cur[i].a[best] < 0) neg.push_back(i);
        else keep.push_back(cur[i]);
      }
      std::map<IntVec, Int> dedup;
      for (auto ip : pos)
        for (auto in : neg) {
          const Ineq &P = cur[ip], &N = cur[in];
          IntVec w(s, 0);
          Int mp = -N.a[best], mn = P.a[best];
          for (std::size_t j = 0; j < s; ++j)
            w[j] = mp * P.a[j] + mn * N.a[j];
          Int c = mp * P.c + mn * N.c;
          Int g = vec_gcd(w);
          g = boost::multiprecision::gcd(g, c);
          if (g > 1) {
            for (auto& x : w) x /= g;
            c /= g;
          }
          if (is_zero_vec(w)) continue;  // 0 + k*c >= 0, c >= 0 for feasible
          auto it = dedup.find(w);
          if (it == dedup.end()) dedup.emplace(std::move(w), std::move(c));
          else if (c < it->second) it->second = c;
        }
      for (auto& [w, c] : dedup) keep.push_back(Ineq{w, c});
      cur = std::move(keep);
    }
    for (std::size_t v = 0; v < s; ++v)
      if (!gone[v]) elim_order.push_back(v);
  }

  // depth i corresponds to original variable perm[i]; the last eliminated
  // variable is assigned first
  std::vector<std::size_t> perm(s);
  for (std::size_t i = 0; i < s; ++i) perm[i] = elim_order[s - 1 - i];
  std::vector<std::size_t> inv(s);
  for (std::size_t i = 0; i < s; ++i) inv[perm[i]] = i;

  auto reindex = [&](const Ineq& q) {
    Ineq r;
    r.a.assign(s, 0);
    for (std::size_t j = 0; j < s; ++j) r.a[inv[j]] = q.a[j];
    r.c = q.c;
    return r;
  };

  original.clear();
  for (const auto& q : sys) original.push_back(reindex(q));

  levels.assign(s, {});
  std::vector<Ineq> cur = original;
  for (std::size_t depth = s; depth-- > 0;) {
    std::vector<Ineq> keep;
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (cur[i].a[depth] > 0) pos.push_back(i);
      else if (cur[i].a[depth] < 0) neg.push_back(i);
      else keep.push_back(cur[i]);
    }
    for (auto i : pos) levels[depth].push_back(cur[i]);
    for (auto i : neg) levels[depth].push_back(cur[i]);
    for (auto& q : levels[depth]) q.a.resize(depth + 1);
    std::map<IntVec, Int> dedup;
    for (auto ip : pos)
      for (auto in : neg) {
        const Ineq &P = cur[ip], &N = cur[in];
        IntVec w(s, 0);
        Int mp = -N.a[depth], mn = P.a[depth];
        for (std::size_t j = 0; j < depth; ++j)
          w[j] = mp * P.a[j] + mn * N.a[j];
        Int c = mp * P.c + mn * N.c;
        Int g = vec_gcd(w);
        g = boost::multiprecision::gcd(g, c);
        if (g > 1) {
          for (auto& x : w) x /= g;
          c /= g;
        }
        if (is_zero_vec(w)) continue;
        auto it = dedup.find(w);
        if (it == dedup.end()) dedup.emplace(std::move(w), std::move(c));
        else if (c < it->second) it->second = c;
      }
    for (auto& [w, c] : dedup) keep.push_back(Ineq{w, c});
    cur = std::move(keep);
  }
}

// Nested-loop enumeration of lattice points of the k-dilate; counts both
// all points and relative-interior points in one pass.
void enumerate_counts(const std::vector<std::vector<Ineq>>& levels,
                      const std::vector<Ineq>& original, std::size_t s,
                      long k, Int& total, Int& interior) {
  total = 0;
  interior = 0;
  IntVec t(s, 0);
  Int kk(k);

  // recursive lambda over depths
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    bool have_lo = false, have_hi = false;
    Int lo, hi;
    for (const auto& q : levels[depth]) {
      Int part = q.c * kk;
      for (std::size_t j = 0; j < depth; ++j) part += q.a[j] * t[j];
      const Int& coef = q.a[depth];
      if (coef > 0) {
        Int b = ceil_div(-part, coef);
        if (!have_lo || b > lo) {
          lo = b;
          have_lo = true;
        }
      } else {
        Int b = floor_div(part, -coef);
        if (!have_hi || b < hi) {
          hi = b;
          have_hi = true;
        }
      }
    }
    if (!have_lo || !have_hi)
      throw NotFullDimensional("enumerate_counts: unbounded direction");
    for (Int v = lo; v <= hi; ++v) {
      t[depth] = v;
      if (depth + 1 == s) {
        ++total;
        bool strict = true;
        for (const auto& q : original) {
          Int val = q.c * kk;
          for (std::size_t j = 0; j < s; ++j) val += q.a[j] * t[j];
          if (val <= 0) {
            strict = false;
            break;
          }
        }
        if (strict) ++interior;
      } else {
        self(self, depth + 1);
      }
    }
  };
  rec(rec, 0);
}

}  // namespace

Polytope::FaceCounts& Polytope::realization(const Bits& vertex_set) const {
  {
    std::scoped_lock lk(mu_);
    auto it = counts_.find(vertex_set);
    if (it != counts_.end()) return *it->second;
  }

  // build outside the lock; duplicate concurrent builds are identical and
  // the first insert wins
  auto fc = std::make_unique<FaceCounts>();
  auto mem = vertex_set.members();
  if (mem.size() == 1) {
    fc->s = 0;
  } else {
    const IntVec& v0 = vertices_[mem[0]];
    std::vector<IntVec> diffs;
    for (std::size_t i = 1; i < mem.size(); ++i)
      diffs.push_back(vec_sub(vertices_[mem[i]], v0));
    std::vector<IntVec> basis = saturated_span_basis(diffs, dim_);
    const std::size_t s = basis.size();
    fc->s = static_cast<int>(s);

    // coordinates of the face vertices in its own lattice
    IntMatrix bt(dim_, s);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < dim_; ++j) bt.at(j, i) = basis[i][j];
    std::vector<IntVec> tcoords;
    for (auto vi : mem) {
      auto sol = solve_rational(bt, vec_sub(vertices_[vi], v0));
      assert(sol);
      IntVec tc(s);
      for (std::size_t i = 0; i < s; ++i) {
        assert(boost::multiprecision::denominator((*sol)[i]) == 1);
        tc[i] = boost::multiprecision::numerator((*sol)[i]);
      }
      tcoords.push_back(std::move(tc));
    }
    Polytope q = Polytope::hull(tcoords);
    build_fm(q.facets(), s, fc->levels, fc->original);
  }
  std::scoped_lock lk(mu_);
  auto [pos, ok] = counts_.emplace(vertex_set, std::move(fc));
  (void)ok;
  return *pos->second;
}

Int Polytope::count_points(const Face& f, long k) const {
  if (f.vertex_set.none()) throw EmptyFace("count_points: empty face");
  if (k < 0) throw ValidationError("count_points: negative dilation");
  if (k == 0) return 1;
  FaceCounts& fc = realization(f.vertex_set);
  std::scoped_lock lk(fc.mu);
  auto it = fc.counts.find(k);
  if (it == fc.counts.end()) {
    Int total = 1, inter = 1;
    if (fc.s > 0)
      enumerate_counts(fc.levels, fc.original,
                       static_cast<std::size_t>(fc.s), k, total, inter);
    it = fc.counts.emplace(k, std::make_pair(total, inter)).first;
  }
  return it->second.first;
}

Int Polytope::count_interior(const Face& f, long k) const {
  if (f.vertex_set.none()) throw EmptyFace("count_interior: empty face");
  if (k < 1) throw ValidationError("count_interior: dilation must be >= 1");
  FaceCounts& fc = realization(f.vertex_set);
  std::scoped_lock lk(fc.mu);
  auto it = fc.counts.find(k);
  if (it == fc.counts.end()) {
    Int total = 1, inter = 1;
    if (fc.s > 0)
      enumerate_counts(fc.levels, fc.original,
                       static_cast<std::size_t>(fc.s), k, total, inter);
    it = fc.counts.emplace(k, std::make_pair(total, inter)).first;
  }
  return it->second.second;
}

Int Polytope::count_points(int face_id, long k) const {
  return count_points(face_lattice().face(face_id), k);
}
Int Polytope::count_interior(int face_id, long k) const {
  return count_interior(face_lattice().face(face_id), k);
}

std::vector<IntVec> Polytope::lattice_points() const {
  // direct box-free enumeration via the full face's FM system; the walk
  // below mirrors enumerate_counts but collects coordinates
  Bits all = Bits::full(vertices_.size());
  FaceCounts& fc = realization(all);
  const std::size_t s = static_cast<std::size_t>(fc.s);
  std::vector<IntVec> out;
  if (s == 0) {
    out.push_back(vertices_[0]);
    return out;
  }
  // reconstruct ambient points: x = v0 + B^T t with the same basis used in
  // realization(); recompute here for clarity
  auto mem = all.members();
  const IntVec& v0 = vertices_[mem[0]];
  std::vector<IntVec> diffs;
  for (std::size_t i = 1; i < mem.size(); ++i)
    diffs.push_back(vec_sub(vertices_[mem[i]], v0));
  std::vector<IntVec> basis = saturated_span_basis(diffs, dim_);

  // NOTE: build_fm permutes variables internally, so enumerate over the
  // original facet system instead (sizes at k=1 are small).
  std::vector<std::vector<Ineq>> levels;
  std::vector<Ineq> original;
  // t-coordinates polytope of the full face
  IntMatrix bt(dim_, s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < dim_; ++j) bt.at(j, i) = basis[i][j];
  std::vector<IntVec> tcoords;
  for (auto vi : mem) {
    auto sol = solve_rational(bt, vec_sub(vertices_[vi], v0));
    IntVec tc(s);
    for (std::size_t i = 0; i < s; ++i)
      tc[i] = boost::multiprecision::numerator((*sol)[i]);
    tcoords.push_back(std::move(tc));
  }
  Polytope q = Polytope::hull(tcoords);
  // plain per-axis bounds from vertex coordinates + filter
  IntVec lo(s), hi(s);
  for (std::size_t i = 0; i < s; ++i) {
    lo[i] = q.vertices()[0][i];
    hi[i] = q.vertices()[0][i];
    for (const auto& v : q.vertices()) {
      if (v[i] < lo[i]) lo[i] = v[i];
      if (v[i] > hi[i]) hi[i] = v[i];
    }
  }
  IntVec t(s);
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == s) {
      for (const auto& f : q.facets())
        if (dot(f.normal, t) + f.offset < 0) return;
      IntVec x = v0;
      for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < dim_; ++j) x[j] += t[i] * basis[i][j];
      out.push_back(std::move(x));
      return;
    }
    for (Int v = lo[depth]; v <= hi[depth]; ++v) {
      t[depth] = v;
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/* ------------------------------------------------------------------ */
/* Free operations                                                    */
/* ------------------------------------------------------------------ */

bool is_reflexive(const Polytope& p) {
  for (const auto& f : p.facets())
    if (f.offset != 1) return false;
  return true;
}

Polytope polar(const Polytope& p) {
  if (!is_reflexive(p)) throw NotReflexive("polar: polytope is not reflexive");
  std::vector<IntVec> normals;
  for (const auto& f : p.facets()) normals.push_back(f.normal);
  return Polytope::hull(normals);
}

std::vector<IntVec> minkowski_sum_points(const std::vector<IntVec>& a,
                                         const std::vector<IntVec>& b) {
  std::vector<IntVec> sums;
  sums.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) sums.push_back(vec_add(x, y));
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return sums;
}

Polytope minkowski_sum(const Polytope& a, const Polytope& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch("minkowski_sum: ambient dimensions differ");
  return Polytope::hull(minkowski_sum_points(a.vertices(), b.vertices()));
}

std::size_t vertex_count(const Face& f) {
  if (f.vertex_set.none()) throw EmptyFace("vertex_count: empty face");
  return f.vertex_set.count();
}

RestrictedPolytope sublattice_restrict(const std::vector<IntVec>& points) {
  if (points.empty())
    throw ValidationError("sublattice_restrict: empty point set");
  const std::size_t n = points[0].size();
  const IntVec& p0 = points[0];
  std::vector<IntVec> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    IntVec d = vec_sub(points[i], p0);
    if (!is_zero_vec(d)) diffs.push_back(std::move(d));
  }
  RestrictedPolytope out;
  if (diffs.empty()) {
    out.transform.base = p0;
    out.lattice_dim = 0;
    return out;
  }
  // generated (non-saturated) lattice basis via HNF
  HermiteResult hr = hermite_form(IntMatrix::from_rows(diffs));
  std::vector<IntVec> basis;
  for (std::size_t i = 0; i < hr.rank; ++i) basis.push_back(hr.h.row(i));
  const std::size_t s = basis.size();

  IntMatrix bt(n, s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < n; ++j) bt.at(j, i) = basis[i][j];

  // origin convention: if the ambient origin lies in the generated affine
  // lattice, it becomes the coordinate origin
  IntVec base = p0;
  {
    auto sol = solve_rational(bt, p0);
    if (sol) {
      bool integral = true;
      for (const auto& x : *sol)
        if (boost::multiprecision::denominator(x) != 1) integral = false;
      if (integral) base = IntVec(n, 0);
    }
  }

  std::vector<IntVec> tcoords;
  for (const auto& p : points) {
    auto sol = solve_rational(bt, vec_sub(p, base));
    if (!sol) throw ConsistencyError("sublattice_restrict: point outside span");
    IntVec tc(s);
    for (std::size_t i = 0; i < s; ++i) {
      if (boost::multiprecision::denominator((*sol)[i]) != 1)
        throw ConsistencyError("sublattice_restrict: non-integral coordinate");
      tc[i] = boost::multiprecision::numerator((*sol)[i]);
    }
    tcoords.push_back(std::move(tc));
  }
  out.polytope = Polytope::hull(tcoords);
  out.transform.base = base;
  out.transform.basis = basis;
  out.lattice_dim = static_cast<int>(s);
  return out;
}

}  // namespace hodge
