// Lattice polytopes with exact rational arithmetic.
//
// A polytope is stored by its irredundant vertex set (lexicographically
// sorted, so equality of polytopes is equality of the stored data) together
// with cached affine-hull and facet information.  Polytopes of any dimension
// 0..n are first class: hulls and faces of lower-dimensional inputs are
// computed inside the affine hull via a saturated lattice basis of the
// direction space.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "tropfactor/matrix.hpp"

namespace tropfactor {

namespace detail {

// Saturated basis of the lattice Z^n ∩ span(rows): kernel of the kernel.
inline ZMat saturated_basis(const ZMat& generators, size_t n) {
  if (generators.empty()) return {};
  ZMat forms = integer_kernel(generators);  // {u in Z^n : gen_i . u = 0}
  if (forms.empty()) {
    ZMat id(n, ZVec(n, Int(0)));
    for (size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
  }
  return integer_kernel(forms);  // {x in Z^n : u . x = 0 for all forms}
}

// Reverse Hermite form of a lattice basis: pivots are placed on the
// rightmost coordinates, so coset reduction zeroes trailing entries first.
// This is what makes homogeneous facet normals come out as (a, b, ..., 0).
struct RevHNF {
  ZMat rows;                     // basis rows
  std::vector<size_t> pivot;     // pivot column per row (rightmost nonzero)
};

inline RevHNF reverse_hnf(ZMat rows) {
  if (rows.empty()) return {};
  size_t n = rows[0].size();
  // Reverse columns, row-Hermite, reverse back.
  for (auto& r : rows) std::reverse(r.begin(), r.end());
  // Row HNF with pivots left to right.
  size_t rct = rows.size();
  size_t row = 0;
  for (size_t col = 0; col < n && row < rct; ++col) {
    for (size_t i = row + 1; i < rct; ++i) {
      while (rows[i][col] != 0) {
        if (rows[row][col] == 0) {
          std::swap(rows[row], rows[i]);
          continue;
        }
        Int q = rows[row][col] / rows[i][col];  // truncated is fine here
        for (size_t j = 0; j < n; ++j) rows[row][j] -= q * rows[i][j];
        std::swap(rows[row], rows[i]);
      }
    }
    if (rows[row][col] == 0) continue;
    if (rows[row][col] < 0)
      for (size_t j = 0; j < n; ++j) rows[row][j] = -rows[row][j];
    for (size_t i = 0; i < row; ++i) {
      Int f;
      mpz_fdiv_q(f.get_mpz_t(), rows[i][col].get_mpz_t(), rows[row][col].get_mpz_t());
      if (f != 0)
        for (size_t j = 0; j < n; ++j) rows[i][j] -= f * rows[row][j];
    }
    ++row;
  }
  rows.resize(row);
  for (auto& r : rows) std::reverse(r.begin(), r.end());
  RevHNF out;
  out.rows = std::move(rows);
  for (auto& r : out.rows) {
    size_t p = n;
    for (size_t j = n; j-- > 0;)
      if (r[j] != 0) {
        p = j;
        break;
      }
    out.pivot.push_back(p);
  }
  return out;
}

// Canonical coset representative of v modulo the lattice spanned by basis
// (in reverse Hermite form): pivot coordinates are reduced into [0, pivot).
inline ZVec reduce_mod_lattice(ZVec v, const RevHNF& basis) {
  for (size_t i = 0; i < basis.rows.size(); ++i) {
    size_t p = basis.pivot[i];
    const Int& piv = basis.rows[i][p];
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), v[p].get_mpz_t(), piv.get_mpz_t());
    if (f != 0)
      for (size_t j = 0; j < v.size(); ++j) v[j] -= f * basis.rows[i][j];
  }
  return v;
}

// ----- full-dimensional incremental hull -----

struct LocalFacet {
  ZVec normal;  // primitive outer normal in local coordinates
  Int offset;   // support value
  std::vector<int> verts;  // indices into the local point list
};

struct LocalHull {
  std::vector<int> vertex_ids;       // extreme points, ascending index
  std::vector<LocalFacet> facets;    // merged facets, canonically sorted
};

// Primitive normal of the hyperplane through the given affinely independent
// points (local coordinates, k points in dimension k).
inline std::optional<ZVec> hyperplane_normal(const std::vector<ZVec>& pts,
                                             const std::vector<int>& idx) {
  size_t k = pts[0].size();
  ZMat diffs;
  for (size_t i = 1; i < idx.size(); ++i)
    diffs.push_back(sub(pts[idx[i]], pts[idx[0]]));
  ZMat kern = integer_kernel(ZMat(diffs));
  if (kern.size() != 1) return std::nullopt;
  (void)k;
  return primitive(kern[0]);
}

inline LocalHull hull_full_dim(const std::vector<ZVec>& pts) {
  size_t k = pts[0].size();
  LocalHull out;
  if (k == 0) {
    out.vertex_ids = {0};
    return out;
  }
  if (k == 1) {
    int lo = 0, hi = 0;
    for (int i = 1; i < (int)pts.size(); ++i) {
      if (pts[i][0] < pts[lo][0]) lo = i;
      if (pts[i][0] > pts[hi][0]) hi = i;
    }
    out.vertex_ids = {std::min(lo, hi), std::max(lo, hi)};
    out.facets.push_back({ZVec{Int(-1)}, -pts[lo][0], {lo}});
    out.facets.push_back({ZVec{Int(1)}, pts[hi][0], {hi}});
    return out;
  }

  // Initial simplex: greedily pick k+1 affinely independent points.
  std::vector<int> simplex = {0};
  ZMat diffs;
  for (int i = 1; i < (int)pts.size() && simplex.size() < k + 1; ++i) {
    diffs.push_back(sub(pts[i], pts[0]));
    if (rank_q(diffs) == diffs.size())
      simplex.push_back(i);
    else
      diffs.pop_back();
  }
  if (simplex.size() != k + 1)
    throw std::logic_error("hull_full_dim: points not full-dimensional");

  // Interior reference point: centroid of the simplex, kept as k+1 times
  // the centroid to stay integral.
  ZVec ref(k, Int(0));
  for (int id : simplex) ref = add(ref, pts[id]);
  const Int ref_scale = Int(k + 1);

  struct SFacet {
    ZVec normal;
    Int offset;
    std::vector<int> verts;  // sorted
    bool alive = true;
  };
  std::vector<SFacet> fac;
  std::map<std::vector<int>, std::vector<int>> ridge_map;  // ridge -> facet ids

  auto strictly_below_ref = [&](const ZVec& nrm, const Int& off) {
    // ref/(k+1) strictly below: nrm . ref < off * (k+1)
    return dot(nrm, ref) < off * ref_scale;
  };

  auto add_facet = [&](std::vector<int> vs) {
    auto nrm = hyperplane_normal(pts, vs);
    if (!nrm) throw std::logic_error("degenerate facet");
    Int off = dot(*nrm, pts[vs[0]]);
    if (!strictly_below_ref(*nrm, off)) {
      *nrm = neg(*nrm);
      off = -off;
    }
    if (!strictly_below_ref(*nrm, off))
      throw std::logic_error("reference point on facet plane");
    std::sort(vs.begin(), vs.end());
    int id = (int)fac.size();
    fac.push_back({std::move(*nrm), std::move(off), vs, true});
    for (size_t drop = 0; drop < vs.size(); ++drop) {
      std::vector<int> ridge;
      for (size_t t = 0; t < vs.size(); ++t)
        if (t != drop) ridge.push_back(vs[t]);
      ridge_map[ridge].push_back(id);
    }
    return id;
  };

  for (size_t drop = 0; drop < simplex.size(); ++drop) {
    std::vector<int> vs;
    for (size_t t = 0; t < simplex.size(); ++t)
      if (t != drop) vs.push_back(simplex[t]);
    add_facet(vs);
  }

  std::set<int> in_simplex(simplex.begin(), simplex.end());
  for (int p = 0; p < (int)pts.size(); ++p) {
    if (in_simplex.count(p)) continue;
    std::vector<int> visible;
    for (int f = 0; f < (int)fac.size(); ++f)
      if (fac[f].alive && dot(fac[f].normal, pts[p]) > fac[f].offset)
        visible.push_back(f);
    if (visible.empty()) continue;  // inside or on the boundary: not extreme
    std::set<int> vis(visible.begin(), visible.end());
    // Horizon ridges: shared by exactly one visible facet.
    std::vector<std::vector<int>> horizon;
    for (int f : visible) {
      const auto vs = fac[f].verts;
      for (size_t drop = 0; drop < vs.size(); ++drop) {
        std::vector<int> ridge;
        for (size_t t = 0; t < vs.size(); ++t)
          if (t != drop) ridge.push_back(vs[t]);
        const auto& inc = ridge_map[ridge];
        int vis_count = 0;
        for (int g : inc)
          if (fac[g].alive && vis.count(g)) ++vis_count;
        int alive_count = 0;
        for (int g : inc)
          if (fac[g].alive) ++alive_count;
        if (alive_count == 2 && vis_count == 1) horizon.push_back(ridge);
      }
    }
    for (int f : visible) {
      fac[f].alive = false;
      const auto vs = fac[f].verts;
      for (size_t drop = 0; drop < vs.size(); ++drop) {
        std::vector<int> ridge;
        for (size_t t = 0; t < vs.size(); ++t)
          if (t != drop) ridge.push_back(vs[t]);
        auto& inc = ridge_map[ridge];
        inc.erase(std::remove(inc.begin(), inc.end(), f), inc.end());
      }
    }
    for (auto& ridge : horizon) {
      std::vector<int> vs = ridge;
      vs.push_back(p);
      add_facet(std::move(vs));
    }
  }

  // Merge coplanar simplicial facets and filter true vertices.
  std::set<int> candidates;
  std::map<std::pair<ZVec, Int>, std::vector<int>,
           bool (*)(const std::pair<ZVec, Int>&, const std::pair<ZVec, Int>&)>
      planes([](const std::pair<ZVec, Int>& a, const std::pair<ZVec, Int>& b) {
        int c = cmp_lex(a.first, b.first);
        if (c != 0) return c < 0;
        return a.second < b.second;
      });
  for (const auto& f : fac) {
    if (!f.alive) continue;
    for (int v : f.verts) candidates.insert(v);
    planes[{f.normal, f.offset}];
  }
  for (auto& [plane, onset] : planes)
    for (int v : candidates)
      if (dot(plane.first, pts[v]) == plane.second) onset.push_back(v);

  for (int v : candidates) {
    ZMat nrms;
    for (const auto& [plane, onset] : planes)
      if (std::binary_search(onset.begin(), onset.end(), v))
        nrms.push_back(plane.first);
    if (rank_q(nrms) == k) out.vertex_ids.push_back(v);
  }
  std::set<int> vertset(out.vertex_ids.begin(), out.vertex_ids.end());
  for (auto& [plane, onset] : planes) {
    LocalFacet lf;
    lf.normal = plane.first;
    lf.offset = plane.second;
    for (int v : onset)
      if (vertset.count(v)) lf.verts.push_back(v);
    out.facets.push_back(std::move(lf));
  }
  return out;
}

}  // namespace detail

struct Facet {
  ZVec normal;              // canonical ambient representative, primitive on
                            // the direction lattice
  Int offset;               // support value of the polytope at `normal`
  std::vector<int> verts;   // indices into the vertex list
};

class Polytope {
 public:
  Polytope() = default;

  static Polytope convex_hull(const std::vector<ZVec>& points);

  size_t ambient_dim() const { return n_; }
  int dim() const { return dim_; }
  const std::vector<ZVec>& vertices() const { return verts_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const ZMat& direction_basis() const { return dir_basis_; }
  const ZMat& lineality_forms() const { return lin_.rows; }

  bool operator==(const Polytope& o) const { return verts_ == o.verts_; }
  bool operator!=(const Polytope& o) const { return !(*this == o); }
  bool operator<(const Polytope& o) const {
    if (verts_.size() != o.verts_.size()) return verts_.size() < o.verts_.size();
    for (size_t i = 0; i < verts_.size(); ++i) {
      int c = cmp_lex(verts_[i], o.verts_[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }

  Int support(const ZVec& v) const {
    Int best = dot(v, verts_[0]);
    for (size_t i = 1; i < verts_.size(); ++i) best = std::max(best, dot(v, verts_[i]));
    return best;
  }

  Polytope face_in_direction(const ZVec& v) const {
    Int best = support(v);
    std::vector<ZVec> pts;
    for (const auto& p : verts_)
      if (dot(v, p) == best) pts.push_back(p);
    return convex_hull(pts);
  }

  Polytope translate(const ZVec& t) const {
    std::vector<ZVec> pts;
    pts.reserve(verts_.size());
    for (const auto& p : verts_) pts.push_back(add(p, t));
    return convex_hull(pts);
  }

  Polytope dilate(const Int& c) const {
    if (c < 0) throw std::invalid_argument("dilate: negative factor");
    if (c == 0) return convex_hull({ZVec(n_, Int(0))});
    std::vector<ZVec> pts;
    for (const auto& p : verts_) pts.push_back(scale(p, c));
    return convex_hull(pts);
  }

  // Lattice translation sending o to *this, if the two are equivalent.
  std::optional<ZVec> translation_from(const Polytope& o) const {
    if (n_ != o.n_ || verts_.size() != o.verts_.size()) return std::nullopt;
    ZVec t = sub(verts_[0], o.verts_[0]);  // lex-min maps to lex-min
    for (size_t i = 0; i < verts_.size(); ++i)
      if (sub(verts_[i], o.verts_[i]) != t) return std::nullopt;
    return t;
  }

  bool equivalent_to(const Polytope& o) const { return translation_from(o).has_value(); }

  bool contains(const QVec& x) const {
    for (const auto& form : lin_.rows) {
      if (dotq(form, x) != Rat(dot(form, verts_[0]))) return false;
    }
    for (const auto& f : facets_)
      if (dotq(f.normal, x) > Rat(f.offset)) return false;
    // 0/1-dimensional polytopes have no stored facets in the 0-dim case;
    // the lineality forms pin the affine hull and the facet list pins the
    // rest, except for a single point which the forms already determine.
    if (dim_ == 0) {
      for (size_t i = 0; i < n_; ++i)
        if (x[i] != Rat(verts_[0][i])) return false;
    }
    return true;
  }

  bool contains_lattice(const ZVec& x) const { return contains(to_qvec(x)); }

  // All faces of dimension 1 .. dim-1 (no vertices, not the polytope).
  std::vector<Polytope> proper_faces() const;

  // Dimension-1 faces; a segment is its own edge.
  std::vector<Polytope> edges() const;

  // One canonically signed primitive vector per parallel class of edges.
  std::vector<ZVec> primitive_edge_directions() const;

  // A vector v with face_in_direction(v) == the given face (which must be a
  // face of *this): sum of the normals of the facets containing it.
  ZVec supporting_vector(const Polytope& face) const;

  // Local integer coordinates of an ambient lattice point in the affine
  // hull (offset from the lex-min vertex in the saturated direction basis).
  std::optional<ZVec> local_coords(const ZVec& p) const;

 private:
  size_t n_ = 0;
  std::vector<ZVec> verts_;
  int dim_ = 0;
  ZMat dir_basis_;        // dim_ rows, saturated
  detail::RevHNF lin_;    // basis of Z^n ∩ (direction space)^perp
  std::vector<Facet> facets_;
};

inline std::optional<ZVec> Polytope::local_coords(const ZVec& p) const {
  ZVec rhs = sub(p, verts_[0]);
  if (dim_ == 0) return is_zero(rhs) ? std::optional<ZVec>(ZVec{}) : std::nullopt;
  // dir_basis_^T x = rhs
  return solve_integer(transpose(dir_basis_), rhs);
}

inline Polytope Polytope::convex_hull(const std::vector<ZVec>& points) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  Polytope P;
  P.n_ = points[0].size();
  for (const auto& p : points)
    if (p.size() != P.n_) throw std::invalid_argument("mixed dimensions");

  std::vector<ZVec> pts = points;
  std::sort(pts.begin(), pts.end(), LexLess{});
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  ZMat diffs;
  for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
  P.dir_basis_ = detail::saturated_basis(diffs, P.n_);
  P.dim_ = (int)P.dir_basis_.size();
  {
    ZMat forms = diffs.empty()
                     ? [&] {
                         ZMat id(P.n_, ZVec(P.n_, Int(0)));
                         for (size_t i = 0; i < P.n_; ++i) id[i][i] = 1;
                         return id;
                       }()
                     : integer_kernel(diffs);
    P.lin_ = detail::reverse_hnf(std::move(forms));
  }

  if (P.dim_ == 0) {
    P.verts_ = {pts[0]};
    return P;
  }

  // Local coordinates: saturated basis guarantees integrality.
  ZMat bt = transpose(P.dir_basis_);
  std::vector<ZVec> loc;
  loc.reserve(pts.size());
  for (const auto& p : pts) {
    auto c = solve_integer(bt, sub(p, pts[0]));
    if (!c) throw std::logic_error("point outside saturated direction lattice");
    loc.push_back(std::move(*c));
  }

  detail::LocalHull hull = detail::hull_full_dim(loc);
  for (int id : hull.vertex_ids) P.verts_.push_back(pts[id]);
  std::vector<int> remap(pts.size(), -1);
  for (size_t i = 0; i < hull.vertex_ids.size(); ++i) remap[hull.vertex_ids[i]] = (int)i;
  // verts_ is sorted because pts was sorted and vertex_ids ascend.

  for (const auto& lf : hull.facets) {
    Facet f;
    // Lift the local normal to an ambient integer vector: dir_basis_ * v = g.
    auto v = solve_integer(P.dir_basis_, lf.normal);
    if (!v) throw std::logic_error("cannot lift facet normal");
    f.normal = detail::reduce_mod_lattice(std::move(*v), P.lin_);
    f.offset = P.support(f.normal);
    for (int lv : lf.verts) f.verts.push_back(remap[lv]);
    std::sort(f.verts.begin(), f.verts.end());
    P.facets_.push_back(std::move(f));
  }
  std::sort(P.facets_.begin(), P.facets_.end(),
            [](const Facet& a, const Facet& b) { return cmp_lex(a.normal, b.normal) < 0; });
  return P;
}

inline std::vector<Polytope> Polytope::proper_faces() const {
  std::vector<Polytope> out;
  if (dim_ <= 1) return out;  // a segment has only improper faces
  // Closure of facet vertex sets under intersection.
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  for (const auto& f : facets_) {
    if (seen.insert(f.verts).second) queue.push_back(f.verts);
  }
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    auto cur = queue[qi];
    for (const auto& f : facets_) {
      std::vector<int> inter;
      std::set_intersection(cur.begin(), cur.end(), f.verts.begin(), f.verts.end(),
                            std::back_inserter(inter));
      if (inter.size() < 2 || inter == cur) continue;
      if (seen.insert(inter).second) queue.push_back(inter);
    }
  }
  for (const auto& vs : seen) {
    std::vector<ZVec> pts;
    for (int i : vs) pts.push_back(verts_[i]);
    Polytope F = convex_hull(pts);
    if (F.dim() >= 1) out.push_back(std::move(F));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Polytope> Polytope::edges() const {
  std::vector<Polytope> out;
  if (dim_ == 1) {
    out.push_back(*this);
    return out;
  }
  if (dim_ < 1) return out;
  // (u, v) spans an edge iff the facet normals through both, restricted to
  // the direction space, have rank dim-1.
  for (size_t i = 0; i < verts_.size(); ++i)
    for (size_t j = i + 1; j < verts_.size(); ++j) {
      ZMat nrms;
      for (const auto& f : facets_)
        if (std::binary_search(f.verts.begin(), f.verts.end(), (int)i) &&
            std::binary_search(f.verts.begin(), f.verts.end(), (int)j)) {
          ZVec restr(dim_);
          for (int t = 0; t < dim_; ++t) restr[t] = dot(f.normal, dir_basis_[t]);
          nrms.push_back(std::move(restr));
        }
      if (nrms.empty()) continue;
      if ((int)rank_q(nrms) == dim_ - 1)
        out.push_back(convex_hull({verts_[i], verts_[j]}));
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<ZVec> Polytope::primitive_edge_directions() const {
  std::set<ZVec, LexLess> dirs;
  for (const auto& e : edges())
    dirs.insert(canonical_sign(primitive(sub(e.vertices()[1], e.vertices()[0]))));
  return {dirs.begin(), dirs.end()};
}

inline ZVec Polytope::supporting_vector(const Polytope& face) const {
  if (face == *this) return ZVec(n_, Int(0));
  std::vector<int> idx;
  for (const auto& v : face.vertices()) {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v, LexLess{});
    if (it == verts_.end() || *it != v)
      throw std::invalid_argument("supporting_vector: not a face");
    idx.push_back((int)(it - verts_.begin()));
  }
  ZVec sum(n_, Int(0));
  for (const auto& f : facets_) {
    bool all = true;
    for (int i : idx)
      if (!std::binary_search(f.verts.begin(), f.verts.end(), i)) {
        all = false;
        break;
      }
    if (all) sum = add(sum, f.normal);
  }
  if (is_zero(sum)) throw std::invalid_argument("supporting_vector: not a proper face");
  return sum;
}

}  // namespace tropfactor
