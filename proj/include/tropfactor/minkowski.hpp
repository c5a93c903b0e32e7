// Minkowski and signed-Minkowski calculus: sums, exact differences,
// summand tests, H-matrices and b-vectors of reference fans.
#pragma once

#include <functional>
#include <string>

#include "tropfactor/polytope.hpp"

namespace tropfactor {

inline Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim())
    throw std::invalid_argument("minkowski_sum: ambient dimension mismatch");
  std::vector<ZVec> pts;
  pts.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) pts.push_back(add(a, b));
  return Polytope::convex_hull(pts);
}

inline Polytope minkowski_sum(const std::vector<Polytope>& ps) {
  if (ps.empty()) throw std::invalid_argument("minkowski_sum: empty list");
  Polytope acc = ps[0];
  for (size_t i = 1; i < ps.size(); ++i) acc = minkowski_sum(acc, ps[i]);
  return acc;
}

// P - Q = {x : x + Q ⊆ P}.  The result can fail to be a lattice polytope
// (Lemma: latticeness is guaranteed only when Q is a summand of P), so the
// vertices are reported exactly as rationals with a latticeness flag.
struct SignedDifference {
  enum class Kind { Empty, Lattice, Rational } kind = Kind::Empty;
  Polytope lattice;                   // valid when kind == Lattice
  std::vector<QVec> rational_verts;   // valid when kind == Rational (sorted)
};

namespace detail {

// Vertices of {t : rows . t <= rhs} in a d-dimensional space, via basic
// feasible solutions.  The region must be bounded by construction.
inline std::vector<QVec> hrep_vertices(const QMat& rows, const QVec& rhs, size_t d) {
  std::vector<QVec> verts;
  size_t m = rows.size();
  if (d == 0) return {QVec{}};
  std::vector<size_t> idx;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (idx.size() == d) {
      QMat sys(d, QVec(d));
      QVec b(d);
      for (size_t i = 0; i < d; ++i) {
        sys[i] = rows[idx[i]];
        b[i] = rhs[idx[i]];
      }
      if (rref(sys).rank() != d) return;
      QMat sys2(d, QVec(d));
      for (size_t i = 0; i < d; ++i) sys2[i] = rows[idx[i]];
      auto x = solve_rational(sys2, b);
      if (!x) return;
      for (size_t i = 0; i < m; ++i)
        if (dotqq(rows[i], *x) > rhs[i]) return;
      verts.push_back(*x);
      return;
    }
    for (size_t i = start; m - i >= d - idx.size(); ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return verts;
}

}  // namespace detail

inline SignedDifference signed_difference(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim())
    throw std::invalid_argument("signed_difference: ambient dimension mismatch");
  SignedDifference out;
  // Affine-hull equations of P must be constant on Q, otherwise empty.
  for (const auto& form : p.lineality_forms()) {
    Int hi = q.support(form), lo = -q.support(neg(form));
    if (hi != lo) return out;
  }
  // Work in local coordinates of aff(P) shifted by -q0.
  const ZVec& p0 = p.vertices()[0];
  const ZVec& q0 = q.vertices()[0];
  ZVec base = sub(p0, q0);
  if (p.dim() == 0) {
    // {x : x + Q ⊆ {p0}} is {p0 - q0} when Q is a point, else empty.
    if (q.vertices().size() > 1) return out;
    out.kind = SignedDifference::Kind::Lattice;
    out.lattice = Polytope::convex_hull({base});
    return out;
  }
  const ZMat& d = p.direction_basis();
  size_t k = d.size();
  QMat rows;
  QVec rhs;
  for (const auto& f : p.facets()) {
    QVec row(k);
    for (size_t j = 0; j < k; ++j) row[j] = Rat(dot(f.normal, d[j]));
    rows.push_back(std::move(row));
    rhs.push_back(Rat(f.offset - q.support(f.normal) - dot(f.normal, base)));
  }
  auto locals = detail::hrep_vertices(rows, rhs, k);
  if (locals.empty()) return out;
  std::vector<QVec> verts;
  bool lattice = true;
  for (const auto& t : locals) {
    QVec v = to_qvec(base);
    for (size_t j = 0; j < k; ++j)
      for (size_t i = 0; i < v.size(); ++i) v[i] += t[j] * Rat(d[j][i]);
    for (const Rat& c : v)
      if (c.get_den() != 1) lattice = false;
    verts.push_back(std::move(v));
  }
  if (lattice) {
    std::vector<ZVec> zz;
    for (const auto& v : verts) {
      ZVec z(v.size());
      for (size_t i = 0; i < v.size(); ++i) z[i] = v[i].get_num();
      zz.push_back(std::move(z));
    }
    out.kind = SignedDifference::Kind::Lattice;
    out.lattice = Polytope::convex_hull(zz);
  } else {
    out.kind = SignedDifference::Kind::Rational;
    std::sort(verts.begin(), verts.end());
    out.rational_verts = std::move(verts);
  }
  return out;
}

// Q ≤ P: the difference is nonempty and adding Q back restores P exactly.
inline bool is_summand(const Polytope& q, const Polytope& p) {
  SignedDifference d = signed_difference(p, q);
  if (d.kind == SignedDifference::Kind::Empty) return false;
  if (d.kind == SignedDifference::Kind::Rational) {
    // Scale to a lattice computation: (D+Q == P) iff (MD + MQ == MP).
    Int m = 1;
    for (const auto& v : d.rational_verts) m = lcm(m, lcm_den(v));
    std::vector<ZVec> dm;
    for (const auto& v : d.rational_verts) {
      ZVec z(v.size());
      for (size_t i = 0; i < v.size(); ++i) {
        Rat s = v[i] * Rat(m);
        z[i] = s.get_num();
      }
      dm.push_back(std::move(z));
    }
    Polytope dd = Polytope::convex_hull(dm);
    return minkowski_sum(dd, q.dilate(m)) == p.dilate(m);
  }
  return minkowski_sum(d.lattice, q) == p;
}

// ----- H-matrices and b-vectors -----

// Rows are primitive outer facet normals of a reference sum polytope,
// canonically sorted; for non-full-dimensional sums the rows additionally
// contain the ± pairs spanning the lineality directions of the normal fan.
// The maximal normal cones of the sum (one per vertex, described by the
// facet rows active there) are kept to decide representability.
struct HMatrix {
  ZMat rows;                 // canonically (lexicographically) sorted
  std::vector<int> pair_of;  // index of -row, or -1
  std::vector<bool> is_lineality;
  std::vector<std::vector<int>> cones;  // active facet-row sets, per sum vertex
  size_t ambient = 0;

  size_t size() const { return rows.size(); }
  int index_of(const ZVec& v) const {
    auto it = std::lower_bound(rows.begin(), rows.end(), v, LexLess{});
    if (it == rows.end() || *it != v) return -1;
    return (int)(it - rows.begin());
  }
};

using BVector = ZVec;  // indexed by HMatrix rows; entry_i = max v_i . x over P

inline HMatrix h_matrix_of_polytope(const Polytope& sum) {
  HMatrix h;
  h.ambient = sum.ambient_dim();
  std::set<ZVec, LexLess> facet_rows, lin_rows;
  for (const auto& f : sum.facets()) facet_rows.insert(f.normal);
  for (const auto& form : sum.lineality_forms()) {
    ZVec r = primitive(form);
    lin_rows.insert(r);
    lin_rows.insert(neg(r));
  }
  for (const auto& r : facet_rows) h.rows.push_back(r);
  for (const auto& r : lin_rows)
    if (!facet_rows.count(r)) h.rows.push_back(r);
  std::sort(h.rows.begin(), h.rows.end(), LexLess{});
  h.pair_of.assign(h.rows.size(), -1);
  h.is_lineality.assign(h.rows.size(), false);
  for (size_t i = 0; i < h.rows.size(); ++i) {
    h.pair_of[i] = h.index_of(neg(h.rows[i]));
    h.is_lineality[i] = lin_rows.count(h.rows[i]) && !facet_rows.count(h.rows[i]);
  }
  for (const auto& v : sum.vertices()) {
    std::vector<int> active;
    for (size_t i = 0; i < h.rows.size(); ++i)
      if (!h.is_lineality[i] && dot(h.rows[i], v) == sum.support(h.rows[i]))
        active.push_back((int)i);
    h.cones.push_back(std::move(active));
  }
  return h;
}

inline HMatrix h_matrix(const std::vector<Polytope>& s) {
  return h_matrix_of_polytope(minkowski_sum(s));
}

// b^H(P): the support vector of P over the rows of H, defined exactly when
// the reference fan refines the normal fan of P.  Refinement is tested
// directly: the support function of P must be linear on every maximal cone
// of the reference fan, i.e. on each vertex cone some point of P attains
// the support value of every active row simultaneously; the lineality
// directions must be constant on P.
inline std::optional<BVector> b_constant(const Polytope& p, const HMatrix& h) {
  if (p.ambient_dim() != h.ambient)
    throw std::invalid_argument("b_constant: ambient dimension mismatch");
  for (size_t i = 0; i < h.size(); ++i) {
    if (!h.is_lineality[i]) continue;
    if (p.support(h.rows[i]) != -p.support(neg(h.rows[i]))) return std::nullopt;
  }
  for (const auto& cone : h.cones) {
    if (cone.empty()) continue;
    ZVec interior(h.ambient, Int(0));
    for (int i : cone) interior = add(interior, h.rows[i]);
    const ZVec q = p.face_in_direction(interior).vertices()[0];
    for (int i : cone)
      if (dot(h.rows[i], q) != p.support(h.rows[i])) return std::nullopt;
  }
  BVector b(h.rows.size());
  for (size_t i = 0; i < h.rows.size(); ++i) b[i] = p.support(h.rows[i]);
  return b;
}

// F(y) for a signed multiplicity vector y over a list of polytopes:
// F(y+) - F(y-) as a signed difference.
struct SignedCombination {
  Polytope plus;   // F(y+), never empty (a point if y+ = 0)
  Polytope minus;  // F(y-)
  SignedDifference value;
};

inline SignedCombination signed_combination(const std::vector<Polytope>& s,
                                            const std::vector<Int>& y) {
  if (s.empty() || s.size() != y.size())
    throw std::invalid_argument("signed_combination: shape mismatch");
  size_t n = s[0].ambient_dim();
  Polytope origin = Polytope::convex_hull({ZVec(n, Int(0))});
  Polytope plus = origin, minus = origin;
  for (size_t i = 0; i < s.size(); ++i) {
    if (y[i] > 0) plus = minkowski_sum(plus, s[i].dilate(y[i]));
    if (y[i] < 0) minus = minkowski_sum(minus, s[i].dilate(-y[i]));
  }
  SignedCombination out{plus, minus, signed_difference(plus, minus)};
  return out;
}

struct AdditivityReport {
  bool holds = false;
  std::string reason;
};

// Checks b^H(F(y)) = Σ y_i b^H(F_i) and cross-checks against the summand
// criterion F(y-) ≤ F(y+); the two agree by the additivity proposition.
inline AdditivityReport b_additivity_check(const std::vector<Polytope>& s,
                                           const std::vector<Int>& y) {
  AdditivityReport rep;
  HMatrix h = h_matrix(s);
  SignedCombination comb = signed_combination(s, y);
  if (comb.value.kind == SignedDifference::Kind::Empty) {
    rep.reason = "F(y) is empty";
    return rep;
  }
  bool summand = is_summand(comb.minus, comb.plus);
  bool additive = false;
  if (comb.value.kind == SignedDifference::Kind::Lattice) {
    auto bf = b_constant(comb.value.lattice, h);
    if (bf) {
      BVector expect(h.size(), Int(0));
      for (size_t i = 0; i < s.size(); ++i) {
        auto bi = b_constant(s[i], h);
        if (!bi) throw std::logic_error("member not representable against own fan");
        for (size_t t = 0; t < h.size(); ++t) expect[t] += y[i] * (*bi)[t];
      }
      additive = (*bf == expect);
    }
  }
  if (additive != summand)
    throw std::logic_error("b-vector additivity disagrees with the summand test");
  rep.holds = additive;
  if (!rep.holds) rep.reason = "F(y-) is not a summand of F(y+)";
  return rep;
}

}  // namespace tropfactor
