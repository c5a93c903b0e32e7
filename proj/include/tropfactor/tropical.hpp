// Max-plus tropical polynomials, Newton polytopes, regular subdivisions
// with their cell functionals, and the three equality notions.
#pragma once

#include <map>

#include "tropfactor/minkowski.hpp"

namespace tropfactor {

// Finite map from integer exponent vectors to rational coefficients,
// max-plus convention: f(x) = max_a (c_a + a.x).  Dominated coefficients
// are kept as written; everything downstream works through the subdivision.
class TropicalPoly {
 public:
  TropicalPoly() = default;
  TropicalPoly(size_t n, std::map<ZVec, Rat, LexLess> terms)
      : n_(n), terms_(std::move(terms)) {
    if (terms_.empty()) throw std::invalid_argument("tropical polynomial needs terms");
    for (const auto& [e, c] : terms_)
      if (e.size() != n_) throw std::invalid_argument("exponent dimension mismatch");
  }

  size_t vars() const { return n_; }
  const std::map<ZVec, Rat, LexLess>& terms() const { return terms_; }

  Rat operator()(const QVec& x) const {
    Rat best;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Rat v = c + dotq(e, x);
      if (first || v > best) best = v;
      first = false;
    }
    return best;
  }

  bool operator==(const TropicalPoly& o) const {  // =_1, coefficient-wise
    return n_ == o.n_ && terms_ == o.terms_;
  }

  bool is_homogeneous() const {
    std::optional<Int> d;
    for (const auto& [e, c] : terms_) {
      Int s = 0;
      for (const Int& x : e) s += x;
      if (!d)
        d = s;
      else if (*d != s)
        return false;
    }
    return true;
  }

  Int degree() const {  // max total degree
    Int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Int s = 0;
      for (const Int& x : e) s += x;
      if (first || s > d) d = s;
      first = false;
    }
    return d;
  }

 private:
  size_t n_ = 0;
  std::map<ZVec, Rat, LexLess> terms_;
};

inline TropicalPoly make_poly(size_t n,
                              std::initializer_list<std::pair<ZVec, Rat>> ts) {
  std::map<ZVec, Rat, LexLess> m;
  for (auto& [e, c] : ts) m.emplace(e, c);
  return TropicalPoly(n, std::move(m));
}

inline TropicalPoly monomial(size_t n, const ZVec& e, const Rat& c) {
  std::map<ZVec, Rat, LexLess> m;
  m.emplace(e, c);
  return TropicalPoly(n, std::move(m));
}

inline Polytope newton_polytope(const TropicalPoly& f) {
  std::vector<ZVec> pts;
  for (const auto& [e, c] : f.terms()) pts.push_back(e);
  return Polytope::convex_hull(pts);
}

// Affine functional l(x) = gradient.x + constant; on a cell of a regular
// subdivision it interpolates the (concavified) lift a -> c_a.
struct CellFunctional {
  QVec gradient;
  Rat constant;
  Rat operator()(const ZVec& x) const { return dotq(x, gradient) + constant; }
  Rat at(const QVec& x) const { return dotqq(gradient, x) + constant; }
  bool operator==(const CellFunctional& o) const {
    return gradient == o.gradient && constant == o.constant;
  }
};

struct Cell {
  Polytope poly;
  CellFunctional functional;
};

struct RegularSubdivision {
  Polytope support;         // newt(f)
  std::vector<Cell> cells;  // maximal cells, canonically ordered
};

namespace detail {

// Deterministic affine interpolation through (points, values): least-index
// pivoting; the solution is unique on the affine hull of the points and the
// free coordinates are fixed to zero.
inline CellFunctional interpolate_affine(const std::vector<ZVec>& pts,
                                         const std::vector<Rat>& vals) {
  size_t n = pts[0].size();
  QMat m(pts.size(), QVec(n + 1));
  QVec rhs(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t j = 0; j < n; ++j) m[i][j] = Rat(pts[i][j]);
    m[i][n] = 1;
    rhs[i] = vals[i];
  }
  auto sol = solve_rational(m, rhs);
  if (!sol) throw std::logic_error("interpolate_affine: inconsistent data");
  CellFunctional fn;
  fn.gradient.assign(sol->begin(), sol->begin() + n);
  fn.constant = (*sol)[n];
  return fn;
}

}  // namespace detail

// Lift each exponent a to (a, -c_a); maximal cells are the projections of
// the lower facets of the lifted hull, each carrying the affine functional
// interpolating the coefficients of its vertices (the concave envelope).
inline RegularSubdivision regular_subdivision(const TropicalPoly& f) {
  RegularSubdivision out;
  out.support = newton_polytope(f);
  const Polytope& supp = out.support;

  std::vector<ZVec> exps;
  std::vector<Rat> coeffs;
  for (const auto& [e, c] : f.terms()) {
    exps.push_back(e);
    coeffs.push_back(c);
  }

  auto cell_from = [&](const std::vector<ZVec>& pts, const std::vector<Rat>& vals) {
    Cell cell;
    cell.poly = Polytope::convex_hull(pts);
    std::vector<ZVec> vpts;
    std::vector<Rat> vvals;
    for (size_t i = 0; i < pts.size(); ++i) {
      vpts.push_back(pts[i]);
      vvals.push_back(vals[i]);
    }
    cell.functional = detail::interpolate_affine(vpts, vvals);
    return cell;
  };

  // Local coordinates in aff(supp), plus one height coordinate scaled to
  // integers (scaling the lift by a positive constant does not change the
  // subdivision).
  Int den = 1;
  for (const Rat& c : coeffs) den = lcm(den, c.get_den());
  std::vector<ZVec> lifted;
  for (size_t i = 0; i < exps.size(); ++i) {
    auto loc = supp.local_coords(exps[i]);
    if (!loc) throw std::logic_error("exponent outside support lattice");
    ZVec l = *loc;
    Rat h = -coeffs[i] * Rat(den);
    l.push_back(h.get_num());
    lifted.push_back(std::move(l));
  }

  // Degenerate lift: all points on one affine function -> trivial subdivision.
  Polytope lift_hull = Polytope::convex_hull(lifted);
  if (lift_hull.dim() <= supp.dim()) {
    // Heights are affine in the exponents; every exponent on the hull of
    // the support is lifted tightly.
    std::vector<ZVec> pts;
    std::vector<Rat> vals;
    for (size_t i = 0; i < exps.size(); ++i) {
      pts.push_back(exps[i]);
      vals.push_back(coeffs[i]);
    }
    // Use only the vertices of the support for the interpolation data.
    std::vector<ZVec> vpts;
    std::vector<Rat> vvals;
    for (size_t i = 0; i < exps.size(); ++i)
      if (std::binary_search(supp.vertices().begin(), supp.vertices().end(), exps[i],
                             LexLess{})) {
        vpts.push_back(exps[i]);
        vvals.push_back(coeffs[i]);
      }
    Cell cell;
    cell.poly = supp;
    cell.functional = detail::interpolate_affine(vpts, vvals);
    out.cells.push_back(std::move(cell));
    return out;
  }

  // Lower facets: negative last coordinate of the (local) facet normal.
  std::map<ZVec, std::pair<std::vector<ZVec>, std::vector<Rat>>, LexLess> cells;
  size_t hdim = lifted[0].size();
  for (const auto& facet : lift_hull.facets()) {
    // The lifted hull is full-dimensional in its local coordinates, which
    // are exactly the coordinates we built, so normals are ambient there.
    if (facet.normal[hdim - 1] >= 0) continue;
    std::vector<ZVec> pts;
    std::vector<Rat> vals;
    for (size_t i = 0; i < exps.size(); ++i)
      if (dot(facet.normal, lifted[i]) == facet.offset) {
        pts.push_back(exps[i]);
        vals.push_back(coeffs[i]);
      }
    cells.emplace(facet.normal, std::make_pair(std::move(pts), std::move(vals)));
  }
  for (auto& [nrm, data] : cells) out.cells.push_back(cell_from(data.first, data.second));
  std::sort(out.cells.begin(), out.cells.end(),
            [](const Cell& a, const Cell& b) { return a.poly < b.poly; });
  return out;
}

inline bool is_unit(const TropicalPoly& f) {
  RegularSubdivision s = regular_subdivision(f);
  return s.cells.size() == 1 && s.cells[0].poly == s.support;
}

inline TropicalPoly multiply(const TropicalPoly& f, const TropicalPoly& g) {
  if (f.vars() != g.vars()) throw std::invalid_argument("multiply: dimension mismatch");
  std::map<ZVec, Rat, LexLess> terms;
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) {
      ZVec e = add(a, b);
      Rat c = ca + cb;
      auto it = terms.find(e);
      if (it == terms.end())
        terms.emplace(std::move(e), c);
      else if (c > it->second)
        it->second = c;
    }
  return TropicalPoly(f.vars(), std::move(terms));
}

inline TropicalPoly multiply(const std::vector<TropicalPoly>& fs) {
  if (fs.empty()) throw std::invalid_argument("multiply: empty product");
  TropicalPoly acc = fs[0];
  for (size_t i = 1; i < fs.size(); ++i) acc = multiply(acc, fs[i]);
  return acc;
}

// The unit with one term per vertex of P, lifted by l.
inline TropicalPoly unit_from(const Polytope& p, const CellFunctional& l) {
  std::map<ZVec, Rat, LexLess> terms;
  for (const auto& v : p.vertices()) terms.emplace(v, l(v));
  return TropicalPoly(p.ambient_dim(), std::move(terms));
}

// Values of the concave envelope at the vertices of each cell; this is the
// canonical, functional-representation-independent picture of f as a
// function (same support + same per-cell vertex values  <=>  =_2).
inline std::map<ZVec, Rat, LexLess> envelope_signature(const RegularSubdivision& s) {
  std::map<ZVec, Rat, LexLess> sig;
  for (const auto& cell : s.cells)
    for (const auto& v : cell.poly.vertices()) sig.emplace(v, cell.functional(v));
  return sig;
}

// =_2: equality as functions on R^n.
inline bool equal_as_functions(const TropicalPoly& f, const TropicalPoly& g) {
  if (f.vars() != g.vars()) return false;
  RegularSubdivision sf = regular_subdivision(f), sg = regular_subdivision(g);
  if (sf.support != sg.support) return false;
  if (sf.cells.size() != sg.cells.size()) return false;
  for (size_t i = 0; i < sf.cells.size(); ++i)
    if (sf.cells[i].poly != sg.cells[i].poly) return false;
  return envelope_signature(sf) == envelope_signature(sg);
}

// =_3 witness: f =_2 a ⊙ x^v ⊙ g.
struct MonomialWitness {
  Rat constant;  // a
  ZVec shift;    // v
};

inline std::optional<MonomialWitness> equal_as_complexes(const TropicalPoly& f,
                                                         const TropicalPoly& g) {
  if (f.vars() != g.vars()) return std::nullopt;
  RegularSubdivision sf = regular_subdivision(f), sg = regular_subdivision(g);
  auto v = sf.support.translation_from(sg.support);
  if (!v) return std::nullopt;
  if (sf.cells.size() != sg.cells.size()) return std::nullopt;
  for (size_t i = 0; i < sf.cells.size(); ++i)
    if (sf.cells[i].poly != sg.cells[i].poly.translate(*v)) return std::nullopt;
  // Envelope values must differ by one constant: env_f(x + v) = env_g(x) + a.
  std::optional<Rat> a;
  for (size_t i = 0; i < sf.cells.size(); ++i) {
    const auto& cf = sf.cells[i];
    const auto& cg = sg.cells[i];
    for (const auto& w : cg.poly.vertices()) {
      Rat diff = cf.functional(add(w, *v)) - cg.functional(w);
      if (!a)
        a = diff;
      else if (*a != diff)
        return std::nullopt;
    }
  }
  return MonomialWitness{*a, *v};
}

// Appends one balancing variable so every term has total degree equal to
// the maximum total degree.
inline TropicalPoly homogenize(const TropicalPoly& f) {
  Int d = f.degree();
  std::map<ZVec, Rat, LexLess> terms;
  for (const auto& [e, c] : f.terms()) {
    ZVec ne = e;
    Int s = 0;
    for (const Int& x : e) s += x;
    ne.push_back(d - s);
    terms.emplace(std::move(ne), c);
  }
  return TropicalPoly(f.vars() + 1, std::move(terms));
}

inline TropicalPoly dehomogenize(const TropicalPoly& f) {
  if (f.vars() == 0) throw std::invalid_argument("dehomogenize: no variables");
  std::map<ZVec, Rat, LexLess> terms;
  for (const auto& [e, c] : f.terms()) {
    ZVec ne(e.begin(), e.end() - 1);
    if (!terms.emplace(std::move(ne), c).second)
      throw std::invalid_argument("dehomogenize: input is not homogeneous");
  }
  return TropicalPoly(f.vars() - 1, std::move(terms));
}

// Legendre transform value f*(y): finite exactly on newt(f), where it equals
// minus the concave envelope.
inline std::optional<Rat> legendre_value(const TropicalPoly& f, const QVec& y) {
  RegularSubdivision s = regular_subdivision(f);
  if (!s.support.contains(y)) return std::nullopt;
  std::optional<Rat> env;
  for (const auto& cell : s.cells) {
    Rat v = cell.functional.at(y);
    if (!env || v < *env) env = v;
  }
  return -*env;
}

}  // namespace tropfactor
