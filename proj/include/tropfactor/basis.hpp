// Basis sets of lattice polytopes and their certification: canonical and
// hierarchical predicates, the positive-basis check, graphical bases,
// drawn-edge membership, and orientation extraction.
#pragma once

#include "tropfactor/tropical.hpp"

namespace tropfactor {

struct BasisSet {
  std::vector<Polytope> members;
  std::vector<std::string> names;  // parallel to members
  HMatrix h;                       // of the Minkowski sum of the members
  std::vector<BVector> bvectors;   // b^H(member), parallel to members
  std::vector<ZVec> edge_set;      // primitive edges of all members, canonical sign
  bool certified = false;          // set by check_positive_basis on success

  size_t size() const { return members.size(); }
  size_t ambient() const { return h.ambient; }

  // Columns of the decomposition system: the b-vectors.
  ZMat b_columns() const {
    ZMat a(h.size(), ZVec(members.size()));
    for (size_t j = 0; j < members.size(); ++j)
      for (size_t i = 0; i < h.size(); ++i) a[i][j] = bvectors[j][i];
    return a;
  }
};

inline BasisSet build_basis(const std::vector<Polytope>& polytopes,
                            std::vector<std::string> names = {}) {
  if (polytopes.empty()) throw std::invalid_argument("build_basis: empty set");
  size_t n = polytopes[0].ambient_dim();
  for (const auto& p : polytopes)
    if (p.ambient_dim() != n)
      throw std::invalid_argument("build_basis: mixed ambient dimensions");
  for (size_t i = 0; i < polytopes.size(); ++i)
    for (size_t j = i + 1; j < polytopes.size(); ++j)
      if (polytopes[i].equivalent_to(polytopes[j]))
        throw std::invalid_argument("build_basis: members " + std::to_string(i) +
                                    " and " + std::to_string(j) +
                                    " coincide up to translation");
  BasisSet s;
  s.members = polytopes;
  if (names.empty())
    for (size_t i = 0; i < polytopes.size(); ++i)
      s.names.push_back("P" + std::to_string(i + 1));
  else if (names.size() == polytopes.size())
    s.names = std::move(names);
  else
    throw std::invalid_argument("build_basis: name count mismatch");
  s.h = h_matrix(s.members);
  for (const auto& p : s.members) {
    auto b = b_constant(p, s.h);
    if (!b) throw std::logic_error("member not representable against the joint fan");
    s.bvectors.push_back(std::move(*b));
  }
  std::set<ZVec, LexLess> dirs;
  for (const auto& p : s.members)
    for (const auto& d : p.primitive_edge_directions()) dirs.insert(d);
  s.edge_set.assign(dirs.begin(), dirs.end());
  return s;
}

// Decomposition of a polytope over B(S) modulo Im_Z(H):
// b^H(P) = Σ y_i b^H(S_i) + H w.
struct Decomposition {
  QVec y;
  ZVec w;
  bool integral() const {
    return std::all_of(y.begin(), y.end(), [](const Rat& r) { return r.get_den() == 1; });
  }
  bool nonnegative_integral() const {
    return std::all_of(y.begin(), y.end(),
                       [](const Rat& r) { return r.get_den() == 1 && r >= 0; });
  }
  std::vector<Int> y_int() const {
    std::vector<Int> z;
    for (const Rat& r : y) z.push_back(r.get_num());
    return z;
  }
};

enum class DecomposeError { NotRepresentable, NoSolution, NoIntegralW };

inline std::variant<Decomposition, DecomposeError> decompose(const Polytope& p,
                                                             const BasisSet& s) {
  auto b = b_constant(p, s.h);
  if (!b) return DecomposeError::NotRepresentable;
  ZMat hmat(s.h.size(), ZVec(s.ambient()));
  for (size_t i = 0; i < s.h.size(); ++i) hmat[i] = s.h.rows[i];
  auto res = solve_integer_affine(s.b_columns(), hmat, *b);
  if (auto* err = std::get_if<AffineSolveError>(&res))
    return *err == AffineSolveError::NoSolution ? DecomposeError::NoSolution
                                                : DecomposeError::NoIntegralW;
  auto& sol = std::get<AffineSolution>(res);
  return Decomposition{std::move(sol.y), std::move(sol.w)};
}

struct CanonicalReport {
  bool holds = true;
  size_t member = 0;   // witness on failure
  Polytope face;       // proper face that is a Minkowski summand
};

inline CanonicalReport is_canonical(const BasisSet& s) {
  for (size_t i = 0; i < s.size(); ++i)
    for (const auto& f : s.members[i].proper_faces())
      if (is_summand(f, s.members[i])) return {false, i, f};
  return {};
}

struct HierarchicalReport {
  bool holds = true;
  size_t member = 0;  // witness on failure
  Polytope face;      // proper face outside N[S]
};

inline HierarchicalReport is_hierarchical(const BasisSet& s) {
  for (size_t i = 0; i < s.size(); ++i)
    for (const auto& f : s.members[i].proper_faces()) {
      auto d = decompose(f, s);
      auto* dec = std::get_if<Decomposition>(&d);
      if (!dec || !dec->nonnegative_integral()) return {false, i, f};
    }
  return {};
}

// Orientation: sign per ± pair of H rows, τ(v) = -τ(-v).
struct Orientation {
  std::map<ZVec, int, LexLess> sign;  // over all paired rows
  int of(const ZVec& v) const {
    auto it = sign.find(v);
    return it == sign.end() ? 0 : it->second;
  }
};

struct PositiveBasisReport {
  bool holds = false;
  std::string failure;            // human-readable reason
  // step (i) witness
  std::optional<std::pair<size_t, Polytope>> bad_face;
  // step (ii) witness: a nonzero integer dependency among B(S) mod Im(H)
  std::optional<std::vector<Int>> dependency;
  // step (iii) witness
  std::optional<std::tuple<ZVec, size_t, size_t>> bad_pair;  // (v, S+, S-)
  Orientation orientation;  // valid when holds
};

// Proper-face support test: face_v(S) is a proper face of S.
inline bool supports_proper_face(const Polytope& p, const ZVec& v) {
  Polytope f = p.face_in_direction(v);
  return f.dim() >= 1 && f != p;
}

// A ≤ c·B for some positive integer c, i.e. the normal fan of B refines
// the normal fan of A.
inline bool dilate_summand(const Polytope& a, const Polytope& b) {
  return b_constant(a, h_matrix_of_polytope(b)).has_value();
}

// The positive-basis certificate: (i) every proper face of every member
// decomposes in N[S]; (ii) B(S) is independent over Z modulo Im_Z(H);
// (iii) no row pair (v,-v) carries comparable proper faces on both sides:
// there must be no members S, S' with face_v(S) and face_{-v}(S') both
// proper and one a summand of a dilate of the other.  Incomparable
// opposite faces are allowed — the complete-graph simplex bases have them
// (e.g. the segments on disjoint coordinate pairs supported by a class
// and its negation) and factorization over those bases is sound.  On
// success the H-matrix is certified and an orientation witness extracted.
inline PositiveBasisReport check_positive_basis(BasisSet& s) {
  PositiveBasisReport rep;
  // (i) hierarchical
  for (size_t i = 0; i < s.size(); ++i)
    for (const auto& f : s.members[i].proper_faces()) {
      auto d = decompose(f, s);
      auto* dec = std::get_if<Decomposition>(&d);
      if (!dec || !dec->nonnegative_integral()) {
        rep.failure = "not hierarchical: a proper face of member " +
                      s.names[i] + " is outside N[S]";
        rep.bad_face = {i, f};
        return rep;
      }
    }
  // (ii) basis condition: kernel of [B(S) | H] must have zero y-part.
  {
    size_t r = s.h.size(), m = s.size(), n = s.ambient();
    ZMat full(r, ZVec(m + n));
    ZMat cols = s.b_columns();
    for (size_t i = 0; i < r; ++i) {
      for (size_t j = 0; j < m; ++j) full[i][j] = cols[i][j];
      for (size_t j = 0; j < n; ++j) full[i][m + j] = s.h.rows[i][j];
    }
    for (const auto& k : integer_kernel(full)) {
      bool ypart = false;
      for (size_t j = 0; j < m; ++j)
        if (k[j] != 0) ypart = true;
      if (ypart) {
        rep.failure = "not a basis: B(S) is dependent modulo Im_Z(H)";
        rep.dependency = std::vector<Int>(k.begin(), k.begin() + m);
        return rep;
      }
    }
  }
  // (iii) per ± pair, opposite proper faces must be incomparable.
  std::vector<bool> done(s.h.size(), false);
  std::vector<std::pair<ZVec, int>> signs;
  for (size_t i = 0; i < s.h.size(); ++i) {
    if (done[i]) continue;
    int j = s.h.pair_of[i];
    if (j >= 0) done[j] = true;
    done[i] = true;
    const ZVec& v = s.h.rows[i];
    ZVec mv = neg(v);
    std::vector<std::pair<size_t, Polytope>> plus, minus;
    for (size_t t = 0; t < s.size(); ++t) {
      if (supports_proper_face(s.members[t], v))
        plus.push_back({t, s.members[t].face_in_direction(v)});
      if (supports_proper_face(s.members[t], mv))
        minus.push_back({t, s.members[t].face_in_direction(mv)});
    }
    for (const auto& [ti, fi] : plus)
      for (const auto& [tj, fj] : minus)
        if (dilate_summand(fj, fi) || dilate_summand(fi, fj)) {
          rep.failure = "row " + zvec_to_string(v) +
                        " and its negation support comparable proper faces (members " +
                        s.names[ti] + ", " + s.names[tj] + ")";
          rep.bad_pair = {v, ti, tj};
          return rep;
        }
    int sgn;
    if (!plus.empty() && !minus.empty())
      sgn = 0;  // incomparable faces on both sides: no consistent sign
    else if (!plus.empty())
      sgn = +1;
    else if (!minus.empty())
      sgn = -1;
    else
      sgn = cmp_lex(v, mv) > 0 ? +1 : -1;  // free pair: lex-larger gets +1
    signs.push_back({v, sgn});
    if (j >= 0) signs.push_back({mv, -sgn});
  }
  rep.orientation_exists = true;
  for (auto& [v, sgn] : signs) {
    if (sgn == 0) rep.orientation_exists = false;
    rep.orientation.sign[v] = sgn;
  }
  if (!rep.orientation_exists) rep.orientation.sign.clear();
  rep.holds = true;
  s.certified = true;
  return rep;
}

inline std::optional<Orientation> orientation_extract(BasisSet& s) {
  PositiveBasisReport rep = check_positive_basis(s);
  if (!rep.holds) return std::nullopt;
  return rep.orientation;
}

// Members = Δ_I over the cliques of G with |I| >= 2, in homogeneous
// coordinates of Z^n; ordered by (size, lex).
inline BasisSet graphical_basis(size_t n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 2) throw std::invalid_argument("graphical_basis: need at least two nodes");
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [a, b] : edges) {
    if (a < 1 || b < 1 || (size_t)a > n || (size_t)b > n || a == b)
      throw std::invalid_argument("graphical_basis: bad edge");
    adj[a - 1][b - 1] = adj[b - 1][a - 1] = true;
  }
  std::vector<std::vector<int>> cliques;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> idx;
    for (size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back((int)i);
    if (idx.size() < 2) continue;
    bool clique = true;
    for (size_t a = 0; a < idx.size() && clique; ++a)
      for (size_t b = a + 1; b < idx.size(); ++b)
        if (!adj[idx[a]][idx[b]]) {
          clique = false;
          break;
        }
    if (clique) cliques.push_back(idx);
  }
  if (cliques.empty())
    throw std::invalid_argument("graphical_basis: no cliques of size >= 2");
  std::sort(cliques.begin(), cliques.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  std::vector<Polytope> members;
  std::vector<std::string> names;
  for (const auto& idx : cliques) {
    std::vector<ZVec> pts;
    std::string nm = "D";
    for (int i : idx) {
      ZVec e(n, Int(0));
      e[i] = 1;
      pts.push_back(std::move(e));
      nm += std::to_string(i + 1);
    }
    members.push_back(Polytope::convex_hull(pts));
    names.push_back(std::move(nm));
  }
  return build_basis(members, std::move(names));
}

// Edge-criterion membership in E[S]: every primitive edge class of P lies
// in the edge set of S.  Requires S^1 ⊆ S.
inline bool es_membership(const Polytope& p, const BasisSet& s) {
  for (const auto& d : s.edge_set) {
    bool present = false;
    std::vector<ZVec> seg = {ZVec(s.ambient(), Int(0)), d};
    Polytope segment = Polytope::convex_hull(seg);
    for (const auto& m : s.members)
      if (m.equivalent_to(segment)) {
        present = true;
        break;
      }
    if (!present)
      throw std::invalid_argument(
          "es_membership: hypothesis S^1 ⊆ S violated for direction " +
          zvec_to_string(d));
  }
  for (const auto& d : p.primitive_edge_directions())
    if (!std::binary_search(s.edge_set.begin(), s.edge_set.end(), d, LexLess{}))
      return false;
  return true;
}

}  // namespace tropfactor
