#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tropfactor/tropical.hpp"

using namespace tropfactor;

namespace {

TropicalPoly random_poly(std::mt19937_64& rng, size_t n, int nterms, long box) {
  std::map<ZVec, Rat, LexLess> terms;
  for (int i = 0; i < nterms; ++i) {
    ZVec e(n);
    for (auto& x : e) x = (long)(rng() % (box + 1));
    terms[e] = make_rat(Int((long)(rng() % 21) - 10), Int(1 + (long)(rng() % 3)));
  }
  return TropicalPoly(n, std::move(terms));
}

}  // namespace

TEST_CASE("newton polytope of a monomial") {
  auto m = monomial(2, zvec_of({1, 2}), Rat(3));
  auto p = newton_polytope(m);
  REQUIRE(p.dim() == 0);
  REQUIRE(p.vertices() == std::vector<ZVec>{zvec_of({1, 2})});
  REQUIRE(is_unit(m));
}

TEST_CASE("subdivision of a monomial is a single point cell") {
  auto s = regular_subdivision(monomial(2, zvec_of({1, 2}), Rat(3)));
  REQUIRE(s.cells.size() == 1);
  REQUIRE(s.cells[0].poly.dim() == 0);
  REQUIRE(s.cells[0].functional(zvec_of({1, 2})) == Rat(3));
}

TEST_CASE("max(x1, x2) is a unit") {
  auto f = make_poly(2, {{zvec_of({1, 0}), Rat(0)}, {zvec_of({0, 1}), Rat(0)}});
  REQUIRE(is_unit(f));
}

TEST_CASE("a genuinely subdivided polynomial is not a unit") {
  // 0 ⊕ x ⊕ x^2 with the middle lifted above the envelope: two cells.
  auto f = make_poly(1, {{zvec_of({0}), Rat(0)},
                         {zvec_of({1}), Rat(1)},
                         {zvec_of({2}), Rat(0)}});
  auto s = regular_subdivision(f);
  REQUIRE(s.cells.size() == 2);
  REQUIRE_FALSE(is_unit(f));
  // Regularity: l_sigma(a) >= c_a with equality at cell vertices.
  for (const auto& cell : s.cells)
    for (const auto& [e, c] : f.terms()) {
      REQUIRE(cell.functional(e) >= c);
    }
}

TEST_CASE("multiply shifts by monomials") {
  auto f = make_poly(2, {{zvec_of({0, 0}), Rat(1)}, {zvec_of({1, 0}), Rat(0)}});
  auto m = monomial(2, zvec_of({2, 3}), Rat(5));
  auto fm = multiply(f, m);
  REQUIRE(fm == make_poly(2, {{zvec_of({2, 3}), Rat(6)}, {zvec_of({3, 3}), Rat(5)}}));
}

TEST_CASE("newton polytope of a product is the minkowski sum") {
  std::mt19937_64 rng(4096);
  for (int trial = 0; trial < 20; ++trial) {
    size_t n = 2 + trial % 2;
    auto f = random_poly(rng, n, 4, 3);
    auto g = random_poly(rng, n, 4, 3);
    REQUIRE(newton_polytope(multiply(f, g)) ==
            minkowski_sum(newton_polytope(f), newton_polytope(g)));
  }
}

TEST_CASE("multiply commutes and associates as functions") {
  std::mt19937_64 rng(8);
  auto f = random_poly(rng, 2, 4, 2);
  auto g = random_poly(rng, 2, 3, 2);
  auto h = random_poly(rng, 2, 3, 2);
  REQUIRE(multiply(f, g) == multiply(g, f));
  REQUIRE(multiply(multiply(f, g), h) == multiply(f, multiply(g, h)));
}

TEST_CASE("unit_from") {
  auto p = Polytope::convex_hull({zvec_of({1, 0, 0}), zvec_of({0, 1, 0}),
                                  zvec_of({0, 0, 1})});
  CellFunctional zero{QVec(3, Rat(0)), Rat(0)};
  auto u = unit_from(p, zero);
  REQUIRE(u == make_poly(3, {{zvec_of({1, 0, 0}), Rat(0)},
                             {zvec_of({0, 1, 0}), Rat(0)},
                             {zvec_of({0, 0, 1}), Rat(0)}}));
  REQUIRE(is_unit(u));

  CellFunctional l{QVec{Rat(2), Rat(-1), Rat(0)}, Rat(1)};
  auto pt = Polytope::convex_hull({zvec_of({1, 2, 0})});
  auto mono = unit_from(pt, l);
  REQUIRE(mono == monomial(3, zvec_of({1, 2, 0}), Rat(1)));
}

TEST_CASE("equality as functions absorbs dominated terms") {
  auto f = make_poly(1, {{zvec_of({0}), Rat(0)},
                         {zvec_of({1}), Rat(0)},
                         {zvec_of({2}), Rat(0)}});
  auto g = make_poly(1, {{zvec_of({0}), Rat(0)}, {zvec_of({2}), Rat(0)}});
  REQUIRE(equal_as_functions(f, g));
  // raising a coefficient above its concavified value breaks it
  auto h = make_poly(1, {{zvec_of({0}), Rat(0)},
                         {zvec_of({1}), Rat(1)},
                         {zvec_of({2}), Rat(0)}});
  REQUIRE_FALSE(equal_as_functions(f, h));
}

TEST_CASE("equality as complexes finds the witness monomial") {
  std::mt19937_64 rng(51);
  auto f = random_poly(rng, 2, 5, 3);
  auto g3 = multiply(f, monomial(2, zvec_of({0, 0}), Rat(3)));
  auto w = equal_as_complexes(g3, f);
  REQUIRE(w.has_value());
  REQUIRE(w->constant == Rat(3));
  REQUIRE(w->shift == zvec_of({0, 0}));

  auto gx = multiply(f, monomial(2, zvec_of({1, 0}), Rat(0)));
  auto wx = equal_as_complexes(gx, f);
  REQUIRE(wx.has_value());
  REQUIRE(wx->constant == Rat(0));
  REQUIRE(wx->shift == zvec_of({1, 0}));

  REQUIRE_FALSE(equal_as_complexes(f, multiply(f, f)).has_value());
}

TEST_CASE("equal_as_complexes implies equal_as_functions after the witness") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 10; ++t) {
    auto f = random_poly(rng, 2, 5, 3);
    auto g = multiply(f, monomial(2, zvec_of({(long)(rng() % 3), (long)(rng() % 3)}),
                                  Rat((long)(rng() % 5) - 2)));
    auto w = equal_as_complexes(g, f);
    REQUIRE(w.has_value());
    auto back = multiply(f, monomial(2, w->shift, w->constant));
    REQUIRE(equal_as_functions(g, back));
  }
}

TEST_CASE("homogenize and dehomogenize") {
  auto f = make_poly(1, {{zvec_of({0}), Rat(0)}, {zvec_of({1}), Rat(0)}});
  auto h = homogenize(f);
  REQUIRE(h == make_poly(2, {{zvec_of({0, 1}), Rat(0)}, {zvec_of({1, 0}), Rat(0)}}));
  REQUIRE(h.is_homogeneous());

  std::mt19937_64 rng(13);
  for (int t = 0; t < 10; ++t) {
    auto g = random_poly(rng, 2, 5, 4);
    REQUIRE(dehomogenize(homogenize(g)) == g);
  }
}

TEST_CASE("subdivision tiles the support and respects regularity") {
  std::mt19937_64 rng(2718);
  for (int t = 0; t < 15; ++t) {
    auto f = random_poly(rng, 2, 6, 4);
    auto s = regular_subdivision(f);
    // regularity
    for (const auto& cell : s.cells) {
      for (const auto& [e, c] : f.terms()) REQUIRE(cell.functional(e) >= c);
      for (const auto& v : cell.poly.vertices()) {
        auto it = f.terms().find(v);
        REQUIRE(it != f.terms().end());
        REQUIRE(cell.functional(v) == it->second);
      }
    }
    // tiling by normalized area (dim 2): sum of cell areas = support area
    auto area2 = [](const Polytope& p) -> Int {
      if (p.dim() < 2) return 0;
      const auto& vs = p.vertices();
      // shoelace over the cyclic boundary order: sort by angle around the
      // centroid is overkill; use triangulation from vertex 0 via convex
      // position order along the hull boundary. Easiest exact route: sum of
      // |det| over a fan after ordering by the hull's 2d boundary.
      // Vertices are lex-sorted, so re-derive boundary order via gift wrap.
      std::vector<ZVec> pts = vs;
      // gift wrap from lex-min
      std::vector<ZVec> ordered;
      ZVec cur = pts[0];
      ordered.push_back(cur);
      while (true) {
        ZVec next = pts[0] == cur && pts.size() > 1 ? pts[1] : pts[0];
        for (const auto& cand : pts) {
          if (cand == cur) continue;
          ZVec a = sub(next, cur), b = sub(cand, cur);
          Int cross = a[0] * b[1] - a[1] * b[0];
          if (next == cur || cross < 0) next = cand;
        }
        if (next == ordered[0]) break;
        ordered.push_back(next);
        cur = next;
        if (ordered.size() > pts.size()) break;
      }
      Int twice = 0;
      for (size_t i = 1; i + 1 < ordered.size(); ++i) {
        ZVec a = sub(ordered[i], ordered[0]), b = sub(ordered[i + 1], ordered[0]);
        twice += abs(a[0] * b[1] - a[1] * b[0]);
      }
      return twice;
    };
    Int total = 0;
    for (const auto& cell : s.cells) total += area2(cell.poly);
    if (s.support.dim() == 2) REQUIRE(total == area2(s.support));
  }
}

TEST_CASE("legendre transform values") {
  // f = max(0, x): f*(y) = 0 on [0,1], infinite outside.
  auto f = make_poly(1, {{zvec_of({0}), Rat(0)}, {zvec_of({1}), Rat(0)}});
  REQUIRE(legendre_value(f, {Rat(0)}) == Rat(0));
  REQUIRE(legendre_value(f, {make_rat(1, 2)}) == Rat(0));
  REQUIRE_FALSE(legendre_value(f, {Rat(2)}).has_value());

  // lifted vertex: f*(a) = -c_a on the lower hull
  auto g = make_poly(1, {{zvec_of({0}), Rat(1)}, {zvec_of({2}), Rat(-1)}});
  REQUIRE(legendre_value(g, {Rat(0)}) == Rat(-1));
  REQUIRE(legendre_value(g, {Rat(2)}) == Rat(1));
  // continuity across the shared point of two cells
  auto h = make_poly(1, {{zvec_of({0}), Rat(0)},
                         {zvec_of({1}), Rat(2)},
                         {zvec_of({2}), Rat(0)}});
  REQUIRE(legendre_value(h, {Rat(1)}) == Rat(-2));
}

TEST_CASE("product subdivision cells are sums of factor cells") {
  std::mt19937_64 rng(31415);
  for (int t = 0; t < 8; ++t) {
    auto f = random_poly(rng, 2, 4, 2);
    auto g = random_poly(rng, 2, 4, 2);
    auto sf = regular_subdivision(f);
    auto sg = regular_subdivision(g);
    auto sh = regular_subdivision(multiply(f, g));
    for (const auto& ch : sh.cells) {
      bool found = false;
      for (const auto& cf : sf.cells) {
        for (const auto& cg : sg.cells) {
          // candidate decomposition: faces of factor cells summing to ch
          if (minkowski_sum(cf.poly, cg.poly) == ch.poly) found = true;
          if (found) break;
        }
        if (found) break;
      }
      // each product cell is a sum of one f-cell face and one g-cell face;
      // restricting to maximal cells can fail, so also try faces.
      if (!found) {
        auto faces_of = [](const Polytope& p) {
          std::vector<Polytope> fs = p.proper_faces();
          fs.push_back(p);
          for (const auto& v : p.vertices())
            fs.push_back(Polytope::convex_hull({v}));
          return fs;
        };
        for (const auto& cf : sf.cells) {
          for (const auto& ff : faces_of(cf.poly)) {
            for (const auto& cg : sg.cells) {
              for (const auto& fg : faces_of(cg.poly)) {
                if (minkowski_sum(ff, fg) == ch.poly) found = true;
                if (found) break;
              }
              if (found) break;
            }
            if (found) break;
          }
          if (found) break;
        }
      }
      REQUIRE(found);
    }
  }
}
