#include <catch2/catch_amalgamated.hpp>
#include <functional>

#include <random>

#include "tropfactor/polytope.hpp"

using namespace tropfactor;

namespace {

// Independent extremality oracle: p is in conv(Q) iff some affinely
// independent subset of <= d+1 points of Q carries p with nonnegative
// barycentric coordinates (Caratheodory).  Entirely hull-free.
bool in_convex_hull_bruteforce(const ZVec& p, const std::vector<ZVec>& q) {
  size_t n = p.size();
  size_t d1 = n + 1;
  std::vector<size_t> idx;
  std::function<bool(size_t, size_t)> rec = [&](size_t start, size_t left) -> bool {
    if (left == 0) {
      // solve sum l_i q_i = p, sum l_i = 1, l_i >= 0
      QMat m(n + 1, QVec(idx.size()));
      QVec rhs(n + 1);
      for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < idx.size(); ++j) m[i][j] = Rat(q[idx[j]][i]);
        rhs[i] = Rat(p[i]);
      }
      for (size_t j = 0; j < idx.size(); ++j) m[n][j] = 1;
      rhs[n] = 1;
      auto sol = solve_rational(m, rhs);
      if (!sol) return false;
      QVec residual(n + 1, Rat(0));
      for (size_t i = 0; i <= n; ++i)
        for (size_t j = 0; j < idx.size(); ++j) residual[i] += m[i][j] * (*sol)[j];
      for (size_t i = 0; i < n; ++i)
        if (residual[i] != Rat(p[i])) return false;
      if (residual[n] != 1) return false;
      for (const Rat& l : *sol)
        if (l < 0) return false;
      return true;
    }
    for (size_t i = start; i + left <= q.size(); ++i) {
      idx.push_back(i);
      if (rec(i + 1, left - 1)) return true;
      idx.pop_back();
    }
    return false;
  };
  for (size_t sz = 1; sz <= std::min(d1, q.size()); ++sz) {
    idx.clear();
    if (rec(0, sz)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("hull of a singleton") {
  auto p = Polytope::convex_hull({zvec_of({0, 0})});
  REQUIRE(p.dim() == 0);
  REQUIRE(p.vertices() == std::vector<ZVec>{zvec_of({0, 0})});
}

TEST_CASE("hull drops edge midpoints") {
  auto p = Polytope::convex_hull(
      {zvec_of({0, 0}), zvec_of({2, 0}), zvec_of({0, 2}), zvec_of({1, 1})});
  REQUIRE(p.dim() == 2);
  REQUIRE(p.vertices() ==
          std::vector<ZVec>{zvec_of({0, 0}), zvec_of({0, 2}), zvec_of({2, 0})});
}

TEST_CASE("hull rejects empty input") {
  REQUIRE_THROWS_AS(Polytope::convex_hull({}), std::invalid_argument);
}

TEST_CASE("random 3d hulls agree with the brute-force extremality oracle") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<ZVec> pts;
    for (int i = 0; i < 20; ++i)
      pts.push_back(zvec_of({(long)(rng() % 6), (long)(rng() % 6), (long)(rng() % 6)}));
    auto hull = Polytope::convex_hull(pts);
    std::sort(pts.begin(), pts.end(), LexLess{});
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (const auto& p : pts) {
      std::vector<ZVec> others;
      for (const auto& q : pts)
        if (q != p) others.push_back(q);
      bool extreme = !in_convex_hull_bruteforce(p, others);
      bool listed = std::binary_search(hull.vertices().begin(), hull.vertices().end(),
                                       p, LexLess{});
      INFO("point " << zvec_to_string(p));
      REQUIRE(extreme == listed);
    }
  }
}

TEST_CASE("hull idempotence") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<ZVec> pts;
    for (int i = 0; i < 12; ++i)
      pts.push_back(zvec_of({(long)(rng() % 7) - 3, (long)(rng() % 7) - 3,
                             (long)(rng() % 3)}));
    auto p = Polytope::convex_hull(pts);
    auto q = Polytope::convex_hull(p.vertices());
    REQUIRE(p == q);
  }
}

TEST_CASE("face in direction") {
  auto square = Polytope::convex_hull(
      {zvec_of({0, 0}), zvec_of({1, 0}), zvec_of({0, 1}), zvec_of({1, 1})});
  auto e = square.face_in_direction(zvec_of({1, 0}));
  REQUIRE(e.vertices() == std::vector<ZVec>{zvec_of({1, 0}), zvec_of({1, 1})});
  REQUIRE(square.face_in_direction(zvec_of({0, 0})) == square);

  // homogeneous simplex in Z^3 supported by (1,1,0)
  auto simplex = Polytope::convex_hull(
      {zvec_of({1, 0, 0}), zvec_of({0, 1, 0}), zvec_of({0, 0, 1})});
  auto f = simplex.face_in_direction(zvec_of({1, 1, 0}));
  REQUIRE(f.vertices() == std::vector<ZVec>{zvec_of({0, 1, 0}), zvec_of({1, 0, 0})});
}

TEST_CASE("proper faces") {
  auto seg = Polytope::convex_hull({zvec_of({0, 0}), zvec_of({3, 0})});
  REQUIRE(seg.proper_faces().empty());

  auto square = Polytope::convex_hull(
      {zvec_of({0, 0}), zvec_of({1, 0}), zvec_of({0, 1}), zvec_of({1, 1})});
  REQUIRE(square.proper_faces().size() == 4);

  auto simplex4 = Polytope::convex_hull({zvec_of({1, 0, 0, 0}), zvec_of({0, 1, 0, 0}),
                                         zvec_of({0, 0, 1, 0}), zvec_of({0, 0, 0, 1})});
  auto faces = simplex4.proper_faces();
  REQUIRE(faces.size() == 10);  // 4 triangles + 6 edges
  int edges = 0, tris = 0;
  for (const auto& f : faces) {
    if (f.dim() == 1) ++edges;
    if (f.dim() == 2) ++tris;
  }
  REQUIRE(edges == 6);
  REQUIRE(tris == 4);
}

TEST_CASE("face closure: supporting vectors re-derive each face") {
  auto simplex4 = Polytope::convex_hull({zvec_of({1, 0, 0, 0}), zvec_of({0, 1, 0, 0}),
                                         zvec_of({0, 0, 1, 0}), zvec_of({0, 0, 0, 1})});
  for (const auto& f : simplex4.proper_faces()) {
    ZVec v = simplex4.supporting_vector(f);
    REQUIRE(simplex4.face_in_direction(v) == f);
  }
}

TEST_CASE("primitive edge directions") {
  auto seg = Polytope::convex_hull({zvec_of({0, 0}), zvec_of({3, 0})});
  REQUIRE(seg.primitive_edge_directions() == std::vector<ZVec>{zvec_of({1, 0})});

  auto square = Polytope::convex_hull(
      {zvec_of({0, 0}), zvec_of({1, 0}), zvec_of({0, 1}), zvec_of({1, 1})});
  REQUIRE(square.primitive_edge_directions() ==
          std::vector<ZVec>{zvec_of({0, 1}), zvec_of({1, 0})});
}

TEST_CASE("non-full-dimensional hulls work inside the affine hull") {
  // A triangle in the plane x+y+z = 2 of Z^3.
  auto tri = Polytope::convex_hull(
      {zvec_of({2, 0, 0}), zvec_of({0, 2, 0}), zvec_of({0, 0, 2}), zvec_of({1, 1, 0})});
  REQUIRE(tri.dim() == 2);
  REQUIRE(tri.vertices().size() == 3);
  REQUIRE(tri.facets().size() == 3);
  for (const auto& f : tri.facets()) {
    REQUIRE(f.normal.back() == 0);  // canonical representative mod (1,1,1)
  }
}

TEST_CASE("determinism: same input, same structure") {
  std::vector<ZVec> pts = {zvec_of({0, 0, 0}), zvec_of({4, 0, 1}), zvec_of({1, 3, 0}),
                           zvec_of({2, 2, 2}), zvec_of({0, 4, 1}), zvec_of({3, 1, 3})};
  auto a = Polytope::convex_hull(pts);
  std::reverse(pts.begin(), pts.end());
  auto b = Polytope::convex_hull(pts);
  REQUIRE(a == b);
  REQUIRE(a.facets().size() == b.facets().size());
  for (size_t i = 0; i < a.facets().size(); ++i) {
    REQUIRE(a.facets()[i].normal == b.facets()[i].normal);
    REQUIRE(a.facets()[i].offset == b.facets()[i].offset);
  }
}
