// Bundled example data: generators for the polytope bases and tropical
// polynomials that ship as fixtures and drive the test corpus.
#pragma once

#include "tropfactor/basis.hpp"

namespace tropfactor {

struct WeightedGraph {
  size_t nodes = 0;
  struct Edge {
    int a, b;
    Rat w;
  };
  std::vector<Edge> edges;
};

namespace detail {
inline bool connects(const std::vector<std::pair<int, int>>& es, size_t nodes) {
  std::vector<int> parent(nodes + 1);
  for (size_t i = 0; i <= nodes; ++i) parent[i] = (int)i;
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (auto [a, b] : es) parent[find(a)] = find(b);
  for (size_t i = 2; i <= nodes; ++i)
    if (find((int)i) != find(1)) return false;
  return true;
}
}  // namespace detail

// One term per spanning tree T: exponent = indicator of E(T), coefficient
// = -(sum of the weights of T).
inline TropicalPoly spanning_tree_polynomial(const WeightedGraph& g) {
  size_t m = g.edges.size();
  std::vector<std::pair<int, int>> all;
  for (const auto& e : g.edges) all.push_back({e.a, e.b});
  if (!detail::connects(all, g.nodes))
    throw std::invalid_argument("spanning_tree_polynomial: graph not connected");
  std::map<ZVec, Rat, LexLess> terms;
  size_t treesz = g.nodes - 1;
  std::vector<size_t> idx;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (idx.size() == treesz) {
      std::vector<std::pair<int, int>> sel;
      for (size_t i : idx) sel.push_back({g.edges[i].a, g.edges[i].b});
      if (!detail::connects(sel, g.nodes)) return;  // n-1 edges + connected = tree
      ZVec e(m, Int(0));
      Rat w(0);
      for (size_t i : idx) {
        e[i] = 1;
        w += g.edges[i].w;
      }
      terms.emplace(std::move(e), -w);
      return;
    }
    for (size_t i = start; m - i >= treesz - idx.size(); ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);
  return TropicalPoly(m, std::move(terms));
}

namespace data {

inline Polytope hull(std::initializer_list<std::initializer_list<long>> pts) {
  std::vector<ZVec> v;
  for (auto& p : pts) {
    ZVec z;
    for (long x : p) z.emplace_back(x);
    v.push_back(std::move(z));
  }
  return Polytope::convex_hull(v);
}

// Weighted 4-node graph behind the spanning-tree example: K4 minus one
// edge.  The weights are the unique solution of the eight tree-sum
// equations fixing the target coefficients (-6, -7, -8, -9, -13/2, -15/2,
// -19/2, -21/2).
inline WeightedGraph example_graph() {
  WeightedGraph g;
  g.nodes = 4;
  g.edges = {{1, 2, Rat(1)},
             {2, 4, Rat(2)},
             {3, 4, Rat(3)},
             {1, 3, Rat(4)},
             {2, 3, make_rat(7, 2)}};
  return g;
}

inline TropicalPoly poly_fG() { return spanning_tree_polynomial(example_graph()); }

// The four denominator units paired with poly_fG over the complete-graph
// basis on five nodes, and their product.
inline std::vector<TropicalPoly> units_gG() {
  auto u = [](std::initializer_list<std::pair<std::initializer_list<long>, Rat>> ts) {
    std::map<ZVec, Rat, LexLess> m;
    for (auto& [e, c] : ts) {
      ZVec z;
      for (long x : e) z.emplace_back(x);
      m.emplace(std::move(z), c);
    }
    return TropicalPoly(5, std::move(m));
  };
  return {
      u({{{1, 0, 0, 0, 0}, Rat(0)},
         {{0, 1, 0, 0, 0}, Rat(-1)},
         {{0, 0, 1, 0, 0}, Rat(-2)},
         {{0, 0, 0, 0, 1}, make_rat(-5, 2)}}),
      u({{{1, 0, 0, 0, 0}, Rat(0)},
         {{0, 1, 0, 0, 0}, Rat(-1)},
         {{0, 0, 0, 1, 0}, Rat(-3)},
         {{0, 0, 0, 0, 1}, make_rat(-5, 2)}}),
      u({{{1, 0, 0, 0, 0}, Rat(0)},
         {{0, 0, 1, 0, 0}, Rat(-2)},
         {{0, 0, 0, 1, 0}, Rat(-3)},
         {{0, 0, 0, 0, 1}, make_rat(-5, 2)}}),
      u({{{0, 1, 0, 0, 0}, Rat(0)},
         {{0, 0, 1, 0, 0}, Rat(-1)},
         {{0, 0, 0, 1, 0}, Rat(-2)},
         {{0, 0, 0, 0, 1}, make_rat(-3, 2)}}),
  };
}

inline TropicalPoly poly_gG() { return multiply(units_gG()); }

// Homogeneous cubic in four variables whose subdivision has 14 maximal
// cells; a quadratic discrete-convex example in disguise.
inline TropicalPoly poly_quad() {
  auto t = [](std::initializer_list<long> e, long c) {
    ZVec z;
    for (long x : e) z.emplace_back(x);
    return std::pair<ZVec, Rat>(z, Rat(c));
  };
  std::map<ZVec, Rat, LexLess> m;
  for (auto& [e, c] : {t({3, 0, 0, 0}, -18), t({0, 3, 0, 0}, -45), t({0, 0, 3, 0}, -54),
                       t({0, 0, 0, 3}, -81), t({1, 2, 0, 0}, -34), t({1, 0, 2, 0}, -34),
                       t({1, 0, 0, 2}, -42), t({2, 1, 0, 0}, -25), t({2, 0, 1, 0}, -22),
                       t({2, 0, 0, 1}, -21), t({0, 1, 2, 0}, -45), t({0, 1, 0, 2}, -53),
                       t({0, 2, 1, 0}, -42), t({0, 2, 0, 1}, -41), t({0, 0, 1, 2}, -54),
                       t({0, 0, 2, 1}, -45), t({1, 1, 1, 0}, -31), t({1, 1, 0, 1}, -30),
                       t({1, 0, 1, 1}, -29), t({0, 1, 1, 1}, -40)})
    m.emplace(e, c);
  return TropicalPoly(4, std::move(m));
}

// Homogeneous quartic in three variables with three maximal cells.
inline TropicalPoly poly_fq() {
  std::map<ZVec, Rat, LexLess> m;
  m.emplace(zvec_of({2, 2, 0}), Rat(0));
  m.emplace(zvec_of({1, 3, 0}), Rat(-2));
  m.emplace(zvec_of({1, 1, 2}), Rat(-3));
  m.emplace(zvec_of({3, 0, 1}), Rat(-1));
  m.emplace(zvec_of({1, 2, 1}), Rat(-4));
  m.emplace(zvec_of({4, 0, 0}), Rat(-3));
  return TropicalPoly(3, std::move(m));
}

// The six primitive plane edge classes used by the decagon bases.
inline std::vector<Polytope> plane_edge_classes() {
  return {hull({{0, 0}, {0, 1}}), hull({{0, 0}, {1, 0}}), hull({{0, 0}, {1, 1}}),
          hull({{0, 2}, {1, 0}}), hull({{0, 1}, {2, 0}}), hull({{0, 1}, {1, 0}})};
}

// Ten-polytope full positive basis (homogenized plane polytopes embedded
// in the degree planes of Z^3), orientation -,-,+,-,+,+ on the rows
// (1,0,0),(0,1,0),(1,1,0),(1,-1,0),(1,2,0),(2,1,0).
inline std::vector<Polytope> basis_fig2_members() {
  return {
      hull({{0, 0, 2}, {1, 1, 0}, {2, 0, 0}}),   // P1
      hull({{0, 0, 2}, {0, 1, 1}, {2, 0, 0}}),   // P2
      hull({{0, 0, 2}, {0, 2, 0}, {1, 0, 1}}),   // P3
      hull({{0, 0, 2}, {0, 1, 1}, {1, 0, 1}}),   // P4
      hull({{0, 0, 1}, {0, 1, 0}}),              // P5
      hull({{0, 0, 1}, {1, 0, 0}}),              // P6
      hull({{0, 0, 2}, {1, 1, 0}}),              // P7
      hull({{0, 1, 0}, {1, 0, 0}}),              // P8
      hull({{0, 2, 0}, {1, 0, 1}}),              // P9
      hull({{0, 1, 1}, {2, 0, 0}}),              // P10
  };
}

// Companion ten-polytope basis realizing the opposite orientation
// -,-,+,+,-,- on the same six row classes.
inline std::vector<Polytope> basis_fig3_members() {
  return {
      hull({{0, 0, 2}, {0, 2, 0}, {1, 1, 0}}),           // Q1
      hull({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}),           // Q2
      hull({{0, 1, 1}, {0, 2, 0}, {2, 0, 0}}),           // Q3
      hull({{0, 2, 0}, {1, 0, 1}, {2, 0, 0}}),           // Q4
      hull({{0, 0, 1}, {0, 1, 0}}),                      // Q5
      hull({{0, 0, 1}, {1, 0, 0}}),                      // Q6
      hull({{0, 0, 2}, {1, 1, 0}}),                      // Q7
      hull({{0, 1, 0}, {1, 0, 0}}),                      // Q8
      hull({{0, 2, 0}, {1, 0, 1}}),                      // Q9
      hull({{0, 1, 1}, {2, 0, 0}}),                      // Q10
  };
}

inline BasisSet basis_fig2() {
  return build_basis(basis_fig2_members(),
                     {"P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8", "P9", "P10"});
}

inline BasisSet basis_fig3() {
  return build_basis(basis_fig3_members(),
                     {"Q1", "Q2", "Q3", "Q4", "Q5", "Q6", "Q7", "Q8", "Q9", "Q10"});
}

inline std::vector<std::pair<int, int>> complete_graph_edges(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) es.push_back({i, j});
  return es;
}

inline BasisSet basis_K(int n) { return graphical_basis(n, complete_graph_edges(n)); }

}  // namespace data
}  // namespace tropfactor
