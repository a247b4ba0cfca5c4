#pragma once

#include <cstdlib>
#include <set>
#include <utility>
#include <vector>

#include "rep12/graph.hpp"

namespace rep12 {

// Induced subgraph of the square lattice: one vertex per cell, edges between
// cells at unit distance.
struct GridGraph {
  std::vector<std::pair<int, int>> cells;  // cells[v] = lattice point of vertex v
  Graph graph;
};

inline GridGraph grid_from_points(const std::vector<std::pair<int, int>>& points) {
  std::set<std::pair<int, int>> seen;
  for (const auto& p : points)
    if (!seen.insert(p).second) throw InvalidInput("grid: duplicate point");
  int n = static_cast<int>(points.size());
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int dx = std::abs(points[u].first - points[v].first);
      int dy = std::abs(points[u].second - points[v].second);
      if (dx + dy == 1) g.add_edge(u, v);
    }
  return {points, g};
}

inline GridGraph full_grid(int rows, int cols) {
  std::vector<std::pair<int, int>> points;
  for (int x = 0; x < rows; ++x)
    for (int y = 0; y < cols; ++y) points.emplace_back(x, y);
  return grid_from_points(points);
}

// T3: three paths of three edges each, glued at a common center.
inline GridGraph t3() {
  return grid_from_points({{0, 0},
                           {0, 1},
                           {0, 2},
                           {0, 3},
                           {1, 0},
                           {2, 0},
                           {3, 0},
                           {-1, 0},
                           {-2, 0},
                           {-3, 0}});
}

// The six minimal forbidden induced subgraphs for grid graphs, T3 first and
// the 9-vertex graph X last.  Every non-representable grid graph without a
// long induced cycle contains one of these.
inline std::vector<GridGraph> forbidden_grid_subgraphs() {
  std::vector<GridGraph> out;
  out.push_back(t3());
  // A 4-cell column flanked by two 3-cell columns hanging one cell lower.
  out.push_back(grid_from_points({{0, 1},
                                  {0, 2},
                                  {0, 3},
                                  {0, 4},
                                  {1, 0},
                                  {1, 1},
                                  {1, 2},
                                  {-1, 0},
                                  {-1, 1},
                                  {-1, 2}}));
  // Two bent 5-paths joined by rungs at their last three vertices.
  out.push_back(grid_from_points({{-2, 0},
                                  {-1, 0},
                                  {0, 0},
                                  {0, 1},
                                  {0, 2},
                                  {3, 0},
                                  {2, 0},
                                  {1, 0},
                                  {1, 1},
                                  {1, 2}}));
  // Three legs from a center, plus one cell closing a 4-cycle with two legs.
  out.push_back(grid_from_points({{0, 0},
                                  {0, 1},
                                  {0, 2},
                                  {1, 0},
                                  {2, 0},
                                  {3, 0},
                                  {0, -1},
                                  {0, -2},
                                  {0, -3},
                                  {1, -1}}));
  // A 7-path with a pendant 2-path in the middle and a parallel 3-path below.
  out.push_back(grid_from_points({{0, 2},
                                  {0, 1},
                                  {-3, 0},
                                  {-2, 0},
                                  {-1, 0},
                                  {0, 0},
                                  {1, 0},
                                  {2, 0},
                                  {3, 0},
                                  {-1, -1},
                                  {0, -1},
                                  {1, -1}}));
  // X: a 3x3 block minus one corner, with a pendant cell on the opposite rim.
  out.push_back(grid_from_points({{1, 2},
                                  {1, 1},
                                  {1, 0},
                                  {1, -1},
                                  {0, -1},
                                  {0, 0},
                                  {0, 1},
                                  {-1, 1},
                                  {-1, 0}}));
  return out;
}

}  // namespace rep12
