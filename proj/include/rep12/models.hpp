#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rep12/base.hpp"
#include "rep12/graph.hpp"
#include "rep12/word.hpp"

namespace rep12 {

// Interval containment bigraph model: one interval per vertex, classes
// 0 ("X") and 1 ("Y"); x and y are adjacent iff the interval of x properly
// contains the interval of y.
struct IntervalModel {
  std::vector<double> lo, hi;
  std::vector<int> cls;

  int n() const { return static_cast<int>(lo.size()); }
};

// Simple-triangle model: every vertex is a triangle spanned by an apex point
// on one line and a base interval on a parallel line; vertices are adjacent
// iff their triangles intersect.
struct TriangleModel {
  std::vector<double> apex, lo, hi;

  int n() const { return static_cast<int>(apex.size()); }
};

inline void check_interval_sides(const std::vector<double>& lo,
                                 const std::vector<double>& hi) {
  if (lo.size() != hi.size()) throw InvalidInput("model: size mismatch");
  for (std::size_t v = 0; v < lo.size(); ++v)
    if (!(lo[v] < hi[v])) throw InvalidInput("model: interval ends not increasing");
}

inline void check_endpoints_distinct(const std::vector<double>& lo,
                                     const std::vector<double>& hi) {
  std::vector<double> all(lo);
  all.insert(all.end(), hi.begin(), hi.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw InvalidInput("model: endpoints not pairwise distinct");
}

inline void check_interval_model(const IntervalModel& m) {
  check_interval_sides(m.lo, m.hi);
  if (m.cls.size() != m.lo.size()) throw InvalidInput("model: size mismatch");
  for (int c : m.cls)
    if (c != 0 && c != 1) throw InvalidInput("model: classes must be 0 or 1");
  check_endpoints_distinct(m.lo, m.hi);
}

inline void check_triangle_model(const TriangleModel& m) {
  check_interval_sides(m.lo, m.hi);
  if (m.apex.size() != m.lo.size()) throw InvalidInput("model: size mismatch");
  std::vector<double> apexes(m.apex);
  std::sort(apexes.begin(), apexes.end());
  if (std::adjacent_find(apexes.begin(), apexes.end()) != apexes.end())
    throw InvalidInput("model: duplicate apexes");
  check_endpoints_distinct(m.lo, m.hi);
}

inline bool icb_pair_adjacent(const IntervalModel& m, int u, int v) {
  if (m.cls[u] == m.cls[v]) return false;
  int x = m.cls[u] == 0 ? u : v;
  int y = m.cls[u] == 0 ? v : u;
  return m.lo[x] < m.lo[y] && m.hi[y] < m.hi[x];
}

// Two triangles intersect unless one lies entirely to the left of the other
// in both apex and base; with apex(u) < apex(v) that reads hi[u] < lo[v].
inline bool triangle_pair_adjacent(const TriangleModel& m, int u, int v) {
  if (m.apex[v] < m.apex[u]) std::swap(u, v);
  return !(m.hi[u] < m.lo[v]);
}

inline Graph icb_implied_graph(const IntervalModel& m) {
  Graph g(m.n());
  for (int u = 0; u < m.n(); ++u)
    for (int v = u + 1; v < m.n(); ++v)
      if (icb_pair_adjacent(m, u, v)) g.add_edge(u, v);
  return g;
}

inline Graph triangle_implied_graph(const TriangleModel& m) {
  Graph g(m.n());
  for (int u = 0; u < m.n(); ++u)
    for (int v = u + 1; v < m.n(); ++v)
      if (triangle_pair_adjacent(m, u, v)) g.add_edge(u, v);
  return g;
}

// First vertex pair on which the model disagrees with g, if any.  The class
// assignment must be a bipartition of g; containment between same-class
// intervals never encodes an edge.
inline std::optional<std::pair<int, int>> validate_icb(const Graph& g,
                                                       const IntervalModel& m) {
  if (g.n() != m.n()) throw InvalidInput("model: size mismatch with graph");
  check_interval_sides(m.lo, m.hi);
  for (int c : m.cls)
    if (c != 0 && c != 1) throw InvalidInput("model: classes must be 0 or 1");
  for (auto [u, v] : g.edges())
    if (m.cls[u] == m.cls[v]) throw InvalidInput("model: bipartition mismatch");
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (g.adjacent(u, v) != icb_pair_adjacent(m, u, v))
        return std::make_pair(u, v);
  return std::nullopt;
}

inline std::optional<std::pair<int, int>> validate_triangle(
    const Graph& g, const TriangleModel& m) {
  if (g.n() != m.n()) throw InvalidInput("model: size mismatch with graph");
  check_interval_sides(m.lo, m.hi);
  std::vector<double> apexes(m.apex);
  std::sort(apexes.begin(), apexes.end());
  if (std::adjacent_find(apexes.begin(), apexes.end()) != apexes.end())
    throw InvalidInput("model: duplicate apexes");
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (g.adjacent(u, v) != triangle_pair_adjacent(m, u, v))
        return std::make_pair(u, v);
  return std::nullopt;
}

struct Representant {
  Labeling labels;
  Word word;
};

namespace detail {

inline std::vector<int> ranks_of(const std::vector<double>& values) {
  std::vector<int> idx(values.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return values[a] < values[b]; });
  std::vector<int> rank(values.size());
  for (std::size_t i = 0; i < idx.size(); ++i) rank[idx[i]] = static_cast<int>(i) + 1;
  return rank;
}

// Kahn's algorithm; ties broken by lowest node id first.  Returns 1-based
// positions per node, or nullopt when the digraph is cyclic.
inline std::optional<std::vector<int>> topo_positions(
    int n, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<std::vector<int>> out(n);
  std::vector<int> indeg(n, 0);
  for (auto [a, b] : arcs) {
    out[a].push_back(b);
    ++indeg[b];
  }
  std::set<int> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.insert(v);
  std::vector<int> pos(n, 0);
  int next = 0;
  while (!ready.empty()) {
    int v = *ready.begin();
    ready.erase(ready.begin());
    pos[v] = ++next;
    for (int w : out[v])
      if (--indeg[w] == 0) ready.insert(w);
  }
  if (next != n) return std::nullopt;
  return pos;
}

}  // namespace detail

// Word construction for an interval containment bigraph model.  Vertices are
// labeled by the rank of their left endpoint; the word is pi_y pi_r pi_x,
// where pi_r lists labels by ascending right endpoint and pi_x, pi_y list the
// labels of each class in ascending order.  The word 12-represents the
// model's implied graph under the emitted labeling.
inline Representant icb_to_representant(const IntervalModel& m) {
  check_interval_model(m);
  int n = m.n();
  Labeling labels = detail::ranks_of(m.lo);
  std::vector<int> by_right(n);
  for (int v = 0; v < n; ++v) by_right[v] = v;
  std::sort(by_right.begin(), by_right.end(),
            [&](int a, int b) { return m.hi[a] < m.hi[b]; });
  auto class_labels = [&](int c) {
    std::vector<int> side;
    for (int v = 0; v < n; ++v)
      if (m.cls[v] == c) side.push_back(labels[v]);
    std::sort(side.begin(), side.end());
    return side;
  };
  Word w;
  w.reserve(2 * static_cast<std::size_t>(n));
  for (int label : class_labels(1)) w.push_back(label);
  for (int v : by_right) w.push_back(labels[v]);
  for (int label : class_labels(0)) w.push_back(label);
  return {labels, w};
}

// Word construction for a simple-triangle model.  Vertices are labeled by
// apex rank; the word reads off the owner of every base endpoint from right
// to left.  The word 12-represents the complement of the model's implied
// graph under the emitted labeling.
inline Representant triangle_to_representant(const TriangleModel& m) {
  check_triangle_model(m);
  int n = m.n();
  Labeling labels = detail::ranks_of(m.apex);
  std::vector<std::pair<double, int>> endpoints;
  endpoints.reserve(2 * static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    endpoints.emplace_back(m.lo[v], labels[v]);
    endpoints.emplace_back(m.hi[v], labels[v]);
  }
  std::sort(endpoints.begin(), endpoints.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  Word w;
  w.reserve(endpoints.size());
  for (const auto& [coord, label] : endpoints) w.push_back(label);
  return {labels, w};
}

// Simple-triangle model realizing the given ordering as apex order, built
// from the endpoint constraint digraph: l_v -> r_v for every v, and for each
// pair u before v, r_u -> l_v when uv is an edge and l_v -> r_u otherwise.
// A topological order of the 2n endpoints yields base positions 1..2n; the
// digraph is cyclic exactly when the ordering contains a forbidden pattern.
// The result is a model of the complement of g.
inline std::optional<TriangleModel> try_ordering_to_triangle_model(
    const Graph& g, const Labeling& labeling) {
  int n = g.n();
  check_canonical_labeling(labeling, n);
  std::vector<int> order = order_from_labeling(labeling);
  auto left = [](int a) { return 2 * (a - 1); };
  auto right = [](int a) { return 2 * (a - 1) + 1; };
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(static_cast<std::size_t>(n) * n);
  for (int a = 1; a <= n; ++a) arcs.emplace_back(left(a), right(a));
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      if (g.adjacent(order[a - 1], order[b - 1]))
        arcs.emplace_back(right(a), left(b));
      else
        arcs.emplace_back(left(b), right(a));
    }
  auto pos = detail::topo_positions(2 * n, arcs);
  if (!pos) return std::nullopt;
  TriangleModel m;
  m.apex.resize(n);
  m.lo.resize(n);
  m.hi.resize(n);
  for (int v = 0; v < n; ++v) {
    int a = labeling[v];
    m.apex[v] = a;
    m.lo[v] = (*pos)[left(a)];
    m.hi[v] = (*pos)[right(a)];
  }
  return m;
}

inline TriangleModel ordering_to_triangle_model(const Graph& g,
                                                const Labeling& labeling) {
  auto m = try_ordering_to_triangle_model(g, labeling);
  if (!m) throw OrderingNotPatternFree();
  return *m;
}

// Interval containment bigraph model whose left endpoints realize the given
// class-X-first ordering.  Left endpoints take ranks 1..n; right endpoints
// are placed at n+1..2n by a topological order of the digraph with, for each
// x in class 0 before y in class 1, r_y -> r_x when xy is an edge and
// r_x -> r_y otherwise.  The result is a model of g itself.
inline std::optional<IntervalModel> try_ordering_to_icb_model(
    const Graph& g, const std::vector<int>& cls, const Labeling& labeling) {
  int n = g.n();
  check_canonical_labeling(labeling, n);
  if (static_cast<int>(cls.size()) != n)
    throw InvalidInput("model: class vector size mismatch");
  for (int c : cls)
    if (c != 0 && c != 1) throw InvalidInput("model: classes must be 0 or 1");
  for (auto [u, v] : g.edges()) {
    if (cls[u] == cls[v]) throw InvalidInput("model: bipartition mismatch");
    int x = cls[u] == 0 ? u : v;
    int y = cls[u] == 0 ? v : u;
    if (labeling[x] > labeling[y])
      throw InvalidInput("ordering not class-X-first");
  }
  std::vector<int> order = order_from_labeling(labeling);
  std::vector<std::pair<int, int>> arcs;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      int u = order[a - 1], v = order[b - 1];
      if (cls[u] == cls[v]) continue;
      if (cls[u] != 0) continue;  // y before x never encodes containment
      if (g.adjacent(u, v))
        arcs.emplace_back(b - 1, a - 1);
      else
        arcs.emplace_back(a - 1, b - 1);
    }
  auto pos = detail::topo_positions(n, arcs);
  if (!pos) return std::nullopt;
  IntervalModel m;
  m.lo.resize(n);
  m.hi.resize(n);
  m.cls = cls;
  for (int v = 0; v < n; ++v) {
    int a = labeling[v];
    m.lo[v] = a;
    m.hi[v] = n + (*pos)[a - 1];
  }
  return m;
}

inline IntervalModel ordering_to_icb_model(const Graph& g,
                                           const std::vector<int>& cls,
                                           const Labeling& labeling) {
  auto m = try_ordering_to_icb_model(g, cls, labeling);
  if (!m) throw OrderingNotPatternFree();
  return *m;
}

}  // namespace rep12
