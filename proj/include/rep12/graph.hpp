#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "rep12/base.hpp"

namespace rep12 {

// Finite simple graph.  Vertices are 0-based indices; labels, when a graph
// carries them, live in a separate Labeling.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 0) throw InvalidInput("graph: negative vertex count");
  }

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int n() const { return n_; }

  bool adjacent(int u, int v) const { return adj_[idx(u, v)] != 0; }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InvalidInput("graph: self-loop");
    adj_[idx(u, v)] = adj_[idx(v, u)] = 1;
  }

  int degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int u = 0; u < n_; ++u) d += adj_[idx(v, u)];
    return d;
  }

  int edge_count() const {
    int m = 0;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v) m += adj_[idx(u, v)];
    return m;
  }

  // Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (adj_[idx(u, v)]) out.emplace_back(u, v);
    return out;
  }

  std::vector<int> neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
      if (adj_[idx(v, u)]) out.push_back(u);
    return out;
  }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }

 private:
  std::size_t idx(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return static_cast<std::size_t>(u) * n_ + v;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw InvalidInput("graph: vertex out of range");
  }

  int n_ = 0;
  std::vector<std::uint8_t> adj_;
};

// Label assignment: labels[v] is the label of vertex v.  Canonical labelings
// are bijections onto {1..n}; induced sub-labeled-graphs may carry any
// distinct positive labels until reduced.
using Labeling = std::vector<int>;

struct LabeledGraph {
  Graph graph;
  Labeling labels;
};

inline void check_labels_distinct(const Labeling& labels) {
  std::set<int> seen;
  for (int p : labels) {
    if (p < 1) throw InvalidInput("labeling: labels must be positive");
    if (!seen.insert(p).second) throw InvalidInput("labeling: duplicate label");
  }
}

inline bool is_canonical_labeling(const Labeling& labels) {
  int n = static_cast<int>(labels.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int p : labels) {
    if (p < 1 || p > n || seen[p]) return false;
    seen[p] = 1;
  }
  return true;
}

inline void check_canonical_labeling(const Labeling& labels, int n) {
  if (static_cast<int>(labels.size()) != n || !is_canonical_labeling(labels))
    throw InvalidInput("labeling: not a bijection onto 1..n");
}

inline Labeling identity_labeling(int n) {
  Labeling labels(n);
  for (int v = 0; v < n; ++v) labels[v] = v + 1;
  return labels;
}

// order[i] = vertex in position i, i.e. the vertex with label i + 1.
inline std::vector<int> order_from_labeling(const Labeling& labels) {
  check_canonical_labeling(labels, static_cast<int>(labels.size()));
  std::vector<int> order(labels.size());
  for (int v = 0; v < static_cast<int>(labels.size()); ++v)
    order[labels[v] - 1] = v;
  return order;
}

inline Labeling labeling_from_order(const std::vector<int>& order) {
  Labeling labels(order.size());
  int n = static_cast<int>(order.size());
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    if (v < 0 || v >= n) throw InvalidInput("ordering: vertex out of range");
    labels[v] = i + 1;
  }
  check_canonical_labeling(labels, n);
  return labels;
}

inline Graph complement(const Graph& g) {
  Graph c(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  return c;
}

struct InducedSubgraph {
  Graph graph;
  std::vector<int> vertices;  // vertices[i] = original vertex of new vertex i
};

inline InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s) {
  std::set<int> seen;
  for (int v : s) {
    if (v < 0 || v >= g.n()) throw InvalidInput("induced subgraph: vertex out of range");
    if (!seen.insert(v).second) throw InvalidInput("induced subgraph: duplicate vertex");
  }
  int k = static_cast<int>(s.size());
  Graph h(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(s[i], s[j])) h.add_edge(i, j);
  return {h, s};
}

// Rank-relabel: the vertex with the i-th smallest label gets label i.
inline LabeledGraph reduced_labeled(const LabeledGraph& h) {
  check_labels_distinct(h.labels);
  if (static_cast<int>(h.labels.size()) != h.graph.n())
    throw InvalidInput("labeling: size mismatch");
  std::vector<int> sorted(h.labels);
  std::sort(sorted.begin(), sorted.end());
  Labeling reduced(h.labels.size());
  for (std::size_t v = 0; v < h.labels.size(); ++v) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), h.labels[v]);
    reduced[v] = static_cast<int>(it - sorted.begin()) + 1;
  }
  return {h.graph, reduced};
}

// Two-coloring with class 0 ("X") and class 1 ("Y"), or nullopt when an odd
// cycle exists.  Deterministic: the lowest-index vertex of each connected
// component goes to class 0.
inline std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> cls(g.n(), -1);
  for (int root = 0; root < g.n(); ++root) {
    if (cls[root] != -1) continue;
    cls[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < g.n(); ++v) {
        if (!g.adjacent(u, v)) continue;
        if (cls[v] == -1) {
          cls[v] = 1 - cls[u];
          q.push(v);
        } else if (cls[v] == cls[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return cls;
}

inline bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  std::vector<char> seen(g.n(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v = 0; v < g.n(); ++v) {
      if (g.adjacent(u, v) && !seen[v]) {
        seen[v] = 1;
        ++count;
        q.push(v);
      }
    }
  }
  return count == g.n();
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw InvalidInput("cycle graph: need at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

}  // namespace rep12
