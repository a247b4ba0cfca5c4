#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "rep12/base.hpp"
#include "rep12/graph.hpp"
#include "rep12/grid.hpp"
#include "rep12/models.hpp"
#include "rep12/patterns.hpp"
#include "rep12/word.hpp"

namespace rep12 {

// Self-verifying positive certificate: the word 12-represents the input
// graph under the labeling, and the model realizes it geometrically (for the
// triangle route, the model is of the complement of the input graph).
struct Certificate {
  Labeling labels;
  Word word;
  std::variant<IntervalModel, TriangleModel> model;
};

struct Witness {
  std::string kind;  // induced-cycle | forbidden-grid-subgraph | t3-subtree | search-exhausted
  std::vector<int> vertices;
  std::string detail;
};

struct Decision {
  bool representable = false;
  std::optional<Certificate> certificate;
  std::optional<Witness> witness;
};

// Induced embedding of h into g: returns map[i] = image of h's vertex i, or
// nullopt.  Backtracking over h's vertices by descending degree, candidates
// tried in ascending order.
inline std::optional<std::vector<int>> contains_induced(const Graph& g,
                                                        const Graph& h) {
  if (h.n() > g.n()) return std::nullopt;
  std::vector<int> horder(h.n());
  for (int v = 0; v < h.n(); ++v) horder[v] = v;
  std::stable_sort(horder.begin(), horder.end(),
                   [&](int a, int b) { return h.degree(a) > h.degree(b); });
  std::vector<int> map(h.n(), -1);
  std::vector<char> taken(g.n(), 0);
  auto place = [&](auto&& self, int depth) -> bool {
    if (depth == h.n()) return true;
    int hv = horder[depth];
    for (int gv = 0; gv < g.n(); ++gv) {
      if (taken[gv] || g.degree(gv) < h.degree(hv)) continue;
      bool ok = true;
      for (int d = 0; d < depth; ++d) {
        int hu = horder[d];
        if (h.adjacent(hu, hv) != g.adjacent(map[hu], gv)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map[hv] = gv;
      taken[gv] = 1;
      if (self(self, depth + 1)) return true;
      taken[gv] = 0;
      map[hv] = -1;
    }
    return false;
  };
  if (!place(place, 0)) return std::nullopt;
  return map;
}

// First chordless cycle of length >= min_len, in cycle order.  Enumerates
// induced paths grown from their minimal vertex; a path closes only through
// a neighbor of its start, and any vertex adjacent to an interior path
// vertex is discarded, so every closed walk reported is an induced cycle.
inline std::optional<std::vector<int>> find_long_induced_cycle(const Graph& g,
                                                               int min_len) {
  if (min_len < 3) throw InvalidInput("induced cycle: minimum length is 3");
  std::vector<int> path;
  std::vector<char> on_path(g.n(), 0);
  std::optional<std::vector<int>> found;
  for (int s = 0; s < g.n() && !found; ++s) {
    path.assign(1, s);
    on_path.assign(g.n(), 0);
    on_path[s] = 1;
    auto grow = [&](auto&& self) -> bool {
      int last = path.back();
      for (int u = s + 1; u < g.n(); ++u) {
        if (on_path[u] || !g.adjacent(last, u)) continue;
        bool chord = false;
        for (std::size_t i = 1; i + 1 < path.size(); ++i)
          if (g.adjacent(u, path[i])) {
            chord = true;
            break;
          }
        if (chord) continue;
        bool closes = path.size() >= 2 && g.adjacent(u, s);
        if (closes) {
          if (static_cast<int>(path.size()) + 1 >= min_len) {
            path.push_back(u);
            found = path;
            return true;
          }
          continue;  // a longer cycle through u would keep the chord us
        }
        path.push_back(u);
        on_path[u] = 1;
        if (self(self)) return true;
        on_path[u] = 0;
        path.pop_back();
      }
      return false;
    };
    grow(grow);
  }
  return found;
}

// Exact decision through the simple-triangle route: search for an ordering
// of g avoiding I3, J4 and Q4, then realize it as a triangle model of the
// complement and read the certificate word off the model.
inline Decision is_12_representable(const Graph& g) {
  auto sigma = find_pattern_free_ordering(g, i3j4q4_patterns());
  if (!sigma)
    return {false, std::nullopt,
            Witness{"search-exhausted", {}, "no pattern-free labeling exists"}};
  auto model = try_ordering_to_triangle_model(g, *sigma);
  if (!model)
    throw std::logic_error("recognition: pattern-free ordering has no model");
  Representant rep = triangle_to_representant(*model);
  if (rep.labels != *sigma || !u_represents(rep.word, {g, rep.labels}))
    throw std::logic_error("recognition: certificate failed verification");
  return {true, Certificate{rep.labels, rep.word, *model}, std::nullopt};
}

// Exact decision through the interval containment route, for bipartite
// inputs only: search for a class-X-first ordering avoiding the colored
// patterns, realize it as an interval model of g itself.
inline Decision is_12_representable_bipartite(const Graph& g) {
  auto cls = bipartition(g);
  if (!cls) throw InvalidInput("graph is not bipartite");
  auto sigma = find_pattern_free_ordering(g, icb_patterns(), &*cls, true);
  if (!sigma)
    return {false, std::nullopt,
            Witness{"search-exhausted", {}, "no pattern-free labeling exists"}};
  auto model = try_ordering_to_icb_model(g, *cls, *sigma);
  if (!model)
    throw std::logic_error("recognition: pattern-free ordering has no model");
  if (validate_icb(g, *model))
    throw std::logic_error("recognition: constructed model failed validation");
  Representant rep = icb_to_representant(*model);
  if (rep.labels != *sigma || !u_represents(rep.word, {g, rep.labels}))
    throw std::logic_error("recognition: certificate failed verification");
  return {true, Certificate{rep.labels, rep.word, *model}, std::nullopt};
}

// Grid graphs: not representable exactly when some induced cycle has length
// at least 8 or one of the six forbidden subgraphs embeds; otherwise the
// bipartite pipeline produces the certificate.
inline Decision grid_12_representable(const GridGraph& gg) {
  if (auto cycle = find_long_induced_cycle(gg.graph, 8))
    return {false, std::nullopt,
            Witness{"induced-cycle", *cycle,
                    "length " + std::to_string(cycle->size())}};
  auto fixtures = forbidden_grid_subgraphs();
  for (std::size_t k = 0; k < fixtures.size(); ++k) {
    if (auto emb = contains_induced(gg.graph, fixtures[k].graph)) {
      std::string name = k == 0 ? "t3" : k == 5 ? "x" : std::to_string(k + 1);
      return {false, std::nullopt,
              Witness{"forbidden-grid-subgraph", *emb, name}};
    }
  }
  Decision d = is_12_representable_bipartite(gg.graph);
  if (!d.representable)
    throw std::logic_error("recognition: grid characterization disagreed with search");
  return d;
}

namespace detail {

// Depth of the deepest path from c into the branch through u (u counts 1),
// plus the path itself.
inline std::vector<int> deepest_branch_path(const Graph& g, int c, int u) {
  std::vector<int> parent(g.n(), -1), depth(g.n(), 0);
  parent[u] = c;
  depth[u] = 1;
  std::queue<int> q;
  q.push(u);
  int best = u;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y = 0; y < g.n(); ++y) {
      if (y == c || !g.adjacent(x, y) || parent[y] != -1) continue;
      parent[y] = x;
      depth[y] = depth[x] + 1;
      if (depth[y] > depth[best]) best = y;
      q.push(y);
    }
  }
  std::vector<int> path;
  for (int x = best; x != c; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace detail

// Trees: representable exactly when no vertex roots a T3 subtree, i.e. has
// three branches of depth 3; such trees are the double caterpillars.
inline Decision tree_12_representable(const Graph& g) {
  if (g.n() == 0 || !is_connected(g) || g.edge_count() != g.n() - 1)
    throw InvalidInput("graph is not a tree");
  for (int c = 0; c < g.n(); ++c) {
    std::vector<std::vector<int>> deep;
    for (int u : g.neighbors(c)) {
      auto path = detail::deepest_branch_path(g, c, u);
      if (path.size() >= 3) deep.push_back(path);
      if (deep.size() == 3) break;
    }
    if (deep.size() == 3) {
      std::vector<int> verts{c};
      for (const auto& path : deep)
        verts.insert(verts.end(), path.begin(), path.begin() + 3);
      return {false, std::nullopt,
              Witness{"t3-subtree", verts,
                      "center listed first, then three branches of depth 3"}};
    }
  }
  Decision d = is_12_representable(g);
  if (!d.representable)
    throw std::logic_error("recognition: tree characterization disagreed with search");
  return d;
}

}  // namespace rep12
