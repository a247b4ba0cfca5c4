#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rep12/base.hpp"
#include "rep12/graph.hpp"

namespace rep12 {

// Ordered pattern with induced-subgraph semantics: an occurrence in an
// ordered graph is a position-increasing vertex tuple whose induced edges
// are exactly `edges`.  A colored pattern additionally requires the tuple's
// two-coloring to match `colors`, either as given or globally swapped.
struct OrderedPattern {
  int size = 0;
  std::vector<std::pair<int, int>> edges;  // 0-based position pairs, i < j
  std::vector<int> colors;                 // empty, or `size` entries in {0, 1}

  bool colored() const { return !colors.empty(); }
};

using PatternFamily = std::vector<OrderedPattern>;

inline void check_pattern(const OrderedPattern& p) {
  if (p.size < 2) throw InvalidInput("pattern: need at least two positions");
  for (auto [i, j] : p.edges)
    if (i < 0 || j <= i || j >= p.size)
      throw InvalidInput("pattern: edge positions out of range");
  for (std::size_t e = 1; e < p.edges.size(); ++e)
    if (!(p.edges[e - 1] < p.edges[e]))
      throw InvalidInput("pattern: edges must be sorted and distinct");
  if (!p.colors.empty()) {
    if (static_cast<int>(p.colors.size()) != p.size)
      throw InvalidInput("pattern: color count mismatch");
    for (int c : p.colors)
      if (c != 0 && c != 1) throw InvalidInput("pattern: colors must be 0 or 1");
  }
}

inline OrderedPattern i3_pattern() { return {3, {{0, 1}, {1, 2}}, {}}; }
inline OrderedPattern j4_pattern() { return {4, {{0, 2}, {1, 3}}, {}}; }
inline OrderedPattern q4_pattern() { return {4, {{0, 3}, {1, 2}}, {}}; }

inline PatternFamily i3j4q4_patterns() {
  return {i3_pattern(), j4_pattern(), q4_pattern()};
}

inline PatternFamily j4q4_patterns() { return {j4_pattern(), q4_pattern()}; }

// Colored patterns forbidden in the left-endpoint order of an interval
// containment bigraph, taken up to a global swap of the two classes.
inline PatternFamily icb_patterns() {
  return {{4, {{0, 2}, {1, 3}}, {0, 0, 1, 1}},
          {4, {{0, 3}, {1, 2}}, {0, 1, 0, 1}},
          {4, {{0, 3}, {1, 2}}, {0, 0, 1, 1}}};
}

// The pattern drawn as a labeled graph on positions 1..k.
inline LabeledGraph pattern_as_labeled_graph(const OrderedPattern& p) {
  check_pattern(p);
  Graph g(p.size);
  for (auto [i, j] : p.edges) g.add_edge(i, j);
  return {g, identity_labeling(p.size)};
}

namespace detail {

// verts are the occurrence candidates in increasing position order.
inline bool tuple_matches(const Graph& g, const std::vector<int>& verts,
                          const OrderedPattern& p,
                          const std::vector<int>* classes) {
  std::size_t e = 0;
  for (int i = 0; i < p.size; ++i) {
    for (int j = i + 1; j < p.size; ++j) {
      bool want = e < p.edges.size() && p.edges[e] == std::make_pair(i, j);
      if (want) ++e;
      if (g.adjacent(verts[i], verts[j]) != want) return false;
    }
  }
  if (p.colored()) {
    bool same = true, swapped = true;
    for (int i = 0; i < p.size; ++i) {
      int c = (*classes)[verts[i]];
      if (c != p.colors[i]) same = false;
      if (c != 1 - p.colors[i]) swapped = false;
    }
    if (!same && !swapped) return false;
  }
  return true;
}

inline void check_pattern_inputs(const Graph& g, const OrderedPattern& p,
                                 const std::vector<int>* classes) {
  check_pattern(p);
  if (p.colored() && classes == nullptr)
    throw InvalidInput("pattern: colored pattern needs vertex classes");
  if (classes != nullptr && static_cast<int>(classes->size()) != g.n())
    throw InvalidInput("pattern: class vector size mismatch");
}

// First k-subset of 0..limit-1, in lexicographic order, accepted by fn.
template <typename Fn>
bool for_each_combination(int limit, int k, Fn&& fn) {
  if (k > limit) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (fn(idx)) return true;
    int t = k - 1;
    while (t >= 0 && idx[t] == limit - k + t) --t;
    if (t < 0) return false;
    ++idx[t];
    for (int s = t + 1; s < k; ++s) idx[s] = idx[s - 1] + 1;
  }
}

}  // namespace detail

// First occurrence of p in the ordering given by `labeling`, as vertices in
// increasing position order; lexicographically first over position tuples.
inline std::optional<std::vector<int>> contains_pattern(
    const Graph& g, const Labeling& labeling, const OrderedPattern& p,
    const std::vector<int>* classes = nullptr) {
  detail::check_pattern_inputs(g, p, classes);
  std::vector<int> order = order_from_labeling(labeling);
  if (static_cast<int>(order.size()) != g.n())
    throw InvalidInput("pattern: labeling size mismatch");
  std::vector<int> verts(p.size);
  std::optional<std::vector<int>> hit;
  detail::for_each_combination(g.n(), p.size, [&](const std::vector<int>& idx) {
    for (int t = 0; t < p.size; ++t) verts[t] = order[idx[t]];
    if (detail::tuple_matches(g, verts, p, classes)) {
      hit = verts;
      return true;
    }
    return false;
  });
  return hit;
}

// First occurrence of any family member, scanning the family in order.
inline std::optional<std::vector<int>> find_forbidden_occurrence(
    const Graph& g, const Labeling& labeling, const PatternFamily& family,
    const std::vector<int>* classes = nullptr) {
  for (const auto& p : family)
    if (auto occ = contains_pattern(g, labeling, p, classes)) return occ;
  return std::nullopt;
}

inline bool labeling_is_pattern_free(const LabeledGraph& h,
                                     const PatternFamily& family,
                                     const std::vector<int>* classes = nullptr) {
  return !find_forbidden_occurrence(h.graph, h.labels, family, classes)
              .has_value();
}

// Exact search for an ordering of g avoiding every pattern in the family.
// Backtracks over prefixes; a prefix is abandoned as soon as its last vertex
// completes an occurrence, which is sound because occurrences persist under
// extension.  With class_a_first, every edge must have its class-0 endpoint
// placed before its class-1 endpoint.  Deterministic: candidates are tried
// by ascending degree, then ascending index.
inline std::optional<Labeling> find_pattern_free_ordering(
    const Graph& g, const PatternFamily& family,
    const std::vector<int>* classes = nullptr, bool class_a_first = false) {
  for (const auto& p : family) detail::check_pattern_inputs(g, p, classes);
  if (class_a_first && classes == nullptr)
    throw InvalidInput("ordering search: class_a_first needs vertex classes");

  int n = g.n();
  std::vector<int> candidates(n);
  for (int v = 0; v < n; ++v) candidates[v] = v;
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](int a, int b) { return g.degree(a) < g.degree(b); });

  std::vector<int> prefix;
  prefix.reserve(n);
  std::vector<char> used(n, 0);
  std::vector<int> verts;

  auto completes_occurrence = [&](int v) {
    int p = static_cast<int>(prefix.size());
    for (const auto& pat : family) {
      int k = pat.size;
      if (k - 1 > p) continue;
      verts.resize(k);
      verts[k - 1] = v;
      bool found = detail::for_each_combination(
          p, k - 1, [&](const std::vector<int>& idx) {
            for (int t = 0; t + 1 < k; ++t) verts[t] = prefix[idx[t]];
            return detail::tuple_matches(g, verts, pat, classes);
          });
      if (found) return true;
    }
    return false;
  };

  auto violates_class_order = [&](int v) {
    if (!class_a_first || (*classes)[v] != 0) return false;
    for (int u : prefix)
      if (g.adjacent(u, v)) return true;
    return false;
  };

  auto extend = [&](auto&& self) -> bool {
    if (static_cast<int>(prefix.size()) == n) return true;
    for (int v : candidates) {
      if (used[v] || violates_class_order(v) || completes_occurrence(v))
        continue;
      used[v] = 1;
      prefix.push_back(v);
      if (self(self)) return true;
      prefix.pop_back();
      used[v] = 0;
    }
    return false;
  };

  if (!extend(extend)) return std::nullopt;
  Labeling labels = labeling_from_order(prefix);
  if (find_forbidden_occurrence(g, labels, family, classes))
    throw std::logic_error("ordering search: result failed self-check");
  return labels;
}

}  // namespace rep12
