#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rep12/base.hpp"
#include "rep12/graph.hpp"
#include "rep12/grid.hpp"
#include "rep12/models.hpp"
#include "rep12/patterns.hpp"
#include "rep12/recognition.hpp"
#include "rep12/word.hpp"

namespace rep12 {

// Exhaustive baselines.  Deliberately naive: these are the reference
// implementations the fast paths are validated against, so they share as
// little machinery with them as possible.

// First pattern-free ordering in lexicographic order over vertex sequences.
inline std::optional<Labeling> brute_force_ordering(
    const Graph& g, const PatternFamily& family,
    const std::vector<int>* classes = nullptr, bool class_a_first = false) {
  if (g.n() > 8)
    throw InvalidInput("brute_force_ordering: refusing graphs above 8 vertices");
  if (class_a_first && classes == nullptr)
    throw InvalidInput("brute_force_ordering: class_a_first needs vertex classes");
  std::vector<int> order(g.n());
  for (int v = 0; v < g.n(); ++v) order[v] = v;
  do {
    Labeling labels = labeling_from_order(order);
    if (class_a_first) {
      bool ok = true;
      for (auto [u, v] : g.edges()) {
        int x = (*classes)[u] == 0 ? u : v;
        int y = (*classes)[u] == 0 ? v : u;
        if (labels[x] > labels[y]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
    }
    if (!find_forbidden_occurrence(g, labels, family, classes)) return labels;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

namespace detail {

inline bool word_12_represents(const Word& w, const Graph& g,
                               const std::vector<int>& vertex_of) {
  int n = g.n();
  for (int x = 1; x <= n; ++x)
    for (int y = x + 1; y <= n; ++y) {
      bool match = false;
      int prev = 0;
      for (int a : w) {
        if (a != x && a != y) continue;
        if (prev != 0 && prev < a) {
          match = true;
          break;
        }
        prev = a;
      }
      if (g.adjacent(vertex_of[x], vertex_of[y]) == match) return false;
    }
  return true;
}

}  // namespace detail

// Smallest 12-representant of the labeled graph in which every letter occurs
// once or twice, searching lengths in increasing order and permutations of
// each letter multiset lexicographically.  Any 12-representable labeled
// graph on n vertices has such a word of length at most 2n, so exhausting
// this space decides representability under the given labeling.
inline std::optional<Word> brute_force_word(const LabeledGraph& g,
                                            int max_len = -1) {
  int n = g.graph.n();
  if (n > 5)
    throw InvalidInput("brute_force_word: refusing graphs above 5 vertices");
  check_canonical_labeling(g.labels, n);
  if (max_len < 0) max_len = 2 * n;
  std::vector<int> vertex_of(n + 1);
  for (int v = 0; v < n; ++v) vertex_of[g.labels[v]] = v;
  for (int extra = 0; extra <= n && n + extra <= max_len; ++extra) {
    std::vector<int> doubled;
    auto try_doubling = [&](auto&& self, int from) -> std::optional<Word> {
      if (static_cast<int>(doubled.size()) == extra) {
        Word w;
        for (int a = 1; a <= n; ++a) {
          w.push_back(a);
          if (std::binary_search(doubled.begin(), doubled.end(), a))
            w.push_back(a);
        }
        do {
          if (detail::word_12_represents(w, g.graph, vertex_of)) return w;
        } while (std::next_permutation(w.begin(), w.end()));
        return std::nullopt;
      }
      for (int a = from; a <= n; ++a) {
        doubled.push_back(a);
        if (auto w = self(self, a + 1)) return w;
        doubled.pop_back();
      }
      return std::nullopt;
    };
    if (auto w = try_doubling(try_doubling, 1)) return w;
  }
  return std::nullopt;
}

// Independent view of forbidden-labeled-subgraph checking: reduce every
// induced sub-labeled-graph of matching size and compare edge sets directly.
inline bool labeling_free_by_reduction(const LabeledGraph& h,
                                       const std::vector<LabeledGraph>& family) {
  int n = h.graph.n();
  for (const auto& f : family) {
    int k = f.graph.n();
    if (k > n) continue;
    std::vector<int> pick(k);
    auto scan = [&](auto&& self, int depth, int from) -> bool {
      if (depth == k) {
        auto sub = induced_subgraph(h.graph, pick);
        Labeling sub_labels(k);
        for (int i = 0; i < k; ++i) sub_labels[i] = h.labels[pick[i]];
        LabeledGraph reduced = reduced_labeled({sub.graph, sub_labels});
        std::vector<int> vertex_of(k + 1);
        for (int i = 0; i < k; ++i) vertex_of[reduced.labels[i]] = i;
        for (int a = 1; a <= k; ++a)
          for (int b = a + 1; b <= k; ++b)
            if (reduced.graph.adjacent(vertex_of[a], vertex_of[b]) !=
                f.graph.adjacent(a - 1, b - 1))
              return false;
        return true;
      }
      for (int v = from; v < n; ++v) {
        pick[depth] = v;
        if (self(self, depth + 1, v + 1)) return true;
      }
      return false;
    };
    if (scan(scan, 0, 0)) return false;
  }
  return true;
}

// All simple graphs on n labeled vertices, by edge mask.
template <typename Fn>
void enumerate_graphs(int n, Fn&& fn) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Graph g(n);
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (mask >> b & 1) g.add_edge(pairs[b].first, pairs[b].second);
    fn(g);
  }
}

namespace detail {

inline std::string ahu_canon(const Graph& g, int v, int parent) {
  std::vector<std::string> child;
  for (int u : g.neighbors(v))
    if (u != parent) child.push_back(ahu_canon(g, u, v));
  std::sort(child.begin(), child.end());
  std::string s = "(";
  for (const auto& c : child) s += c;
  s += ")";
  return s;
}

inline std::vector<int> tree_centers(const Graph& g) {
  int n = g.n();
  if (n == 1) return {0};
  std::vector<int> degree(n);
  for (int v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::vector<char> removed(n, 0);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v)
    if (degree[v] <= 1) layer.push_back(v);
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      removed[v] = 1;
      --remaining;
      for (int u : g.neighbors(v))
        if (!removed[u] && --degree[u] == 1) next.push_back(u);
    }
    layer = next;
  }
  std::vector<int> centers;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) centers.push_back(v);
  return centers;
}

inline std::string tree_canonical_form(const Graph& g) {
  auto centers = tree_centers(g);
  if (centers.size() == 1) return ahu_canon(g, centers[0], -1);
  std::string a = ahu_canon(g, centers[0], centers[1]);
  std::string b = ahu_canon(g, centers[1], centers[0]);
  return a < b ? a + "|" + b : b + "|" + a;
}

}  // namespace detail

// All free trees on 1..max_n vertices, one representative per isomorphism
// class, generated from Prufer sequences and deduplicated by canonical form.
inline std::vector<Graph> enumerate_free_trees(int max_n) {
  std::vector<Graph> out;
  std::set<std::string> seen;
  for (int n = 1; n <= max_n; ++n) {
    if (n == 1) {
      out.push_back(Graph(1));
      continue;
    }
    if (n == 2) {
      out.push_back(Graph::from_edges(2, {{0, 1}}));
      continue;
    }
    std::vector<int> seq(n - 2, 0);
    while (true) {
      std::vector<int> count(n, 0);
      for (int s : seq) ++count[s];
      Graph t(n);
      std::set<int> leaves;
      for (int v = 0; v < n; ++v)
        if (count[v] == 0) leaves.insert(v);
      std::vector<int> cnt = count;
      for (int s : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        t.add_edge(leaf, s);
        if (--cnt[s] == 0) leaves.insert(s);
      }
      int a = *leaves.begin();
      int b = *std::next(leaves.begin());
      t.add_edge(a, b);
      if (seen.insert(std::to_string(n) + ":" + detail::tree_canonical_form(t))
              .second)
        out.push_back(t);
      int i = n - 3;
      while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
      if (i < 0) break;
      ++seq[i];
    }
  }
  return out;
}

struct SuiteResult {
  std::string name;
  long long cases = 0;
  long long failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    ++failures;
    if (first_failure.empty()) first_failure = what;
  }
};

namespace detail {

inline std::string describe_graph(const Graph& g) {
  std::string s = "n=" + std::to_string(g.n()) + " edges";
  for (auto [u, v] : g.edges())
    s += " " + std::to_string(u + 1) + "-" + std::to_string(v + 1);
  return s;
}

}  // namespace detail

// Ordering search vs the permutation oracle, plus certificate construction
// with the found labeling, over every graph on up to max_n vertices.
inline SuiteResult validate_ordering_search(int max_n) {
  SuiteResult r{"ordering-search"};
  PatternFamily family = i3j4q4_patterns();
  for (int n = 0; n <= max_n; ++n) {
    enumerate_graphs(n, [&](const Graph& g) {
      ++r.cases;
      auto fast = find_pattern_free_ordering(g, family);
      auto slow = brute_force_ordering(g, family);
      if (fast.has_value() != slow.has_value()) {
        r.fail("existence disagreement on " + detail::describe_graph(g));
        return;
      }
      if (!fast) return;
      auto model = try_ordering_to_triangle_model(g, *fast);
      if (!model) {
        r.fail("no model for found ordering on " + detail::describe_graph(g));
        return;
      }
      Representant rep = triangle_to_representant(*model);
      if (rep.labels != *fast || !u_represents(rep.word, {g, *fast}))
        r.fail("certificate mismatch on " + detail::describe_graph(g));
    });
  }
  return r;
}

// Word-level oracle vs the forbidden-labeling criterion over every graph and
// every labeling on up to max_n vertices.
inline SuiteResult validate_word_search(int max_n) {
  SuiteResult r{"word-search"};
  PatternFamily family = i3j4q4_patterns();
  for (int n = 0; n <= max_n; ++n) {
    enumerate_graphs(n, [&](const Graph& g) {
      Labeling labels = identity_labeling(n);
      do {
        ++r.cases;
        LabeledGraph lg{g, labels};
        auto word = brute_force_word(lg);
        bool free = labeling_is_pattern_free(lg, family);
        if (word.has_value() != free)
          r.fail("word existence vs labeling freeness on " +
                 detail::describe_graph(g));
        else if (word && !u_represents(*word, lg))
          r.fail("oracle word fails verification on " +
                 detail::describe_graph(g));
      } while (std::next_permutation(labels.begin(), labels.end()));
    });
  }
  return r;
}

// Constraint digraph acyclicity vs pattern-freeness over every graph and
// every ordering on up to max_n vertices.
inline SuiteResult validate_acyclicity(int max_n) {
  SuiteResult r{"acyclicity"};
  PatternFamily family = i3j4q4_patterns();
  for (int n = 0; n <= max_n; ++n) {
    enumerate_graphs(n, [&](const Graph& g) {
      std::vector<int> order(n);
      for (int v = 0; v < n; ++v) order[v] = v;
      do {
        ++r.cases;
        Labeling labels = labeling_from_order(order);
        bool acyclic = try_ordering_to_triangle_model(g, labels).has_value();
        bool free = !find_forbidden_occurrence(g, labels, family).has_value();
        if (acyclic != free)
          r.fail("acyclicity mismatch on " + detail::describe_graph(g));
      } while (std::next_permutation(order.begin(), order.end()));
    });
  }
  return r;
}

// Bipartite pipeline vs the general pipeline over every bipartite graph on
// up to max_n vertices, with certificate models revalidated.
inline SuiteResult validate_bipartite_pipeline(int max_n) {
  SuiteResult r{"bipartite-pipeline"};
  for (int n = 0; n <= max_n; ++n) {
    enumerate_graphs(n, [&](const Graph& g) {
      if (!bipartition(g)) return;
      ++r.cases;
      Decision bi = is_12_representable_bipartite(g);
      Decision gen = is_12_representable(g);
      if (bi.representable != gen.representable) {
        r.fail("pipeline disagreement on " + detail::describe_graph(g));
        return;
      }
      if (bi.representable) {
        const auto& m = std::get<IntervalModel>(bi.certificate->model);
        if (validate_icb(g, m))
          r.fail("certificate model invalid on " + detail::describe_graph(g));
      }
    });
  }
  return r;
}

// Tree characterization vs the general pipeline over one representative per
// isomorphism class of trees on up to max_n vertices.
inline SuiteResult validate_trees(int max_n) {
  SuiteResult r{"trees"};
  for (const Graph& t : enumerate_free_trees(max_n)) {
    ++r.cases;
    Decision fast = tree_12_representable(t);
    Decision gen = is_12_representable(t);
    if (fast.representable != gen.representable)
      r.fail("tree disagreement on " + detail::describe_graph(t));
  }
  return r;
}

// Grid characterization vs the general pipeline over every induced subgraph
// of the rows x cols grid.
inline SuiteResult validate_grid(int rows, int cols) {
  SuiteResult r{"grid"};
  GridGraph base = full_grid(rows, cols);
  int cells = static_cast<int>(base.cells.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
    std::vector<std::pair<int, int>> points;
    for (int b = 0; b < cells; ++b)
      if (mask >> b & 1) points.push_back(base.cells[b]);
    GridGraph gg = grid_from_points(points);
    ++r.cases;
    Decision fast = grid_12_representable(gg);
    Decision gen = is_12_representable(gg.graph);
    if (fast.representable != gen.representable)
      r.fail("grid disagreement on cell mask " + std::to_string(mask));
  }
  return r;
}

// Named agreement suites runnable from the command line.  max_n < 0 selects
// each suite's default bound.
inline std::vector<SuiteResult> cross_validate(const std::string& suite,
                                               int max_n = -1) {
  std::vector<SuiteResult> out;
  if (suite == "small") {
    out.push_back(validate_ordering_search(max_n < 0 ? 5 : max_n));
    out.push_back(validate_word_search(max_n < 0 ? 4 : std::min(max_n, 4)));
    out.push_back(validate_acyclicity(max_n < 0 ? 5 : std::min(max_n, 5)));
  } else if (suite == "bipartite") {
    out.push_back(validate_bipartite_pipeline(max_n < 0 ? 6 : max_n));
  } else if (suite == "trees") {
    out.push_back(validate_trees(max_n < 0 ? 9 : max_n));
  } else if (suite == "grid") {
    out.push_back(validate_grid(3, max_n < 0 ? 4 : std::min(std::max(max_n, 1), 4)));
  } else {
    throw InvalidInput("unknown suite: " + suite);
  }
  return out;
}

}  // namespace rep12
