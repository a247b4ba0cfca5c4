#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "rep12/base.hpp"
#include "rep12/graph.hpp"

namespace rep12 {

// A word is a finite sequence of positive integer letters.  Pattern words
// are words over {1, 2} in reduced form; the default pattern is 12.
using Word = std::vector<int>;
using PatternWord = std::vector<int>;

inline void check_word(const Word& w) {
  for (int a : w)
    if (a < 1) throw InvalidInput("word: letters must be positive");
}

// Sorted distinct letters of w.
inline std::vector<int> alphabet(const Word& w) {
  std::vector<int> a(w);
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

// Replace the i-th smallest letter of w by i, preserving positions.
inline Word reduce(const Word& w) {
  check_word(w);
  if (w.empty()) throw InvalidInput("reduce: empty word");
  std::vector<int> sorted = alphabet(w);
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), w[i]);
    out[i] = static_cast<int>(it - sorted.begin()) + 1;
  }
  return out;
}

// Subsequence of w formed by the letters in `letters`, in place.
inline Word restrict_to(const Word& w, const std::vector<int>& letters) {
  check_word(w);
  std::vector<int> want = letters;
  std::sort(want.begin(), want.end());
  want.erase(std::unique(want.begin(), want.end()), want.end());
  std::vector<int> have = alphabet(w);
  if (!std::includes(have.begin(), have.end(), want.begin(), want.end()))
    throw InvalidInput("restrict: letter not in word");
  Word out;
  for (int a : w)
    if (std::binary_search(want.begin(), want.end(), a)) out.push_back(a);
  return out;
}

inline Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

inline void check_pattern_word(const PatternWord& u) {
  if (u.empty()) throw InvalidInput("pattern word: empty");
  bool has_one = false;
  for (int a : u) {
    if (a != 1 && a != 2) throw InvalidInput("pattern word: letters must be 1 or 2");
    if (a == 1) has_one = true;
  }
  if (!has_one) throw InvalidInput("pattern word: not reduced");
}

// Index of the first factor of w whose reduction equals u, if any.
inline std::optional<std::size_t> find_match(const Word& w, const PatternWord& u) {
  check_word(w);
  check_pattern_word(u);
  std::size_t k = u.size();
  if (w.size() < k) return std::nullopt;
  for (std::size_t i = 0; i + k <= w.size(); ++i) {
    Word window(w.begin() + i, w.begin() + i + k);
    if (reduce(window) == u) return i;
  }
  return std::nullopt;
}

inline bool has_match(const Word& w, const PatternWord& u) {
  return find_match(w, u).has_value();
}

// First label pair {x, y} on which w disagrees with G, if any: vertices with
// labels x and y are adjacent iff the restriction of w to {x, y} has no
// u-match.  Requires the alphabet of w to be exactly {1..n}.
inline std::optional<std::pair<int, int>> find_represent_violation(
    const Word& w, const LabeledGraph& g, const PatternWord& u = {1, 2}) {
  int n = g.graph.n();
  check_canonical_labeling(g.labels, n);
  check_pattern_word(u);
  if (alphabet(w) != identity_labeling(n))
    throw InvalidInput("alphabet mismatch");
  std::vector<int> vertex_of(n + 1);
  for (int v = 0; v < n; ++v) vertex_of[g.labels[v]] = v;
  for (int x = 1; x <= n; ++x) {
    for (int y = x + 1; y <= n; ++y) {
      Word sub;
      for (int a : w)
        if (a == x || a == y) sub.push_back(a);
      bool edge = g.graph.adjacent(vertex_of[x], vertex_of[y]);
      if (edge == has_match(sub, u)) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

inline bool u_represents(const Word& w, const LabeledGraph& g,
                         const PatternWord& u = {1, 2}) {
  return !find_represent_violation(w, g, u).has_value();
}

}  // namespace rep12
