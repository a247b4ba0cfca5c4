#pragma once

#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "rep12/base.hpp"
#include "rep12/graph.hpp"
#include "rep12/grid.hpp"
#include "rep12/models.hpp"
#include "rep12/word.hpp"

namespace rep12::io {

namespace detail {

// Line-oriented reader that strips '#' comments, skips blank lines and keeps
// track of line numbers for diagnostics.
class LineReader {
 public:
  LineReader(std::istream& in, std::string name)
      : in_(in), name_(std::move(name)) {}

  std::optional<std::string> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++lineno_;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      return line;
    }
    return std::nullopt;
  }

  [[noreturn]] void error(const std::string& message) const {
    throw InvalidInput(name_ + ":" + std::to_string(lineno_) + ": " + message);
  }

  [[noreturn]] void error_eof(const std::string& message) const {
    throw InvalidInput(name_ + ": " + message);
  }

 private:
  std::istream& in_;
  std::string name_;
  int lineno_ = 0;
};

inline std::vector<long long> parse_ints(const std::string& line,
                                         const LineReader& reader) {
  std::istringstream ss(line);
  std::vector<long long> out;
  std::string token;
  while (ss >> token) {
    try {
      std::size_t used = 0;
      long long value = std::stoll(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(value);
    } catch (const std::exception&) {
      reader.error("expected an integer, got '" + token + "'");
    }
  }
  return out;
}

}  // namespace detail

// Graph file: a header line "n m", an optional "labels: p1 .. pn" line, then
// m edge lines "x y" where endpoints are vertex labels.
inline LabeledGraph read_graph(std::istream& in, const std::string& name) {
  detail::LineReader reader(in, name);
  auto header = reader.next();
  if (!header) reader.error_eof("missing 'n m' header line");
  auto counts = detail::parse_ints(*header, reader);
  if (counts.size() != 2 || counts[0] < 0 || counts[1] < 0)
    reader.error("header must be 'n m'");
  int n = static_cast<int>(counts[0]);
  long long m = counts[1];

  auto line = reader.next();
  Labeling labels = identity_labeling(n);
  if (line && line->find("labels:") != std::string::npos) {
    std::string rest = line->substr(line->find("labels:") + 7);
    auto values = detail::parse_ints(rest, reader);
    if (static_cast<int>(values.size()) != n)
      reader.error("labels line must list exactly n labels");
    for (int v = 0; v < n; ++v) labels[v] = static_cast<int>(values[v]);
    if (!is_canonical_labeling(labels))
      reader.error("labels must be a permutation of 1..n");
    line = reader.next();
  }

  std::vector<int> vertex_of(n + 1, -1);
  for (int v = 0; v < n; ++v) vertex_of[labels[v]] = v;
  Graph g(n);
  for (long long e = 0; e < m; ++e) {
    if (!line) reader.error_eof("expected " + std::to_string(m) + " edge lines");
    auto ends = detail::parse_ints(*line, reader);
    if (ends.size() != 2) reader.error("edge line must be 'x y'");
    long long x = ends[0], y = ends[1];
    if (x < 1 || x > n || y < 1 || y > n)
      reader.error("edge endpoint out of range");
    if (x == y) reader.error("self-loop");
    int u = vertex_of[x], v = vertex_of[y];
    if (g.adjacent(u, v)) reader.error("duplicate edge");
    g.add_edge(u, v);
    line = reader.next();
  }
  if (line) reader.error("unexpected content after the edge list");
  return {g, labels};
}

// Word file: one line of space-separated positive integers.
inline Word read_word(std::istream& in, const std::string& name) {
  detail::LineReader reader(in, name);
  auto line = reader.next();
  Word w;
  if (line) {
    for (long long a : detail::parse_ints(*line, reader)) {
      if (a < 1) reader.error("letters must be positive");
      w.push_back(static_cast<int>(a));
    }
    if (reader.next()) reader.error("unexpected content after the word");
  }
  return w;
}

// Grid file: one "x y" lattice point per line.
inline GridGraph read_grid(std::istream& in, const std::string& name) {
  detail::LineReader reader(in, name);
  std::vector<std::pair<int, int>> points;
  std::set<std::pair<int, int>> seen;
  while (auto line = reader.next()) {
    auto coords = detail::parse_ints(*line, reader);
    if (coords.size() != 2) reader.error("grid line must be 'x y'");
    std::pair<int, int> p{static_cast<int>(coords[0]),
                          static_cast<int>(coords[1])};
    if (!seen.insert(p).second) reader.error("duplicate point");
    points.push_back(p);
  }
  return grid_from_points(points);
}

struct ParsedModel {
  std::variant<IntervalModel, TriangleModel> model;
  std::vector<int> keys;  // ascending; entry i of the model belongs to keys[i]
};

namespace detail {

inline int parse_key(const std::string& key, const std::string& name) {
  try {
    std::size_t used = 0;
    int value = std::stoi(key, &used);
    if (used != key.size() || value < 1) throw std::invalid_argument(key);
    return value;
  } catch (const std::exception&) {
    throw InvalidInput(name + ": model keys must be positive integers, got '" +
                       key + "'");
  }
}

inline std::pair<double, double> parse_interval(const nlohmann::json& j,
                                                const std::string& name) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InvalidInput(name + ": interval must be a [lo, hi] number pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace detail

inline ParsedModel read_model(std::istream& in, const std::string& name) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(name + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw InvalidInput(name + ": model must be an object with a 'kind' field");
  std::string kind = j["kind"].get<std::string>();

  if (kind == "interval-containment") {
    if (!j.contains("intervals") || !j["intervals"].is_object())
      throw InvalidInput(name + ": missing 'intervals' object");
    std::vector<int> keys;
    for (const auto& [key, value] : j["intervals"].items())
      keys.push_back(detail::parse_key(key, name));
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
      throw InvalidInput(name + ": duplicate model key");
    auto side_keys = [&](const char* field) {
      if (!j.contains(field) || !j[field].is_array())
        throw InvalidInput(name + ": missing '" + std::string(field) +
                           "' array");
      std::set<int> side;
      for (const auto& k : j[field]) {
        if (!k.is_number_integer())
          throw InvalidInput(name + ": class members must be integers");
        if (!side.insert(k.get<int>()).second)
          throw InvalidInput(name + ": duplicate class member");
      }
      return side;
    };
    std::set<int> xs = side_keys("X");
    std::set<int> ys = side_keys("Y");
    IntervalModel m;
    for (int key : keys) {
      auto [lo, hi] =
          detail::parse_interval(j["intervals"][std::to_string(key)], name);
      m.lo.push_back(lo);
      m.hi.push_back(hi);
      bool in_x = xs.count(key) > 0, in_y = ys.count(key) > 0;
      if (in_x == in_y)
        throw InvalidInput(name + ": X and Y must partition the model keys");
      m.cls.push_back(in_x ? 0 : 1);
    }
    if (xs.size() + ys.size() != keys.size())
      throw InvalidInput(name + ": X and Y must partition the model keys");
    check_interval_sides(m.lo, m.hi);
    return {m, keys};
  }

  if (kind == "simple-triangle") {
    if (!j.contains("apex") || !j["apex"].is_object() || !j.contains("base") ||
        !j["base"].is_object())
      throw InvalidInput(name + ": missing 'apex' or 'base' object");
    std::vector<int> keys;
    for (const auto& [key, value] : j["apex"].items())
      keys.push_back(detail::parse_key(key, name));
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
      throw InvalidInput(name + ": duplicate model key");
    if (j["base"].size() != j["apex"].size())
      throw InvalidInput(name + ": apex and base must share the same keys");
    TriangleModel m;
    for (int key : keys) {
      std::string ks = std::to_string(key);
      if (!j["base"].contains(ks))
        throw InvalidInput(name + ": apex and base must share the same keys");
      if (!j["apex"][ks].is_number())
        throw InvalidInput(name + ": apex must map keys to numbers");
      m.apex.push_back(j["apex"][ks].get<double>());
      auto [lo, hi] = detail::parse_interval(j["base"][ks], name);
      m.lo.push_back(lo);
      m.hi.push_back(hi);
    }
    check_interval_sides(m.lo, m.hi);
    return {m, keys};
  }

  throw InvalidInput(name + ": unknown model kind '" + kind + "'");
}

namespace detail {

inline nlohmann::ordered_json coordinate(double v) {
  long long rounded = std::llround(v);
  if (static_cast<double>(rounded) == v) return rounded;
  return v;
}

}  // namespace detail

inline nlohmann::ordered_json interval_model_json(const IntervalModel& m,
                                                  const std::vector<int>& keys) {
  std::vector<int> order(m.n());
  for (int v = 0; v < m.n(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return keys[a] < keys[b]; });
  nlohmann::ordered_json j;
  j["kind"] = "interval-containment";
  for (const char* field : {"X", "Y"}) {
    auto arr = nlohmann::ordered_json::array();
    for (int v : order)
      if (m.cls[v] == (field[0] == 'Y')) arr.push_back(keys[v]);
    j[field] = arr;
  }
  auto intervals = nlohmann::ordered_json::object();
  for (int v : order)
    intervals[std::to_string(keys[v])] = {detail::coordinate(m.lo[v]),
                                          detail::coordinate(m.hi[v])};
  j["intervals"] = intervals;
  return j;
}

inline nlohmann::ordered_json triangle_model_json(const TriangleModel& m,
                                                  const std::vector<int>& keys) {
  std::vector<int> order(m.n());
  for (int v = 0; v < m.n(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return keys[a] < keys[b]; });
  nlohmann::ordered_json j;
  j["kind"] = "simple-triangle";
  auto apex = nlohmann::ordered_json::object();
  auto base = nlohmann::ordered_json::object();
  for (int v : order) {
    apex[std::to_string(keys[v])] = detail::coordinate(m.apex[v]);
    base[std::to_string(keys[v])] = {detail::coordinate(m.lo[v]),
                                     detail::coordinate(m.hi[v])};
  }
  j["apex"] = apex;
  j["base"] = base;
  return j;
}

inline std::string format_word(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w[i]);
  }
  return s;
}

// "name:label" pairs in vertex order.
inline std::string format_labeling(const std::vector<int>& names,
                                   const Labeling& labels) {
  std::string s;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (v) s += ' ';
    s += std::to_string(names[v]) + ":" + std::to_string(labels[v]);
  }
  return s;
}

namespace detail {

template <typename Fn>
auto with_file(const std::string& path, Fn&& fn) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open file: " + path);
  return fn(in, path);
}

}  // namespace detail

inline LabeledGraph read_graph_file(const std::string& path) {
  return detail::with_file(
      path, [](std::istream& in, const std::string& name) { return read_graph(in, name); });
}

inline Word read_word_file(const std::string& path) {
  return detail::with_file(
      path, [](std::istream& in, const std::string& name) { return read_word(in, name); });
}

inline GridGraph read_grid_file(const std::string& path) {
  return detail::with_file(
      path, [](std::istream& in, const std::string& name) { return read_grid(in, name); });
}

inline ParsedModel read_model_file(const std::string& path) {
  return detail::with_file(
      path, [](std::istream& in, const std::string& name) { return read_model(in, name); });
}

}  // namespace rep12::io
