#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stickknot {

// Abstract multigraph. Parallel edges are allowed (a theta-graph needs them);
// self-loops are not. Vertices are labelled, edges refer to vertex indices.
struct AbstractGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<int, int>> edges;

  int vertex_index(const std::string& label) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == label) return static_cast<int>(i);
    return -1;
  }

  std::vector<int> incident_edges(int v) const {
    std::vector<int> out;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (edges[e].first == v || edges[e].second == v) out.push_back(static_cast<int>(e));
    return out;
  }

  int other_end(int edge, int v) const {
    const auto& [a, b] = edges[edge];
    return a == v ? b : a;
  }

  void check() const {
    for (const auto& [a, b] : edges) {
      if (a == b) throw std::invalid_argument("graph has a self-loop");
      if (a < 0 || b < 0 || a >= static_cast<int>(vertices.size()) ||
          b >= static_cast<int>(vertices.size()))
        throw std::invalid_argument("edge references missing vertex");
    }
  }

  static AbstractGraph complete(int n, const std::string& prefix = "v") {
    AbstractGraph g;
    for (int i = 0; i < n; ++i) g.vertices.push_back(prefix + std::to_string(i + 1));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
    return g;
  }

  // K_{m,n} with parts u1..um and w1..wn
  static AbstractGraph complete_bipartite(int m, int n) {
    AbstractGraph g;
    for (int i = 0; i < m; ++i) g.vertices.push_back("u" + std::to_string(i + 1));
    for (int i = 0; i < n; ++i) g.vertices.push_back("w" + std::to_string(i + 1));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) g.edges.emplace_back(i, m + j);
    return g;
  }

  // two vertices joined by three parallel edges
  static AbstractGraph theta() {
    AbstractGraph g;
    g.vertices = {"a", "b"};
    g.edges = {{0, 1}, {0, 1}, {0, 1}};
    return g;
  }
};

// A simple cycle as a closed edge walk. verts[i] is the vertex entered before
// edges[i]; edges[i] joins verts[i] to verts[(i+1) % k]. Two parallel edges
// form a valid 2-cycle; simple graphs only have cycles of length >= 3.
struct Cycle {
  std::vector<int> edges;
  std::vector<int> verts;

  std::size_t length() const { return edges.size(); }
};

// All simple cycles, each exactly once up to rotation and reflection.
// Depth-first path extension from the smallest vertex id of each cycle, with
// canonical-form (sorted edge set) deduplication. Graphs here are tiny.
inline std::vector<Cycle> enumerate_cycles(const AbstractGraph& g) {
  g.check();
  std::vector<Cycle> out;
  std::set<std::vector<int>> seen;
  const int n = static_cast<int>(g.vertices.size());

  std::vector<int> path_edges, path_verts;
  std::vector<bool> on_path(n, false), edge_used(g.edges.size(), false);

  auto record = [&](int closing_edge) {
    std::vector<int> key = path_edges;
    key.push_back(closing_edge);
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) return;
    Cycle c;
    c.edges = path_edges;
    c.edges.push_back(closing_edge);
    c.verts = path_verts;
    out.push_back(std::move(c));
  };

  int start = 0;
  auto dfs = [&](auto&& self, int v) -> void {
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      if (edge_used[e]) continue;
      const auto& [a, b] = g.edges[e];
      if (a != v && b != v) continue;
      const int u = g.other_end(static_cast<int>(e), v);
      if (u == start) {
        if (path_edges.size() >= 1) record(static_cast<int>(e));
        continue;
      }
      if (u < start || on_path[u]) continue;
      path_edges.push_back(static_cast<int>(e));
      path_verts.push_back(u);
      on_path[u] = true;
      edge_used[e] = true;
      self(self, u);
      edge_used[e] = false;
      on_path[u] = false;
      path_verts.pop_back();
      path_edges.pop_back();
    }
  };

  for (start = 0; start < n; ++start) {
    path_edges.clear();
    path_verts.assign(1, start);
    std::fill(on_path.begin(), on_path.end(), false);
    on_path[start] = true;
    dfs(dfs, start);
  }

  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    auto ka = a.edges, kb = b.edges;
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    return ka < kb;
  });
  return out;
}

}  // namespace stickknot
