#include "stickknot/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace stickknot {

std::string Diagram::pd_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& c : crossings) {
    const auto t = c.pd_tuple();
    if (!first) os << " ";
    first = false;
    os << "X[" << t[0] + 1 << "," << t[1] + 1 << "," << t[2] + 1 << "," << t[3] + 1 << "]";
  }
  if (first) os << "PD[]";
  return os.str();
}

Diagram Diagram::from_pd(const std::string& text) {
  Diagram d;
  d.components = 1;
  std::vector<std::array<int, 4>> tuples;
  int max_arc = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != 'X') {
      ++i;
      continue;
    }
    i += 1;
    while (i < text.size() && (text[i] == '[' || text[i] == '(')) ++i;
    std::array<int, 4> t{};
    for (int k = 0; k < 4; ++k) {
      while (i < text.size() && !std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      t[k] = v;
      max_arc = std::max(max_arc, v);
    }
    tuples.push_back(t);
  }
  d.num_arcs = max_arc;
  auto succ = [&](int x) { return x == max_arc ? 1 : x + 1; };
  for (const auto& t : tuples) {
    Crossing c;
    c.under_in = t[0] - 1;
    c.under_out = t[2] - 1;
    if (t[1] == succ(t[3])) {
      c.sign = 1;  // over strand travels d -> b
      c.over_in = t[3] - 1;
      c.over_out = t[1] - 1;
    } else if (t[3] == succ(t[1])) {
      c.sign = -1;  // over strand travels b -> d
      c.over_in = t[1] - 1;
      c.over_out = t[3] - 1;
    } else {
      throw std::invalid_argument("from_pd: cannot infer crossing sign from arc numbering");
    }
    d.crossings.push_back(c);
  }
  return d;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

LaurentPolynomial kauffman_bracket(const Diagram& d) {
  const int n = static_cast<int>(d.crossings.size());
  if (n > kMaxBracketCrossings)
    throw std::runtime_error("kauffman_bracket: crossing budget exceeded");

  const LaurentPolynomial delta =
      LaurentPolynomial::monomial(-1, 2) + LaurentPolynomial::monomial(-1, -2);
  std::vector<LaurentPolynomial> delta_pow(2 * n + d.free_loops + 2);
  delta_pow[0] = LaurentPolynomial::one();
  for (std::size_t k = 1; k < delta_pow.size(); ++k) delta_pow[k] = delta_pow[k - 1] * delta;

  if (n == 0) {
    // a crossingless diagram of L loops contributes delta^(L-1)
    const int loops = d.free_loops > 0 ? d.free_loops : d.components;
    return delta_pow[static_cast<std::size_t>(loops - 1)];
  }

  std::vector<std::array<int, 4>> tuples;
  tuples.reserve(d.crossings.size());
  for (const auto& c : d.crossings) tuples.push_back(c.pd_tuple());

  LaurentPolynomial total;
  UnionFind uf(d.num_arcs);
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << n); ++state) {
    std::iota(uf.parent.begin(), uf.parent.end(), 0);
    int a_count = 0;
    for (int ci = 0; ci < n; ++ci) {
      const auto& t = tuples[ci];
      if ((state >> ci) & 1) {
        uf.unite(t[0], t[3]);  // B-smoothing
        uf.unite(t[1], t[2]);
      } else {
        uf.unite(t[0], t[1]);  // A-smoothing
        uf.unite(t[2], t[3]);
        ++a_count;
      }
    }
    int loops = d.free_loops;
    for (int a = 0; a < d.num_arcs; ++a)
      if (uf.find(a) == a) ++loops;
    const int exp = a_count - (n - a_count);
    total += LaurentPolynomial::monomial(1, exp) * delta_pow[static_cast<std::size_t>(loops - 1)];
  }
  return total;
}

LaurentPolynomial jones_normalized(const Diagram& d) {
  if (d.components != 1)
    throw std::invalid_argument("jones_normalized: knot diagrams only");
  const int w = d.writhe();
  const long long sign = (w % 2 == 0) ? 1 : -1;
  return LaurentPolynomial::monomial(sign, -3 * w) * kauffman_bracket(d);
}

namespace {

// Face structure of the underlying 4-valent planar map. Slots of a crossing
// are its pd_tuple positions (counterclockwise); corner k lies between slots
// k and k+1. Faces are traced through darts; corner_face[c][k] records the
// face touching that corner.
struct FaceStructure {
  int face_count = 0;
  std::vector<std::array<int, 4>> corner_face;
  std::vector<int> color;  // proper 2-coloring of faces
};

FaceStructure build_faces(const Diagram& d) {
  const int n = static_cast<int>(d.crossings.size());
  std::vector<std::array<int, 4>> slots(n);
  std::vector<std::vector<std::pair<int, int>>> arc_inc(d.num_arcs);
  for (int ci = 0; ci < n; ++ci) {
    slots[ci] = d.crossings[ci].pd_tuple();
    for (int k = 0; k < 4; ++k) arc_inc[slots[ci][k]].push_back({ci, k});
  }
  for (int a = 0; a < d.num_arcs; ++a)
    if (arc_inc[a].size() != 2)
      throw std::invalid_argument("diagram arcs must occur exactly twice");

  // dart = (arc, incidence index it travels toward)
  const int darts = 2 * d.num_arcs;
  auto dart_id = [](int arc, int ti) { return 2 * arc + ti; };
  std::vector<int> next(darts, -1);
  for (int arc = 0; arc < d.num_arcs; ++arc) {
    for (int ti = 0; ti < 2; ++ti) {
      const auto [c, k] = arc_inc[arc][ti];
      const int k2 = (k + 1) % 4;
      const int arc2 = slots[c][k2];
      int source_idx = -1;
      for (int j = 0; j < 2; ++j)
        if (arc_inc[arc2][j] == std::make_pair(c, k2)) source_idx = j;
      next[dart_id(arc, ti)] = dart_id(arc2, 1 - source_idx);
    }
  }

  FaceStructure fs;
  fs.corner_face.assign(n, {-1, -1, -1, -1});
  std::vector<int> dart_face(darts, -1);
  for (int start = 0; start < darts; ++start) {
    if (dart_face[start] != -1) continue;
    const int f = fs.face_count++;
    int cur = start;
    do {
      dart_face[cur] = f;
      const auto [c, k] = arc_inc[cur / 2][cur % 2];
      fs.corner_face[c][k] = f;
      cur = next[cur];
    } while (cur != start);
  }
  if (fs.face_count != n + 2)
    throw std::runtime_error("face count does not satisfy Euler's formula; diagram not planar");

  // checkerboard coloring: faces across an arc get opposite colors
  fs.color.assign(fs.face_count, -1);
  std::vector<std::vector<int>> adj(fs.face_count);
  for (int arc = 0; arc < d.num_arcs; ++arc) {
    const auto [c, k] = arc_inc[arc][0];
    const int f1 = fs.corner_face[c][k];
    const int f2 = fs.corner_face[c][(k + 3) % 4];
    adj[f1].push_back(f2);
    adj[f2].push_back(f1);
  }
  std::queue<int> bfs;
  for (int f0 = 0; f0 < fs.face_count; ++f0) {
    if (fs.color[f0] != -1) continue;
    fs.color[f0] = 0;
    bfs.push(f0);
    while (!bfs.empty()) {
      const int f = bfs.front();
      bfs.pop();
      for (int g : adj[f]) {
        if (fs.color[g] == -1) {
          fs.color[g] = 1 - fs.color[f];
          bfs.push(g);
        } else if (fs.color[g] == fs.color[f]) {
          throw std::runtime_error("diagram faces are not checkerboard colorable");
        }
      }
    }
  }
  return fs;
}

// exact integer determinant, fraction-free Gaussian elimination
long long int_determinant(std::vector<std::vector<long long>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  long long prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          piv = i;
          break;
        }
      if (piv == -1) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

long long knot_determinant(const Diagram& d) {
  if (d.crossings.empty()) return 1;
  if (d.free_loops > 0)
    throw std::invalid_argument("knot_determinant: diagram must be connected");

  const FaceStructure fs = build_faces(d);
  const int n = static_cast<int>(d.crossings.size());

  // white = color class 0 (either class yields the same |det|)
  std::vector<int> white_index(fs.face_count, -1);
  int m = 0;
  for (int f = 0; f < fs.face_count; ++f)
    if (fs.color[f] == 0) white_index[f] = m++;
  if (m <= 1) return 1;

  std::vector<std::vector<long long>> g(m, std::vector<long long>(m, 0));
  for (int ci = 0; ci < n; ++ci) {
    // corners 0 and 2 are swept rotating the under strand counterclockwise
    // onto the over strand; the crossing type is which pair is white
    const bool white_even = fs.color[fs.corner_face[ci][0]] == 0;
    const int eta = white_even ? 1 : -1;
    const int ca = white_even ? 0 : 1;
    const int f1 = fs.corner_face[ci][ca];
    const int f2 = fs.corner_face[ci][ca + 2];
    if (f1 == f2) continue;  // nugatory crossing, drops out
    const int i = white_index[f1], j = white_index[f2];
    g[i][j] -= eta;
    g[j][i] -= eta;
  }
  for (int i = 0; i < m; ++i) {
    long long s = 0;
    for (int j = 0; j < m; ++j)
      if (j != i) s += g[i][j];
    g[i][i] = -s;
  }
  // delete row/column 0
  std::vector<std::vector<long long>> minor(m - 1, std::vector<long long>(m - 1));
  for (int i = 1; i < m; ++i)
    for (int j = 1; j < m; ++j) minor[i - 1][j - 1] = g[i][j];
  const long long det = int_determinant(std::move(minor));
  return det < 0 ? -det : det;
}

}  // namespace stickknot
