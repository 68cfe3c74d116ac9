#include "graphjac/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace graphjac {

std::uint64_t MultiGraph::multiplicity(Vertex u, Vertex v) const {
  const auto& adj = adjacency_[u];
  auto it = std::lower_bound(
      adj.begin(), adj.end(), v,
      [](const Neighbor& nb, Vertex x) { return nb.vertex < x; });
  return it != adj.end() && it->vertex == v ? it->multiplicity : 0;
}

std::vector<std::pair<std::pair<Vertex, Vertex>, std::uint64_t>>
MultiGraph::edges() const {
  std::vector<std::pair<std::pair<Vertex, Vertex>, std::uint64_t>> out;
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (const auto& nb : adjacency_[u])
      if (u < nb.vertex) out.push_back({{u, nb.vertex}, nb.multiplicity});
  return out;
}

MultiGraph build_graph(std::size_t n,
                       const std::vector<std::pair<Vertex, Vertex>>& edges) {
  if (n == 0)
    throw Error(ErrorCode::VertexOutOfRange, "graph needs at least one vertex");
  std::vector<std::map<Vertex, std::uint64_t>> counts(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") outside 0.." + std::to_string(n - 1));
    if (u == v)
      throw Error(ErrorCode::LoopEdge,
                  "loop at vertex " + std::to_string(u));
    ++counts[u][v];
    ++counts[v][u];
  }
  MultiGraph g;
  g.adjacency_.resize(n);
  g.degree_.assign(n, 0);
  g.edge_count_ = edges.size();
  for (Vertex u = 0; u < n; ++u)
    for (const auto& [v, k] : counts[u]) {
      g.adjacency_[u].push_back({v, k});
      g.degree_[u] += k;
    }

  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (const auto& nb : g.adjacency_[u])
      if (!seen[nb.vertex]) {
        seen[nb.vertex] = true;
        ++reached;
        stack.push_back(nb.vertex);
      }
  }
  if (reached != n)
    throw Error(ErrorCode::Disconnected,
                "graph is disconnected (" + std::to_string(reached) + " of " +
                    std::to_string(n) + " vertices reachable from 0)");
  return g;
}

IntegerMatrix laplacian(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  IntegerMatrix q(n, n);
  for (Vertex u = 0; u < n; ++u) {
    q(u, u) = static_cast<unsigned long>(g.degree(u));
    for (const auto& nb : g.neighbors(u))
      q(u, nb.vertex) = -static_cast<long>(nb.multiplicity);
  }
  return q;
}

IntVector laplacian_apply(const MultiGraph& g, const IntVector& x) {
  const std::size_t n = g.vertex_count();
  if (x.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "vector length != vertex count");
  IntVector y(n);
  Integer t;
  for (Vertex u = 0; u < n; ++u)
    for (const auto& nb : g.neighbors(u)) {
      t = x[u] - x[nb.vertex];
      y[u] += t * static_cast<unsigned long>(nb.multiplicity);
    }
  return y;
}

MultiGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::size_t n = 0, m = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long long a = 0, b = 0;
    std::string extra;
    if (!(fields >> a >> b)) fail("expected two integers");
    if (fields >> extra) fail("trailing text '" + extra + "'");
    if (a < 0 || b < 0) fail("negative value");
    if (!have_header) {
      n = static_cast<std::size_t>(a);
      m = static_cast<std::size_t>(b);
      have_header = true;
    } else {
      edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
  }
  if (!have_header) fail("missing 'n m' header");
  if (edges.size() != m)
    throw Error(ErrorCode::ParseError,
                "header announces " + std::to_string(m) + " edges, found " +
                    std::to_string(edges.size()));
  return build_graph(n, edges);
}

MultiGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string format_graph(const MultiGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [e, k] : g.edges())
    for (std::uint64_t i = 0; i < k; ++i)
      out << e.first << ' ' << e.second << '\n';
  return out.str();
}

namespace families {

MultiGraph cycle(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return build_graph(n, e);
}

MultiGraph complete(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return build_graph(n, e);
}

MultiGraph banana(std::uint64_t m) {
  return build_graph(2, std::vector<std::pair<Vertex, Vertex>>(m, {0, 1}));
}

MultiGraph wheel(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 1; i <= n; ++i) {
    e.emplace_back(0, i);
    e.emplace_back(i, i % n + 1);
  }
  return build_graph(n + 1, e);
}

MultiGraph wheel_minus_spoke(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 1; i <= n; ++i) {
    if (i != 1) e.emplace_back(0, i);
    e.emplace_back(i, i % n + 1);
  }
  return build_graph(n + 1, e);
}

MultiGraph path(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return build_graph(n, e);
}

}  // namespace families

}  // namespace graphjac
