#include "braidforge/graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "braidforge/error.hpp"

namespace braidforge {

std::string_view to_string(SignConvention c) {
  return c == SignConvention::RightPositive ? "right-positive" : "left-positive";
}

SignConvention parse_sign_convention(std::string_view text) {
  if (text == "right-positive") return SignConvention::RightPositive;
  if (text == "left-positive") return SignConvention::LeftPositive;
  throw Error("unknown sign convention \"" + std::string(text) +
              "\" (expected right-positive or left-positive)");
}

bool vertically_linked(const Brick& x, const Brick& y) {
  return x.column == y.column && (x.hi == y.lo || y.hi == x.lo);
}

bool laterally_linked(const Brick& x, const Brick& y) {
  if (std::abs(x.column - y.column) != 1) return false;
  const auto p = x.lo, q = x.hi, r = y.lo, s = y.hi;
  return (p < r && r < q && q < s) || (r < p && p < s && s < q);
}

LinkingGraph::LinkingGraph(BrickDiagram diagram, std::vector<LinkEdge> edges,
                           std::vector<Region> regions, SignConvention convention)
    : diagram_(std::move(diagram)),
      edges_(std::move(edges)),
      regions_(std::move(regions)),
      convention_(convention),
      adjacency_(diagram_.size()) {
  for (const auto& e : edges_) {
    adjacency_[static_cast<std::size_t>(e.a)].push_back(e.b);
    adjacency_[static_cast<std::size_t>(e.b)].push_back(e.a);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

Point LinkingGraph::position(int id) const {
  const Brick& b = diagram_[static_cast<std::size_t>(id)];
  return {static_cast<double>(b.column), b.mid()};
}

bool LinkingGraph::linked(int a, int b) const {
  const auto& nb = adjacency_[static_cast<std::size_t>(a)];
  return std::binary_search(nb.begin(), nb.end(), b);
}

namespace {

std::vector<LinkEdge> link_edges(const BrickDiagram& d) {
  std::vector<LinkEdge> edges;
  const auto& bricks = d.bricks();
  for (std::size_t i = 0; i < bricks.size(); ++i) {
    for (std::size_t j = i + 1; j < bricks.size(); ++j) {
      if (vertically_linked(bricks[i], bricks[j])) {
        edges.push_back({bricks[i].id, bricks[j].id, EdgeKind::Vertical});
      } else if (laterally_linked(bricks[i], bricks[j])) {
        edges.push_back({bricks[i].id, bricks[j].id, EdgeKind::Lateral});
      }
    }
  }
  return edges;
}

Point point_of(const BrickDiagram& d, int id) {
  const Brick& b = d[static_cast<std::size_t>(id)];
  return {static_cast<double>(b.column), b.mid()};
}

double orient(Point a, Point b, Point c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool on_segment(Point a, Point b, Point p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool segments_cross(Point a, Point b, Point c, Point d) {
  const double d1 = orient(c, d, a), d2 = orient(c, d, b);
  const double d3 = orient(a, b, c), d4 = orient(a, b, d);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
    return true;
  }
  if (d1 == 0 && on_segment(c, d, a)) return true;
  if (d2 == 0 && on_segment(c, d, b)) return true;
  if (d3 == 0 && on_segment(a, b, c)) return true;
  if (d4 == 0 && on_segment(a, b, d)) return true;
  return false;
}

bool plane(const BrickDiagram& d, const std::vector<LinkEdge>& edges) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto& e = edges[i];
      const auto& f = edges[j];
      const bool share = e.a == f.a || e.a == f.b || e.b == f.a || e.b == f.b;
      Point a = point_of(d, e.a), b = point_of(d, e.b);
      Point c = point_of(d, f.a), q = point_of(d, f.b);
      if (share) {
        // Edges with a common endpoint may only meet there: reject overlap.
        const int common = (e.a == f.a || e.a == f.b) ? e.a : e.b;
        const int other_e = e.a == common ? e.b : e.a;
        const int other_f = f.a == common ? f.b : f.a;
        Point o = point_of(d, common), pe = point_of(d, other_e), pf = point_of(d, other_f);
        if (orient(o, pe, pf) == 0 &&
            (pe.x - o.x) * (pf.x - o.x) + (pe.y - o.y) * (pf.y - o.y) > 0) {
          return false;
        }
        continue;
      }
      if (segments_cross(a, b, c, q)) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Region> faces(const BrickDiagram& d, const std::vector<LinkEdge>& edges,
                          SignConvention convention) {
  if (!plane(d, edges)) throw InternalError("linking graph embedding is not plane");

  const std::size_t n = d.size();
  std::vector<std::vector<int>> rot(n);
  for (const auto& e : edges) {
    rot[static_cast<std::size_t>(e.a)].push_back(e.b);
    rot[static_cast<std::size_t>(e.b)].push_back(e.a);
  }
  for (std::size_t v = 0; v < n; ++v) {
    const Point o = point_of(d, static_cast<int>(v));
    std::sort(rot[v].begin(), rot[v].end(), [&](int a, int b) {
      const Point pa = point_of(d, a), pb = point_of(d, b);
      return std::atan2(pa.y - o.y, pa.x - o.x) < std::atan2(pb.y - o.y, pb.x - o.x);
    });
  }

  // Walk every half-edge once; arriving at v from u, leave along the
  // neighbour preceding u in counterclockwise order. Bounded faces then come
  // out counterclockwise with positive area.
  std::set<std::pair<int, int>> used;
  std::vector<std::vector<int>> ccw_faces;
  for (std::size_t u0 = 0; u0 < n; ++u0) {
    for (int v0 : rot[u0]) {
      if (used.count({static_cast<int>(u0), v0})) continue;
      std::vector<int> cycle;
      int u = static_cast<int>(u0), v = v0;
      while (!used.count({u, v})) {
        used.insert({u, v});
        cycle.push_back(u);
        const auto& around = rot[static_cast<std::size_t>(v)];
        const auto it = std::find(around.begin(), around.end(), u);
        const auto idx = static_cast<std::size_t>(it - around.begin());
        const int w = around[(idx + around.size() - 1) % around.size()];
        u = v;
        v = w;
      }
      double area = 0;
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const Point a = point_of(d, cycle[i]), b = point_of(d, cycle[(i + 1) % cycle.size()]);
        area += a.x * b.y - b.x * a.y;
      }
      if (area > 1e-9) ccw_faces.push_back(std::move(cycle));
    }
  }

  std::vector<Region> regions;
  for (auto& cycle : ccw_faces) {
    const std::set<int> distinct(cycle.begin(), cycle.end());
    if (distinct.size() != cycle.size()) {
      throw InternalError("bounded face boundary repeats a vertex");
    }
    std::map<int, int> per_column;
    for (int v : cycle) ++per_column[d[static_cast<std::size_t>(v)].column];
    int lateral = 0;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Brick& a = d[static_cast<std::size_t>(cycle[i])];
      const Brick& b = d[static_cast<std::size_t>(cycle[(i + 1) % cycle.size()])];
      if (a.column != b.column) ++lateral;
    }
    if (per_column.size() != 2 || lateral != 2) {
      throw InternalError("bounded region does not consist of one column path and one brick");
    }
    auto first = per_column.begin();
    auto second = std::next(first);
    if (std::min(first->second, second->second) != 1 || std::max(first->second, second->second) < 2) {
      throw InternalError("bounded region does not consist of one column path and one brick");
    }
    Region r;
    const bool path_left = first->second >= 2;  // path in the lower column
    r.anchor_column = path_left ? first->first : second->first;
    r.side = path_left ? Side::Right : Side::Left;
    const bool positive = (r.side == Side::Right) == (convention == SignConvention::RightPositive);
    r.sign = positive ? 1 : -1;
    if (!positive) std::reverse(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
    r.vertices = std::move(cycle);
    regions.push_back(std::move(r));
  }
  std::sort(regions.begin(), regions.end(),
            [](const Region& x, const Region& y) { return x.vertices < y.vertices; });
  return regions;
}

std::vector<Region> faces(const LinkingGraph& g) {
  return faces(g.diagram(), g.edges(), g.convention());
}

LinkingGraph build_graph(const BrickDiagram& d, SignConvention convention) {
  auto edges = link_edges(d);
  auto regions = faces(d, edges, convention);
  return LinkingGraph(d, std::move(edges), std::move(regions), convention);
}

LinkingGraph build_graph(const BraidWord& w, SignConvention convention) {
  return build_graph(build_bricks(w), convention);
}

bool is_plane_embedding(const LinkingGraph& g) { return plane(g.diagram(), g.edges()); }

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

// AHU encoding of the tree containing `root`, rooted there.
std::string encode(const LinkingGraph& g, int root, int parent) {
  std::vector<std::string> children;
  for (int c : g.neighbours(root)) {
    if (c != parent) children.push_back(encode(g, c, root));
  }
  std::sort(children.begin(), children.end());
  std::string s = "(";
  for (const auto& c : children) s += c;
  return s + ")";
}

std::vector<std::string> forest_codes(const LinkingGraph& g) {
  const std::size_t n = g.vertex_count();
  UnionFind uf(n);
  for (const auto& e : g.edges()) {
    if (!uf.unite(e.a, e.b)) throw Error("linking graph has a cycle, it is not a forest");
  }
  std::map<int, std::vector<int>> components;
  for (std::size_t v = 0; v < n; ++v) components[uf.find(static_cast<int>(v))].push_back(static_cast<int>(v));

  std::vector<std::string> codes;
  for (const auto& [rep, vertices] : components) {
    // Peel leaves to find the centre(s).
    std::map<int, int> degree;
    for (int v : vertices) degree[v] = static_cast<int>(g.neighbours(v).size());
    std::vector<int> layer;
    for (int v : vertices) {
      if (degree[v] <= 1) layer.push_back(v);
    }
    std::size_t remaining = vertices.size();
    while (remaining > 2) {
      remaining -= layer.size();
      std::vector<int> next;
      for (int leaf : layer) {
        for (int nb : g.neighbours(leaf)) {
          if (--degree[nb] == 1) next.push_back(nb);
        }
      }
      layer = std::move(next);
    }
    std::string best;
    for (int c : layer) {
      std::string code = encode(g, c, -1);
      if (best.empty() || code < best) best = std::move(code);
    }
    codes.push_back(best);
  }
  std::sort(codes.begin(), codes.end());
  return codes;
}

}  // namespace

std::size_t connected_components(const LinkingGraph& g) {
  UnionFind uf(g.vertex_count());
  std::size_t c = g.vertex_count();
  for (const auto& e : g.edges()) {
    if (uf.unite(e.a, e.b)) --c;
  }
  return c;
}

bool graphs_isomorphic_as_trees(const LinkingGraph& g1, const LinkingGraph& g2) {
  return forest_codes(g1) == forest_codes(g2);
}

}  // namespace braidforge
