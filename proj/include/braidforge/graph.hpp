#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "braidforge/brick.hpp"

namespace braidforge {

enum class EdgeKind {
  Vertical,  // same column, the bricks share their middle crossing
  Lateral,   // adjacent columns, bounding crossings alternate
};

// Which side of a region's column path its single off-column brick lies on.
enum class Side { Left, Right };

// Which side is the positive one. Positive regions list their vertices
// counterclockwise in the (column, word position) plane, negative ones
// clockwise.
enum class SignConvention { RightPositive, LeftPositive };

inline constexpr SignConvention kDefaultSignConvention = SignConvention::LeftPositive;

std::string_view to_string(SignConvention c);
SignConvention parse_sign_convention(std::string_view text);

// a < b; for a lateral edge `a` is the brick in the lower column.
struct LinkEdge {
  int a = 0;
  int b = 0;
  EdgeKind kind{};

  friend bool operator==(const LinkEdge&, const LinkEdge&) = default;
};

struct Region {
  std::vector<int> vertices;  // cyclic order read by sign, starting at the smallest id
  int sign = 1;
  int anchor_column = 0;  // column of the vertical boundary edges
  Side side{};            // where the off-column brick sits relative to the anchor

  friend bool operator==(const Region&, const Region&) = default;
};

struct Point {
  double x = 0;
  double y = 0;
};

class LinkingGraph {
 public:
  LinkingGraph(BrickDiagram diagram, std::vector<LinkEdge> edges, std::vector<Region> regions,
               SignConvention convention);

  const BrickDiagram& diagram() const { return diagram_; }
  std::size_t vertex_count() const { return diagram_.size(); }
  const std::vector<LinkEdge>& edges() const { return edges_; }
  const std::vector<Region>& regions() const { return regions_; }
  SignConvention convention() const { return convention_; }

  // x = column, y = midpoint of the brick's word interval.
  Point position(int id) const;
  bool linked(int a, int b) const;
  const std::vector<int>& neighbours(int id) const { return adjacency_[static_cast<std::size_t>(id)]; }

 private:
  BrickDiagram diagram_;
  std::vector<LinkEdge> edges_;
  std::vector<Region> regions_;
  SignConvention convention_;
  std::vector<std::vector<int>> adjacency_;
};

// The two linking predicates, exposed for testing.
bool vertically_linked(const Brick& x, const Brick& y);
bool laterally_linked(const Brick& x, const Brick& y);

LinkingGraph build_graph(const BrickDiagram& d,
                         SignConvention convention = kDefaultSignConvention);
LinkingGraph build_graph(const BraidWord& w, SignConvention convention = kDefaultSignConvention);

// Bounded faces of the straight-line embedding, from the rotation system.
// Throws InternalError if the embedding is not plane or a face does not
// have the column-path-plus-one-brick shape.
std::vector<Region> faces(const BrickDiagram& d, const std::vector<LinkEdge>& edges,
                          SignConvention convention);
std::vector<Region> faces(const LinkingGraph& g);

// True iff no two edges cross away from shared endpoints.
bool is_plane_embedding(const LinkingGraph& g);

std::size_t connected_components(const LinkingGraph& g);

// Isomorphism of the underlying abstract graphs, for forests only.
// Throws Error if either graph has a cycle.
bool graphs_isomorphic_as_trees(const LinkingGraph& g1, const LinkingGraph& g2);

}  // namespace braidforge
