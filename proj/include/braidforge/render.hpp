#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "braidforge/garside.hpp"
#include "braidforge/graph.hpp"
#include "braidforge/invariants.hpp"
#include "braidforge/isomap.hpp"
#include "braidforge/present.hpp"

namespace braidforge {

enum class RenderWhat { Bricks, Graph, Both };
enum class RenderFormat { Svg, Dot };

RenderWhat parse_render_what(std::string_view text);

// Drawing geometry: the braid is drawn bottom (first letter) to top.
struct Layout {
  static constexpr double kColumnPitch = 60;
  static constexpr double kRowPitch = 24;
  static constexpr double kMargin = 30;
};

std::string render_svg(const LinkingGraph& g, RenderWhat what);
// Graphviz text; region signs and cycles appear as comments.
std::string render_dot(const LinkingGraph& g);
std::string render(const LinkingGraph& g, RenderWhat what, RenderFormat format);

// JSON documents, see schemas/ for their shapes. Ids and positions in the
// output are one-based.
nlohmann::json word_json(const BraidWord& w);
nlohmann::json bricks_json(const BrickDiagram& d);
nlohmann::json graph_json(const LinkingGraph& g);
nlohmann::json presentation_json(const Presentation& p);
nlohmann::json normal_form_json(const NormalForm& nf);
nlohmann::json abelianization_json(const Abelianization& a);
nlohmann::json moves_json(const std::vector<WordMove>& moves);
nlohmann::json map_report_json(const MapReport& r);
nlohmann::json generator_map_json(const GeneratorMap& m);

}  // namespace braidforge
