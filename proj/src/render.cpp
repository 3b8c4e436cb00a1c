#include "braidforge/render.hpp"

#include <cstdio>
#include <sstream>

#include "braidforge/error.hpp"

namespace braidforge {

RenderWhat parse_render_what(std::string_view text) {
  if (text == "bricks") return RenderWhat::Bricks;
  if (text == "graph") return RenderWhat::Graph;
  if (text == "both") return RenderWhat::Both;
  throw Error("unknown render target \"" + std::string(text) + "\"");
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

struct Canvas {
  int strands;
  std::size_t rows;

  double strand_x(int s) const { return Layout::kMargin + s * Layout::kColumnPitch; }
  // Column i sits between strands i-1 and i (zero-based strands).
  double column_x(double i) const { return strand_x(0) + (i - 0.5) * Layout::kColumnPitch; }
  double row_y(double p) const {
    const double top = static_cast<double>(rows == 0 ? 0 : rows - 1);
    return Layout::kMargin + (top - p) * Layout::kRowPitch;
  }
  double width() const { return 2 * Layout::kMargin + (strands - 1) * Layout::kColumnPitch; }
  double height() const {
    return 2 * Layout::kMargin + static_cast<double>(rows == 0 ? 0 : rows - 1) * Layout::kRowPitch;
  }
};

}  // namespace

std::string render_svg(const LinkingGraph& g, RenderWhat what) {
  const BraidWord& w = g.diagram().word();
  const Canvas c{w.strands(), w.size()};
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(c.width()) << "\" height=\""
     << num(c.height()) << "\" viewBox=\"0 0 " << num(c.width()) << ' ' << num(c.height())
     << "\">\n";

  os << "<g class=\"strands\" stroke=\"#999\" stroke-width=\"1\">\n";
  for (int s = 0; s < w.strands(); ++s) {
    os << "<line x1=\"" << num(c.strand_x(s)) << "\" y1=\"" << num(c.row_y(static_cast<double>(w.size()) - 0.5))
       << "\" x2=\"" << num(c.strand_x(s)) << "\" y2=\"" << num(c.row_y(-0.5)) << "\"/>\n";
  }
  os << "</g>\n";

  if (what != RenderWhat::Graph) {
    os << "<g class=\"crossings\" stroke=\"#000\" stroke-width=\"2\">\n";
    for (std::size_t p = 0; p < w.size(); ++p) {
      const double y = c.row_y(static_cast<double>(p));
      os << "<line x1=\"" << num(c.strand_x(w[p] - 1)) << "\" y1=\"" << num(y) << "\" x2=\""
         << num(c.strand_x(w[p])) << "\" y2=\"" << num(y) << "\"/>\n";
    }
    os << "</g>\n<g class=\"bricks\" fill=\"none\" stroke=\"#36c\" stroke-width=\"1\">\n";
    for (const auto& b : g.diagram().bricks()) {
      const double y = c.row_y(static_cast<double>(b.hi));
      os << "<rect x=\"" << num(c.strand_x(b.column - 1) + 3) << "\" y=\"" << num(y + 3)
         << "\" width=\"" << num(Layout::kColumnPitch - 6) << "\" height=\""
         << num(static_cast<double>(b.hi - b.lo) * Layout::kRowPitch - 6) << "\"/>\n";
    }
    os << "</g>\n";
  }

  if (what != RenderWhat::Bricks) {
    auto at = [&](int id) {
      const Point p = g.position(id);
      return std::make_pair(c.column_x(p.x), c.row_y(p.y));
    };
    os << "<g class=\"regions\" stroke=\"none\">\n";
    for (const auto& r : g.regions()) {
      os << "<polygon fill=\"" << (r.sign < 0 ? "#bbb" : "none") << "\" data-sign=\"" << r.sign
         << "\" points=\"";
      for (std::size_t k = 0; k < r.vertices.size(); ++k) {
        const auto [x, y] = at(r.vertices[k]);
        os << (k ? " " : "") << num(x) << ',' << num(y);
      }
      os << "\"/>\n";
    }
    os << "</g>\n<g class=\"edges\" stroke=\"#c33\" stroke-width=\"1.5\">\n";
    for (const auto& e : g.edges()) {
      const auto [x1, y1] = at(e.a);
      const auto [x2, y2] = at(e.b);
      os << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2) << "\" y2=\""
         << num(y2) << "\"/>\n";
    }
    os << "</g>\n<g class=\"vertices\" fill=\"#c33\" font-size=\"10\">\n";
    for (const auto& b : g.diagram().bricks()) {
      const auto [x, y] = at(b.id);
      os << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"4\"/>"
         << "<text x=\"" << num(x + 6) << "\" y=\"" << num(y - 4) << "\">s" << b.id + 1
         << "</text>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_dot(const LinkingGraph& g) {
  std::ostringstream os;
  os << "graph linking {\n";
  os << "  // word: " << serialize_word(g.diagram().word()) << " on " << g.diagram().word().strands()
     << " strands\n";
  os << "  // sign convention: " << to_string(g.convention()) << '\n';
  for (std::size_t k = 0; k < g.regions().size(); ++k) {
    const auto& r = g.regions()[k];
    os << "  // region " << k + 1 << ": sign " << (r.sign > 0 ? "+1" : "-1") << ", cycle";
    for (int v : r.vertices) os << " s" << v + 1;
    os << '\n';
  }
  for (const auto& b : g.diagram().bricks()) {
    const Point p = g.position(b.id);
    os << "  s" << b.id + 1 << " [label=\"s" << b.id + 1 << "\", pos=\"" << num(p.x) << ','
       << num(p.y) << "!\"];\n";
  }
  for (const auto& e : g.edges()) {
    os << "  s" << e.a + 1 << " -- s" << e.b + 1 << " [kind="
       << (e.kind == EdgeKind::Vertical ? "vertical" : "lateral") << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string render(const LinkingGraph& g, RenderWhat what, RenderFormat format) {
  return format == RenderFormat::Svg ? render_svg(g, what) : render_dot(g);
}

nlohmann::json word_json(const BraidWord& w) {
  return {{"strands", w.strands()}, {"letters", w.letters()}};
}

nlohmann::json bricks_json(const BrickDiagram& d) {
  nlohmann::json bricks = nlohmann::json::array();
  for (const auto& b : d.bricks()) {
    bricks.push_back({{"id", b.id + 1}, {"column", b.column}, {"lo", b.lo + 1}, {"hi", b.hi + 1}});
  }
  return {{"word", word_json(d.word())}, {"bricks", std::move(bricks)}};
}

nlohmann::json graph_json(const LinkingGraph& g) {
  nlohmann::json vertices = nlohmann::json::array(), edges = nlohmann::json::array(),
                 regions = nlohmann::json::array();
  for (const auto& b : g.diagram().bricks()) {
    const Point p = g.position(b.id);
    vertices.push_back({{"id", b.id + 1},
                        {"column", b.column},
                        {"lo", b.lo + 1},
                        {"hi", b.hi + 1},
                        {"x", p.x},
                        {"y", p.y}});
  }
  for (const auto& e : g.edges()) {
    edges.push_back({{"a", e.a + 1},
                     {"b", e.b + 1},
                     {"kind", e.kind == EdgeKind::Vertical ? "vertical" : "lateral"}});
  }
  for (const auto& r : g.regions()) {
    std::vector<int> cycle;
    for (int v : r.vertices) cycle.push_back(v + 1);
    regions.push_back({{"sign", r.sign},
                       {"cycle", cycle},
                       {"anchor_column", r.anchor_column},
                       {"side", r.side == Side::Right ? "right" : "left"}});
  }
  return {{"word", word_json(g.diagram().word())},
          {"sign_convention", std::string(to_string(g.convention()))},
          {"vertices", std::move(vertices)},
          {"edges", std::move(edges)},
          {"regions", std::move(regions)}};
}

nlohmann::json normal_form_json(const NormalForm& nf) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : nf.factors) {
    std::vector<int> perm;
    for (auto x : f.perm()) perm.push_back(x + 1);
    factors.push_back(perm);
  }
  return {{"strands", nf.strands}, {"k", nf.delta_power}, {"factors", std::move(factors)}};
}

nlohmann::json abelianization_json(const Abelianization& a) {
  return {{"invariant_factors", a.invariant_factors},
          {"rank", a.rank()},
          {"group", a.to_string()}};
}

nlohmann::json moves_json(const std::vector<WordMove>& moves) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& m : moves) out.push_back(format_move(m));
  return out;
}

nlohmann::json map_report_json(const MapReport& r) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : r.violations) {
    violations.push_back(
        {{"check", v.check}, {"target", v.target}, {"index", v.index + 1}, {"detail", v.detail}});
  }
  return {{"status", r.consistent() ? "consistent" : "inconsistent"},
          {"targets", r.targets},
          {"source_homs", r.source_homs},
          {"target_homs", r.target_homs},
          {"violation_count", r.violation_count},
          {"violations", std::move(violations)}};
}

nlohmann::json generator_map_json(const GeneratorMap& m) {
  nlohmann::json images = nlohmann::json::array(), inverse_images = nlohmann::json::array();
  for (const auto& w : m.images) images.push_back(w.to_string());
  for (const auto& w : m.inverse_images) inverse_images.push_back(w.to_string());
  return {{"source", word_json(m.source_word)},
          {"target", word_json(m.target_word)},
          {"images", std::move(images)},
          {"inverse_images", std::move(inverse_images)}};
}

}  // namespace braidforge
