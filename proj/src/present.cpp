#include "braidforge/present.hpp"

#include <sstream>

#include "braidforge/error.hpp"
#include "braidforge/render.hpp"

namespace braidforge {

std::string_view to_string(RelatorKind kind) {
  switch (kind) {
    case RelatorKind::Braid: return "braid";
    case RelatorKind::Comm: return "comm";
    case RelatorKind::Cycle: return "cycle";
  }
  return "?";
}

Relator Relator::make(RelatorKind kind, GroupWord lhs, GroupWord rhs, std::vector<int> bricks,
                      int region) {
  Relator r;
  r.kind = kind;
  r.word = (lhs * rhs.inverse()).reduced();
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.bricks = std::move(bricks);
  r.region = region;
  return r;
}

Presentation::Presentation(int generators, std::vector<Relator> relators)
    : generators_(generators), relators_(std::move(relators)) {
  for (const auto& r : relators_) {
    if (r.word.max_generator() > generators_) {
      throw Error("relator uses a generator beyond s" + std::to_string(generators_));
    }
  }
}

std::size_t Presentation::count(RelatorKind kind) const {
  std::size_t n = 0;
  for (const auto& r : relators_) n += r.kind == kind;
  return n;
}

std::size_t Presentation::cycle_relator_index(int region) const {
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    if (relators_[i].kind == RelatorKind::Cycle && relators_[i].region == region) return i;
  }
  throw Error("no region " + std::to_string(region) + " in presentation");
}

Presentation Presentation::with_relator(std::size_t index, Relator r) const {
  auto rels = relators_;
  rels.at(index) = std::move(r);
  return Presentation(generators_, std::move(rels));
}

namespace {

int gen(int brick) { return brick + 1; }

}  // namespace

Relator cycle_relator(const std::vector<int>& c, int region) {
  const std::size_t n = c.size();
  if (n < 3) throw Error("a region needs at least three vertices");
  // c[0] is i_1, c[n-1] is i_n.
  GroupWord lhs, rhs;
  std::vector<int> l, r;
  for (std::size_t k = n; k >= 1; --k) l.push_back(gen(c[k - 1]));
  for (std::size_t k = n; k >= 3; --k) l.push_back(gen(c[k - 1]));
  for (std::size_t k = n - 1; k >= 1; --k) r.push_back(gen(c[k - 1]));
  for (std::size_t k = n; k >= 2; --k) r.push_back(gen(c[k - 1]));
  return Relator::make(RelatorKind::Cycle, GroupWord(std::move(l)), GroupWord(std::move(r)), c,
                       region);
}

GroupWord cycle_commutator(const std::vector<int>& c) {
  const std::size_t n = c.size();
  GroupWord conj;
  for (std::size_t k = n; k >= 3; --k) conj *= GroupWord::generator(gen(c[k - 1]));
  GroupWord x = conj * GroupWord::generator(gen(c[1])) * conj.inverse();
  GroupWord a = GroupWord::generator(gen(c[0]));
  return (a * x * a.inverse() * x.inverse()).reduced();
}

Presentation presentation_of(const LinkingGraph& g) {
  const int k = static_cast<int>(g.vertex_count());
  std::vector<Relator> rels;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const GroupWord si = GroupWord::generator(gen(i)), sj = GroupWord::generator(gen(j));
      if (g.linked(i, j)) {
        rels.push_back(Relator::make(RelatorKind::Braid, si * sj * si, sj * si * sj, {i, j}));
      } else {
        rels.push_back(Relator::make(RelatorKind::Comm, si * sj, sj * si, {i, j}));
      }
    }
  }
  for (std::size_t r = 0; r < g.regions().size(); ++r) {
    rels.push_back(cycle_relator(g.regions()[r].vertices, static_cast<int>(r)));
  }
  return Presentation(k, std::move(rels));
}

Presentation presentation_of(const BraidWord& w, SignConvention convention) {
  return presentation_of(build_graph(w, convention));
}

namespace {

std::vector<int> rotated(std::vector<int> c, int shift) {
  const int n = static_cast<int>(c.size());
  const int s = ((shift % n) + n) % n;
  std::rotate(c.begin(), c.begin() + s, c.end());
  return c;
}

}  // namespace

GroupWord cycle_relator_shift(const Presentation& p, int region, int shift) {
  const auto& r = p.relators()[p.cycle_relator_index(region)];
  return cycle_relator(rotated(r.bricks, shift), region).word;
}

Presentation with_cycle_shift(const Presentation& p, int region, int shift) {
  const std::size_t idx = p.cycle_relator_index(region);
  return p.with_relator(idx, cycle_relator(rotated(p.relators()[idx].bricks, shift), region));
}

PresentationFormat parse_presentation_format(std::string_view text) {
  if (text == "json") return PresentationFormat::Json;
  if (text == "gap-style" || text == "gap") return PresentationFormat::Gap;
  if (text == "plain") return PresentationFormat::Plain;
  throw Error("unknown presentation format \"" + std::string(text) + "\"");
}

namespace {

std::string gap_word(const GroupWord& w) {
  if (w.empty()) return "One(F)";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << '*';
    const int x = w.letters()[i];
    os << "F." << std::abs(x);
    if (x < 0) os << "^-1";
  }
  return os.str();
}

}  // namespace

nlohmann::json presentation_json(const Presentation& p) {
  nlohmann::json rels = nlohmann::json::array();
  for (const auto& r : p.relators()) {
    nlohmann::json j;
    j["kind"] = to_string(r.kind);
    j["lhs"] = r.lhs.letters();
    j["rhs"] = r.rhs.letters();
    j["word"] = r.word.letters();
    std::vector<int> gens;
    for (int b : r.bricks) gens.push_back(b + 1);
    j[r.kind == RelatorKind::Cycle ? "cycle" : "pair"] = gens;
    rels.push_back(std::move(j));
  }
  return {{"generators", p.generators()}, {"relators", std::move(rels)}};
}

std::string serialize(const Presentation& p, PresentationFormat format) {
  std::ostringstream os;
  switch (format) {
    case PresentationFormat::Json:
      os << presentation_json(p).dump(2) << '\n';
      break;
    case PresentationFormat::Gap: {
      os << "F := FreeGroup(" << p.generators() << ");;\n";
      os << "rels := [";
      for (std::size_t i = 0; i < p.relators().size(); ++i) {
        os << (i ? ",\n  " : "") << gap_word(p.relators()[i].word);
      }
      os << "];;\n";
      os << "G := F / rels;;\n";
      break;
    }
    case PresentationFormat::Plain: {
      os << "⟨";
      for (int g = 1; g <= p.generators(); ++g) os << (g > 1 ? "," : "") << 's' << g;
      os << " | ";
      for (std::size_t i = 0; i < p.relators().size(); ++i) {
        const auto& r = p.relators()[i];
        os << (i ? ", " : "") << r.lhs.to_string() << " = " << r.rhs.to_string();
      }
      os << "⟩";
      break;
    }
  }
  return os.str();
}

}  // namespace braidforge
