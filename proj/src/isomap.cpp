#include "braidforge/isomap.hpp"

#include <map>
#include <tuple>

#include "braidforge/brick.hpp"
#include "braidforge/error.hpp"

namespace braidforge {

namespace {

using Footprint = std::tuple<int, std::size_t, std::size_t>;

std::map<Footprint, int> footprints(const BrickDiagram& d) {
  std::map<Footprint, int> out;
  for (const auto& b : d.bricks()) out.emplace(Footprint{b.column, b.lo, b.hi}, b.id);
  return out;
}

int locate(const std::map<Footprint, int>& index, int column, std::size_t lo, std::size_t hi) {
  const auto it = index.find({column, lo, hi});
  if (it == index.end()) throw InternalError("no corresponding brick across the move");
  return it->second;
}

GroupWord gen(int id) { return GroupWord::generator(id + 1); }

// Source and target presentations with unset images of the right sizes.
GeneratorMap skeleton(const BraidWord& from, const BraidWord& to, SignConvention convention) {
  GeneratorMap m;
  m.source_word = from;
  m.target_word = to;
  m.source = presentation_of(from, convention);
  m.target = presentation_of(to, convention);
  m.images.resize(static_cast<std::size_t>(m.source.generators()));
  m.inverse_images.resize(static_cast<std::size_t>(m.target.generators()));
  return m;
}

void pair_up(GeneratorMap& m, int src, int dst) {
  m.images[static_cast<std::size_t>(src)] = gen(dst);
  m.inverse_images[static_cast<std::size_t>(dst)] = gen(src);
}

// omega s_i -> s_i omega.
GeneratorMap right_conjugation(const BraidWord& w, SignConvention convention) {
  if (w.empty()) throw Error("elementary conjugation needs a nonempty word");
  const std::size_t last = w.size() - 1;
  const BraidWord to = apply_move(w, {MoveKind::ElemConjRight, last});
  GeneratorMap m = skeleton(w, to, convention);
  const BrickDiagram src(w), dst(to);
  const auto index = footprints(dst);
  const int column = w[last];
  const auto bricks = src.column(column);

  for (const auto& b : src.bricks()) {
    if (b.column == column && b.hi == last) continue;
    pair_up(m, b.id, locate(index, b.column, b.lo + 1, b.hi + 1));
  }
  if (!bricks.empty()) {
    // The top brick n leaves; a new bottom brick n' appears.
    const int top = bricks.back();
    const int fresh = dst.column(column).front();
    GroupWord image, preimage;
    for (std::size_t k = bricks.size() - 1; k-- > 0;) image *= m.images[static_cast<std::size_t>(bricks[k])];
    const GroupWord prefix = image;
    image *= gen(fresh);
    image *= prefix.inverse();
    m.images[static_cast<std::size_t>(top)] = image;

    GroupWord down;  // s_{n-1} ... s_1 in source generators
    for (std::size_t k = bricks.size() - 1; k-- > 0;) down *= gen(bricks[k]);
    preimage = down.inverse();
    preimage *= gen(top);
    preimage *= down;
    m.inverse_images[static_cast<std::size_t>(fresh)] = preimage;
  }
  m.validate();
  return m;
}

// omega s_i s_{i+1} s_i -> omega s_{i+1} s_i s_{i+1}, triple at the top.
GeneratorMap top_braid_relation(const BraidWord& w, SignConvention convention) {
  const std::size_t p = w.size() - 3;
  const int i = w[p];
  const BraidWord to = apply_move(w, {MoveKind::BraidRel, p});
  GeneratorMap m = skeleton(w, to, convention);
  const BrickDiagram src(w), dst(to);
  const auto index = footprints(dst);
  const auto column = src.column(i);
  const int top = column.back();  // brick n = [p, p+2]
  const int below = column.size() >= 2 ? column[column.size() - 2] : -1;

  for (const auto& b : src.bricks()) {
    int target = 0;
    if (b.id == top) {
      target = locate(index, i + 1, p, p + 2);
    } else if (b.id == below) {
      target = locate(index, i, b.lo, p + 1);
    } else if (b.column == i + 1 && b.hi == p + 1) {
      target = locate(index, i + 1, b.lo, p);
    } else {
      target = locate(index, b.column, b.lo, b.hi);
    }
    pair_up(m, b.id, target);
  }
  if (below >= 0) {
    const GroupWord n = m.images[static_cast<std::size_t>(top)];
    const int primed = locate(index, i, src[static_cast<std::size_t>(below)].lo, p + 1);
    m.images[static_cast<std::size_t>(below)] = n.inverse() * gen(primed) * n;
    m.inverse_images[static_cast<std::size_t>(primed)] = gen(top) * gen(below) * gen(top).inverse();
  }
  m.validate();
  return m;
}

}  // namespace

void GeneratorMap::validate() const {
  auto check = [](const std::vector<GroupWord>& words, std::size_t expected, int limit) {
    if (words.size() != expected) throw Error("generator map has the wrong number of images");
    for (const auto& w : words) {
      if (w.max_generator() > limit) throw Error("generator map image uses an unknown generator");
    }
  };
  check(images, static_cast<std::size_t>(source.generators()), target.generators());
  check(inverse_images, static_cast<std::size_t>(target.generators()), source.generators());
}

GeneratorMap identity_map(const BraidWord& w, SignConvention convention) {
  GeneratorMap m = skeleton(w, w, convention);
  for (int g = 0; g < m.source.generators(); ++g) pair_up(m, g, g);
  return m;
}

GeneratorMap inverse(const GeneratorMap& m) {
  return {m.target_word, m.source_word, m.target, m.source, m.inverse_images, m.images};
}

GeneratorMap compose(const GeneratorMap& first, const GeneratorMap& second) {
  if (first.target.generators() != second.source.generators()) {
    throw Error("maps do not compose");
  }
  GeneratorMap m;
  m.source_word = first.source_word;
  m.target_word = second.target_word;
  m.source = first.source;
  m.target = second.target;
  for (const auto& w : first.images) m.images.push_back(substitute(w, second.images));
  for (const auto& w : second.inverse_images) {
    m.inverse_images.push_back(substitute(w, first.inverse_images));
  }
  return m;
}

GeneratorMap conjugation_map(const BraidWord& w, ConjugationEnd end, SignConvention convention) {
  if (end == ConjugationEnd::Right) return right_conjugation(w, convention);
  if (w.empty()) throw Error("elementary conjugation needs a nonempty word");
  const BraidWord rotated = apply_move(w, {MoveKind::ElemConjLeft, 0});
  return inverse(right_conjugation(rotated, convention));
}

GeneratorMap braid_relation_map(const BraidWord& w, std::size_t position, SignConvention convention) {
  const WordMove move{MoveKind::BraidRel, position};
  if (!is_applicable(w, move)) throw Error("no braid relation at this position");
  const std::size_t above = w.size() - (position + 3);

  GeneratorMap m = identity_map(w, convention);
  BraidWord cur = w;
  for (std::size_t k = 0; k < above; ++k) {
    m = compose(m, right_conjugation(cur, convention));
    cur = m.target_word;
  }
  const std::size_t top = cur.size() - 3;
  if (cur[top + 1] == cur[top] + 1) {
    m = compose(m, top_braid_relation(cur, convention));
  } else {
    const BraidWord flipped = apply_move(cur, {MoveKind::BraidRel, top});
    m = compose(m, inverse(top_braid_relation(flipped, convention)));
  }
  cur = m.target_word;
  for (std::size_t k = 0; k < above; ++k) {
    m = compose(m, conjugation_map(cur, ConjugationEnd::Left, convention));
    cur = m.target_word;
  }
  if (cur != apply_move(w, move)) throw InternalError("braid relation map ends at the wrong word");
  return m;
}

GeneratorMap map_for_move(const BraidWord& w, const WordMove& m, SignConvention convention) {
  if (!is_applicable(w, m)) throw Error("move " + format_move(m) + " does not apply");
  switch (m.kind) {
    case MoveKind::BraidRel:
      return braid_relation_map(w, m.position, convention);
    case MoveKind::ElemConjLeft:
      return conjugation_map(w, ConjugationEnd::Left, convention);
    case MoveKind::ElemConjRight:
      return conjugation_map(w, ConjugationEnd::Right, convention);
    case MoveKind::FarComm:
    case MoveKind::MarkovStab:
    case MoveKind::MarkovDestab: {
      // Bricks keep their canonical ids.
      GeneratorMap id = identity_map(w, convention);
      id.target_word = apply_move(w, m);
      id.target = presentation_of(id.target_word, convention);
      id.validate();
      return id;
    }
  }
  throw InternalError("unknown move kind");
}

GeneratorMap map_for_moves(const BraidWord& w, const std::vector<WordMove>& moves,
                           SignConvention convention) {
  GeneratorMap m = identity_map(w, convention);
  for (const auto& move : moves) m = compose(m, map_for_move(m.target_word, move, convention));
  return m;
}

namespace {

std::string describe(const Assignment& a) {
  std::string s = "[";
  for (std::size_t k = 0; k < a.size(); ++k) s += (k ? "," : "") + std::to_string(a[k]);
  return s + "]";
}

}  // namespace

MapReport check_map(const GeneratorMap& m, const std::vector<FiniteTarget>& targets,
                    const CheckOptions& opts) {
  m.validate();
  MapReport report;
  auto flag = [&](std::string check, std::string target, std::size_t index, std::string detail) {
    ++report.violation_count;
    if (report.violations.size() < opts.max_listed) {
      report.violations.push_back({std::move(check), std::move(target), index, std::move(detail)});
    }
  };

  std::vector<GroupWord> forward, backward, round_source, round_target;
  for (const auto& r : m.source.relators()) forward.push_back(substitute(r.word, m.images));
  for (const auto& r : m.target.relators()) backward.push_back(substitute(r.word, m.inverse_images));
  for (const auto& w : m.images) round_source.push_back(substitute(w, m.inverse_images));
  for (const auto& w : m.inverse_images) round_target.push_back(substitute(w, m.images));

  const RelationLattice source_lattice(m.source), target_lattice(m.target);
  for (std::size_t r = 0; r < forward.size(); ++r) {
    if (!target_lattice.trivial(forward[r])) flag("abelian-forward", "", r, forward[r].to_string());
  }
  for (std::size_t r = 0; r < backward.size(); ++r) {
    if (!source_lattice.trivial(backward[r])) flag("abelian-inverse", "", r, backward[r].to_string());
  }
  for (std::size_t g = 0; g < round_source.size(); ++g) {
    const GroupWord d = round_source[g] * gen(static_cast<int>(g)).inverse();
    if (!source_lattice.trivial(d)) flag("abelian-roundtrip-source", "", g, d.to_string());
  }
  for (std::size_t g = 0; g < round_target.size(); ++g) {
    const GroupWord d = round_target[g] * gen(static_cast<int>(g)).inverse();
    if (!target_lattice.trivial(d)) flag("abelian-roundtrip-target", "", g, d.to_string());
  }

  for (const auto& t : targets) {
    report.targets.push_back(t.name());
    for_each_hom(
        m.target, t,
        [&](const Assignment& h) {
          ++report.target_homs;
          for (std::size_t r = 0; r < forward.size(); ++r) {
            if (t.evaluate(forward[r], h) != t.identity()) flag("forward", t.name(), r, describe(h));
          }
          for (std::size_t g = 0; g < round_target.size(); ++g) {
            if (t.evaluate(round_target[g], h) != h[g]) flag("roundtrip-target", t.name(), g, describe(h));
          }
        },
        opts.generator_cap);
    for_each_hom(
        m.source, t,
        [&](const Assignment& h) {
          ++report.source_homs;
          for (std::size_t r = 0; r < backward.size(); ++r) {
            if (t.evaluate(backward[r], h) != t.identity()) flag("inverse", t.name(), r, describe(h));
          }
          for (std::size_t g = 0; g < round_source.size(); ++g) {
            if (t.evaluate(round_source[g], h) != h[g]) flag("roundtrip-source", t.name(), g, describe(h));
          }
        },
        opts.generator_cap);
  }
  return report;
}

}  // namespace braidforge
