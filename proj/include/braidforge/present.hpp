#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "braidforge/graph.hpp"
#include "braidforge/group_word.hpp"

namespace braidforge {

enum class RelatorKind { Braid, Comm, Cycle };

std::string_view to_string(RelatorKind kind);

// One defining relation lhs = rhs. `word` is lhs * rhs^{-1}, freely reduced.
// `bricks` records what produced it: the pair of brick ids for braid and
// commutation relators, the region's cyclic vertex tuple for cycle relators.
struct Relator {
  RelatorKind kind{};
  GroupWord lhs;
  GroupWord rhs;
  GroupWord word;
  std::vector<int> bricks;
  int region = -1;

  static Relator make(RelatorKind kind, GroupWord lhs, GroupWord rhs, std::vector<int> bricks,
                      int region = -1);
};

// Generators s_1..s_k correspond to bricks 0..k-1 in canonical order.
class Presentation {
 public:
  Presentation() = default;
  Presentation(int generators, std::vector<Relator> relators);

  int generators() const { return generators_; }
  const std::vector<Relator>& relators() const { return relators_; }
  std::size_t count(RelatorKind kind) const;
  std::size_t region_count() const { return count(RelatorKind::Cycle); }

  // Index into relators() of the cycle relator of region `region`.
  std::size_t cycle_relator_index(int region) const;

  Presentation with_relator(std::size_t index, Relator r) const;

 private:
  int generators_ = 0;
  std::vector<Relator> relators_;
};

// Cycle relation for a cyclic tuple (i_1, ..., i_n) of zero-based brick ids:
//   s_{i_n} ... s_{i_1} s_{i_n} ... s_{i_3} = s_{i_{n-1}} ... s_{i_1} s_{i_n} ... s_{i_2}
Relator cycle_relator(const std::vector<int>& cycle, int region = -1);

// The equivalent commutator [s_{i_1}, s_{i_n} ... s_{i_3} s_{i_2} s_{i_3}^{-1} ... s_{i_n}^{-1}].
GroupWord cycle_commutator(const std::vector<int>& cycle);

Presentation presentation_of(const LinkingGraph& g);
Presentation presentation_of(const BraidWord& w, SignConvention convention = kDefaultSignConvention);

// The cycle relator of `region` with its tuple rotated by `shift` places:
// (i_{1+shift}, ..., i_n, i_1, ..., i_shift).
GroupWord cycle_relator_shift(const Presentation& p, int region, int shift);
Presentation with_cycle_shift(const Presentation& p, int region, int shift);

enum class PresentationFormat { Json, Gap, Plain };

PresentationFormat parse_presentation_format(std::string_view text);
std::string serialize(const Presentation& p, PresentationFormat format);

}  // namespace braidforge
