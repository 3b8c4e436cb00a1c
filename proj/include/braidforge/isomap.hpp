#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "braidforge/invariants.hpp"
#include "braidforge/present.hpp"
#include "braidforge/word.hpp"

namespace braidforge {

// A homomorphism between two presentations given on generators, together
// with a proposed inverse. images[g] is a word in the target generators
// for source generator g+1; inverse_images the other way round.
struct GeneratorMap {
  BraidWord source_word;
  BraidWord target_word;
  Presentation source;
  Presentation target;
  std::vector<GroupWord> images;
  std::vector<GroupWord> inverse_images;

  // Throws Error if a word uses a generator outside its presentation.
  void validate() const;
};

GeneratorMap identity_map(const BraidWord& w, SignConvention convention = kDefaultSignConvention);
GeneratorMap inverse(const GeneratorMap& m);
// second after first; first.target must be second.source.
GeneratorMap compose(const GeneratorMap& first, const GeneratorMap& second);

enum class ConjugationEnd { Left, Right };

// Map for the elementary conjugation at one end of `w`: Right sends
// w = omega s_i to s_i omega, Left sends s_i omega to omega s_i.
GeneratorMap conjugation_map(const BraidWord& w, ConjugationEnd end,
                             SignConvention convention = kDefaultSignConvention);

// Map for the braid relation whose triple starts at `position` (zero-based).
// A triple below the top is first rotated to the top by elementary
// conjugations and rotated back afterwards.
GeneratorMap braid_relation_map(const BraidWord& w, std::size_t position,
                                SignConvention convention = kDefaultSignConvention);

GeneratorMap map_for_move(const BraidWord& w, const WordMove& m,
                          SignConvention convention = kDefaultSignConvention);
GeneratorMap map_for_moves(const BraidWord& w, const std::vector<WordMove>& moves,
                           SignConvention convention = kDefaultSignConvention);

struct MapViolation {
  std::string check;   // forward, inverse, abelian-forward, abelian-inverse, roundtrip-source, roundtrip-target
  std::string target;  // finite target name, empty for the abelian checks
  std::size_t index = 0;  // relator index, or generator index for round trips
  std::string detail;
};

struct MapReport {
  std::vector<std::string> targets;
  std::size_t source_homs = 0;
  std::size_t target_homs = 0;
  std::size_t violation_count = 0;
  std::vector<MapViolation> violations;  // first few only

  bool consistent() const { return violation_count == 0; }
};

struct CheckOptions {
  int generator_cap = 0;
  std::size_t max_listed = 20;
};

// Necessary conditions for the map to be an isomorphism: relator images are
// trivial under every homomorphism of the other side into each target and
// in its abelianization, and both round trips fix the generators in every
// enumerated quotient.
MapReport check_map(const GeneratorMap& m, const std::vector<FiniteTarget>& targets,
                    const CheckOptions& opts = {});

}  // namespace braidforge
