#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braidforge/word.hpp"

namespace braidforge {

// A permutation braid: the positive braid in which every pair of strands
// crosses at most once, determined by its permutation. perm[k] is the final
// position of the strand that starts at position k (zero-based).
class PermBraid {
 public:
  explicit PermBraid(std::vector<std::uint8_t> perm);

  static PermBraid identity(int strands);
  static PermBraid delta(int strands);
  static PermBraid generator(int strands, int index);
  // Every permutation braid on `strands` strands, identity first.
  static std::vector<PermBraid> all(int strands);

  int strands() const { return static_cast<int>(perm_.size()); }
  const std::vector<std::uint8_t>& perm() const { return perm_; }
  bool is_identity() const;
  bool is_delta() const;
  std::size_t length() const;  // number of crossings

  // Generator indices i (1-based) with s_i a left / right divisor.
  std::vector<int> starting_set() const;
  std::vector<int> finishing_set() const;
  bool starts_with(int i) const;
  bool finishes_with(int i) const;

  PermBraid times_generator(int i) const;    // this * s_i, requires !finishes_with(i)
  PermBraid without_first(int i) const;      // s_i^{-1} * this, requires starts_with(i)
  PermBraid flipped() const;                 // Delta * this * Delta^{-1}
  PermBraid complement() const;              // this^{-1} * Delta
  PermBraid left_complement() const;         // Delta * this^{-1}

  // Positive word, greedily peeling the smallest starting generator.
  std::vector<int> word() const;

  friend bool operator==(const PermBraid&, const PermBraid&) = default;
  friend auto operator<=>(const PermBraid&, const PermBraid&) = default;

 private:
  std::vector<std::uint8_t> perm_;
};

// Left normal form Delta^k p_1 ... p_l: factors are neither the identity
// nor Delta, and every adjacent pair is left-weighted.
struct NormalForm {
  int strands = 2;
  int delta_power = 0;
  std::vector<PermBraid> factors;

  int inf() const { return delta_power; }
  int sup() const { return delta_power + static_cast<int>(factors.size()); }
  std::size_t canonical_length() const { return factors.size(); }

  // Positive word for Delta^k p_1 ... p_l; requires delta_power >= 0.
  BraidWord to_word() const;
  std::string to_string() const;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
  friend auto operator<=>(const NormalForm&, const NormalForm&) = default;
};

// Normal form of Delta^delta_power * f_1 * ... * f_m.
NormalForm normalize(int strands, int delta_power, const std::vector<PermBraid>& factors);

bool left_weighted(const PermBraid& a, const PermBraid& b);

NormalForm normal_form(const BraidWord& w);
// Throws Error on a strand mismatch.
bool words_equal_as_braids(const BraidWord& a, const BraidWord& b);

// x^{-1} nf x for a permutation braid x, and x nf x^{-1}.
NormalForm conjugate(const NormalForm& nf, const PermBraid& x);
NormalForm conjugate_inverse(const NormalForm& nf, const PermBraid& x);

// Conjugation by tau^k(p_1), resp. by p_l^{-1}. Identity when l = 0.
NormalForm cycling(const NormalForm& nf);
NormalForm decycling(const NormalForm& nf);
// The conjugating element of one cycling step: tau^k(p_1).
PermBraid cycling_conjugator(const NormalForm& nf);

struct GarsideCaps {
  std::size_t max_summit_set = 100000;
  // 0: (word length + 2) * strands^2
  std::size_t max_cycling = 0;
};

// One conjugation step between normal forms, as it acts on positive words:
// LeftRotation moves a left divisor x to the end (x^{-1} b x),
// RightRotation moves a right divisor x to the front (x b x^{-1}).
struct ConjugationStep {
  enum class Kind { LeftRotation, RightRotation } kind{};
  PermBraid by;
  NormalForm result;
};

// Iterated cycling then decycling until inf is maximal and sup minimal.
// Appends the conjugations used when `path` is given.
NormalForm to_super_summit(const NormalForm& nf, const GarsideCaps& caps = {},
                           std::vector<ConjugationStep>* path = nullptr);

struct SummitData {
  int summit_power = 0;
  std::vector<NormalForm> summit_set;  // sorted
};

SummitData summit(const NormalForm& nf, const GarsideCaps& caps = {});

bool are_conjugate(const BraidWord& a, const BraidWord& b, const GarsideCaps& caps = {});
int summit_power(const BraidWord& w, const GarsideCaps& caps = {});
bool contains_half_twist(const BraidWord& w, const GarsideCaps& caps = {});

// Shortest chain of conjugations by permutation braids x -> x' = s^{-1} x s
// inside the super summit set leading from `from` to `to`. Both must
// already be super summit elements of the same class.
std::optional<std::vector<ConjugationStep>> super_summit_path(const NormalForm& from,
                                                              const NormalForm& to,
                                                              const GarsideCaps& caps = {});

// --- realising conjugacy by word moves ---

struct MoveSequence {
  std::vector<WordMove> moves;
  // "procedure-found" for the constructive route, "search-found" for the
  // breadth-first fallback.
  std::string method;
};

struct MoveSequenceOptions {
  GarsideCaps caps;
  std::size_t max_moves = 2'000'000;
  // Fallback search is attempted for words up to this length when the
  // constructive route exceeds its budget.
  std::size_t search_max_length = 12;
  std::size_t search_max_states = 2'000'000;
  bool force_search = false;
};

// BraidRel / FarComm / ElemConj moves turning `a` into exactly `b`.
// Requires conjugate braids containing a half twist.
MoveSequence conjugacy_move_sequence(const BraidWord& a, const BraidWord& b,
                                     const MoveSequenceOptions& opts = {});

// BraidRel / FarComm moves turning `a` into `b`, for equal braids.
std::vector<WordMove> equality_move_sequence(const BraidWord& a, const BraidWord& b,
                                             std::size_t max_moves = 2'000'000);

// Bidirectional breadth-first search over BraidRel / FarComm (and ElemConj
// when `conjugations` is set) moves. Empty optional when not found within
// `max_states`.
std::optional<std::vector<WordMove>> search_move_sequence(const BraidWord& a, const BraidWord& b,
                                                          bool conjugations,
                                                          std::size_t max_states);

}  // namespace braidforge
