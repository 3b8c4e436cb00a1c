#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace braidforge {

// A positive braid word on `strands` strands. Letters are generator indices
// 1..strands-1, stored left to right as written; the end of the sequence is
// the top of the braid.
class BraidWord {
 public:
  BraidWord() : BraidWord(2) {}
  explicit BraidWord(int strands, std::vector<int> letters = {});

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t p) const { return letters_[p]; }

  std::size_t occurrences(int index) const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
  friend auto operator<=>(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

// Text form: indices separated by whitespace or commas ("1 2 1", "1,2,1"),
// or generator tokens "s1 s3 s1", optionally with powers "s1^4". Without an
// explicit strand count the count is max index + 1; an empty text then has
// no strand count and is rejected.
BraidWord parse_word(std::string_view text, std::optional<int> strands = {});
std::string serialize_word(const BraidWord& w);

// The half twist (s1 ... s_{n-1})(s1 ... s_{n-2}) ... s1.
BraidWord half_twist_word(int strands);

enum class MoveKind {
  BraidRel,
  FarComm,
  ElemConjLeft,
  ElemConjRight,
  MarkovStab,
  MarkovDestab,
};

std::string_view to_string(MoveKind kind);
MoveKind parse_move_kind(std::string_view name);

// A move on a word. `position` is a zero-based letter index:
//   BraidRel      first letter of the triple (i, i+-1, i)
//   FarComm       first letter of the distant pair
//   ElemConjLeft  0: s_i w -> w s_i
//   ElemConjRight size-1: w s_i -> s_i w
//   MarkovStab    size: w on N strands -> w s_N on N+1 strands
//   MarkovDestab  size-1: drops a trailing s_{N-1} that is the only one
struct WordMove {
  MoveKind kind{};
  std::size_t position = 0;

  friend bool operator==(const WordMove&, const WordMove&) = default;
};

bool is_applicable(const BraidWord& w, const WordMove& m);
BraidWord apply_move(const BraidWord& w, const WordMove& m);
BraidWord apply_moves(BraidWord w, const std::vector<WordMove>& moves);

// The move that undoes `m` on apply_move(w, m).
WordMove inverse_move(const BraidWord& w, const WordMove& m);

// Every applicable move, ordered by kind then position.
std::vector<WordMove> enumerate_moves(const BraidWord& w);

// Move text: "BraidRel@3" with a one-based position, or a bare kind name
// for the moves whose position is determined by the word.
std::string format_move(const WordMove& m);
WordMove parse_move(std::string_view text, const BraidWord& w);
// Parses a script of moves separated by whitespace/commas, validating each
// against the word it is applied to.
std::vector<WordMove> parse_move_script(std::string_view text, const BraidWord& start);

}  // namespace braidforge
