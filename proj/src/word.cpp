#include "braidforge/word.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include "braidforge/error.hpp"

namespace braidforge {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 2) {
    throw Error("a braid word needs at least 2 strands, got " + std::to_string(strands_));
  }
  for (int x : letters_) {
    if (x < 1 || x >= strands_) {
      throw Error("generator index " + std::to_string(x) + " out of range 1.." +
                  std::to_string(strands_ - 1));
    }
  }
}

std::size_t BraidWord::occurrences(int index) const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), index));
}

namespace {

bool is_separator(char c) { return std::isspace(static_cast<unsigned char>(c)) || c == ','; }

long read_number(std::string_view text, std::size_t& p) {
  std::size_t start = p;
  bool negative = false;
  if (p < text.size() && (text[p] == '-' || text[p] == '+')) {
    negative = text[p] == '-';
    ++p;
  }
  long value = 0;
  std::size_t digits = 0;
  while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) {
    value = value * 10 + (text[p] - '0');
    if (value > 1'000'000) throw Error("number too large in word text");
    ++p;
    ++digits;
  }
  if (digits == 0) {
    throw Error("expected a number at offset " + std::to_string(start) + " in \"" +
                std::string(text) + "\"");
  }
  return negative ? -value : value;
}

}  // namespace

BraidWord parse_word(std::string_view text, std::optional<int> strands) {
  std::vector<int> letters;
  std::size_t p = 0;
  while (p < text.size()) {
    if (is_separator(text[p])) {
      ++p;
      continue;
    }
    if (text[p] == 's' || text[p] == 'S') ++p;
    long index = read_number(text, p);
    if (index <= 0) {
      throw Error("generator indices must be positive, got " + std::to_string(index));
    }
    long power = 1;
    if (p < text.size() && text[p] == '^') {
      ++p;
      power = read_number(text, p);
      if (power < 0) throw Error("negative powers are not positive braid words");
    }
    letters.insert(letters.end(), static_cast<std::size_t>(power), static_cast<int>(index));
    if (p < text.size() && !is_separator(text[p]) && text[p] != 's' && text[p] != 'S') {
      throw Error(std::string("unexpected character '") + text[p] + "' in word text");
    }
  }
  if (!strands) {
    if (letters.empty()) throw Error("empty word needs an explicit strand count");
    strands = *std::max_element(letters.begin(), letters.end()) + 1;
  }
  return BraidWord(*strands, std::move(letters));
}

std::string serialize_word(const BraidWord& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << w[i];
  }
  return os.str();
}

BraidWord half_twist_word(int strands) {
  std::vector<int> letters;
  for (int top = strands - 1; top >= 1; --top) {
    for (int i = 1; i <= top; ++i) letters.push_back(i);
  }
  return BraidWord(strands, std::move(letters));
}

namespace {

constexpr std::array<std::string_view, 6> kMoveNames = {
    "BraidRel", "FarComm", "ElemConjLeft", "ElemConjRight", "MarkovStab", "MarkovDestab"};

}  // namespace

std::string_view to_string(MoveKind kind) { return kMoveNames[static_cast<std::size_t>(kind)]; }

MoveKind parse_move_kind(std::string_view name) {
  for (std::size_t i = 0; i < kMoveNames.size(); ++i) {
    if (kMoveNames[i] == name) return static_cast<MoveKind>(i);
  }
  throw Error("unknown move kind \"" + std::string(name) + "\"");
}

bool is_applicable(const BraidWord& w, const WordMove& m) {
  const auto& l = w.letters();
  const std::size_t n = l.size();
  const std::size_t p = m.position;
  switch (m.kind) {
    case MoveKind::BraidRel:
      return p + 2 < n && l[p] == l[p + 2] && std::abs(l[p] - l[p + 1]) == 1;
    case MoveKind::FarComm:
      return p + 1 < n && std::abs(l[p] - l[p + 1]) >= 2;
    case MoveKind::ElemConjLeft:
      return n > 0 && p == 0;
    case MoveKind::ElemConjRight:
      return n > 0 && p == n - 1;
    case MoveKind::MarkovStab:
      return p == n;
    case MoveKind::MarkovDestab:
      return w.strands() >= 3 && n > 0 && p == n - 1 && l[p] == w.strands() - 1 &&
             w.occurrences(w.strands() - 1) == 1;
  }
  return false;
}

BraidWord apply_move(const BraidWord& w, const WordMove& m) {
  if (!is_applicable(w, m)) {
    throw Error("move " + format_move(m) + " does not apply to \"" + serialize_word(w) + "\"");
  }
  std::vector<int> l = w.letters();
  const std::size_t p = m.position;
  int strands = w.strands();
  switch (m.kind) {
    case MoveKind::BraidRel: {
      const int a = l[p], b = l[p + 1];
      l[p] = b;
      l[p + 1] = a;
      l[p + 2] = b;
      break;
    }
    case MoveKind::FarComm:
      std::swap(l[p], l[p + 1]);
      break;
    case MoveKind::ElemConjLeft:
      std::rotate(l.begin(), l.begin() + 1, l.end());
      break;
    case MoveKind::ElemConjRight:
      std::rotate(l.rbegin(), l.rbegin() + 1, l.rend());
      break;
    case MoveKind::MarkovStab:
      l.push_back(strands);
      ++strands;
      break;
    case MoveKind::MarkovDestab:
      l.pop_back();
      --strands;
      break;
  }
  return BraidWord(strands, std::move(l));
}

BraidWord apply_moves(BraidWord w, const std::vector<WordMove>& moves) {
  for (const auto& m : moves) w = apply_move(w, m);
  return w;
}

WordMove inverse_move(const BraidWord& w, const WordMove& m) {
  if (!is_applicable(w, m)) {
    throw Error("move " + format_move(m) + " does not apply to \"" + serialize_word(w) + "\"");
  }
  switch (m.kind) {
    case MoveKind::BraidRel:
    case MoveKind::FarComm:
      return m;
    case MoveKind::ElemConjLeft:
      return {MoveKind::ElemConjRight, w.size() - 1};
    case MoveKind::ElemConjRight:
      return {MoveKind::ElemConjLeft, 0};
    case MoveKind::MarkovStab:
      return {MoveKind::MarkovDestab, w.size()};
    case MoveKind::MarkovDestab:
      return {MoveKind::MarkovStab, w.size() - 1};
  }
  return m;
}

std::vector<WordMove> enumerate_moves(const BraidWord& w) {
  std::vector<WordMove> out;
  for (std::size_t k = 0; k < kMoveNames.size(); ++k) {
    const auto kind = static_cast<MoveKind>(k);
    for (std::size_t p = 0; p <= w.size(); ++p) {
      WordMove m{kind, p};
      if (is_applicable(w, m)) out.push_back(m);
    }
  }
  return out;
}

std::string format_move(const WordMove& m) {
  std::string s(to_string(m.kind));
  if (m.kind == MoveKind::BraidRel || m.kind == MoveKind::FarComm) {
    s += "@" + std::to_string(m.position + 1);
  }
  return s;
}

WordMove parse_move(std::string_view text, const BraidWord& w) {
  const auto at = text.find('@');
  WordMove m{parse_move_kind(text.substr(0, at)), 0};
  if (at != std::string_view::npos) {
    std::size_t p = at + 1;
    long pos = read_number(text, p);
    if (p != text.size() || pos < 1) {
      throw Error("bad move position in \"" + std::string(text) + "\"");
    }
    m.position = static_cast<std::size_t>(pos - 1);
  } else {
    switch (m.kind) {
      case MoveKind::ElemConjLeft: m.position = 0; break;
      case MoveKind::ElemConjRight:
      case MoveKind::MarkovDestab: m.position = w.empty() ? 0 : w.size() - 1; break;
      case MoveKind::MarkovStab: m.position = w.size(); break;
      default:
        throw Error("move \"" + std::string(text) + "\" needs a position, e.g. BraidRel@1");
    }
  }
  return m;
}

std::vector<WordMove> parse_move_script(std::string_view text, const BraidWord& start) {
  std::vector<WordMove> moves;
  BraidWord w = start;
  std::size_t p = 0;
  while (p < text.size()) {
    if (is_separator(text[p])) {
      ++p;
      continue;
    }
    std::size_t end = p;
    while (end < text.size() && !is_separator(text[end])) ++end;
    WordMove m = parse_move(text.substr(p, end - p), w);
    w = apply_move(w, m);
    moves.push_back(m);
    p = end;
  }
  return moves;
}

}  // namespace braidforge
