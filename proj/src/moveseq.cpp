#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>
#include <unordered_map>

#include "braidforge/error.hpp"
#include "braidforge/garside.hpp"

namespace braidforge {

namespace {

// Applies moves to a raw letter vector while recording them.
class Recorder {
 public:
  Recorder(std::vector<int> letters, std::size_t budget)
      : w_(std::move(letters)), budget_(budget) {}

  std::vector<int>& letters() { return w_; }
  std::vector<WordMove>& moves() { return moves_; }

  void far_comm(std::size_t p) {
    std::swap(w_[p], w_[p + 1]);
    record({MoveKind::FarComm, p});
  }
  void braid_rel(std::size_t p) {
    const int a = w_[p], b = w_[p + 1];
    w_[p] = b;
    w_[p + 1] = a;
    w_[p + 2] = b;
    record({MoveKind::BraidRel, p});
  }
  void conj_left() {
    std::rotate(w_.begin(), w_.begin() + 1, w_.end());
    record({MoveKind::ElemConjLeft, 0});
  }
  void conj_right() {
    std::rotate(w_.rbegin(), w_.rbegin() + 1, w_.rend());
    record({MoveKind::ElemConjRight, w_.size() - 1});
  }

  // Rewrites w[off..] so that w[off] == j; s_j must left-divide the suffix.
  void bring_front(std::size_t off, int j) {
    if (off >= w_.size()) throw InternalError("generator does not divide the suffix");
    const int a = w_[off];
    if (a == j) return;
    bring_front(off + 1, j);
    if (std::abs(a - j) >= 2) {
      far_comm(off);
    } else {
      bring_front(off + 2, a);
      braid_rel(off);
    }
  }

  // Rewrites w[..end) so that w[end-1] == j; s_j must right-divide the prefix.
  void bring_back(std::size_t end, int j) {
    if (end == 0) throw InternalError("generator does not divide the prefix");
    const int a = w_[end - 1];
    if (a == j) return;
    bring_back(end - 1, j);
    if (std::abs(a - j) >= 2) {
      far_comm(end - 2);
    } else {
      bring_back(end - 2, a);
      braid_rel(end - 3);
    }
  }

  // x^{-1} w x for a left divisor x of w.
  void rotate_left(const PermBraid& x) {
    const auto letters = x.word();
    for (std::size_t t = 0; t < letters.size(); ++t) bring_front(t, letters[t]);
    for (std::size_t t = 0; t < letters.size(); ++t) conj_left();
  }

  // x w x^{-1} for a right divisor x of w.
  void rotate_right(const PermBraid& x) {
    const auto letters = x.word();
    const std::size_t m = letters.size();
    for (std::size_t t = m; t-- > 0;) bring_back(w_.size() - (m - 1 - t), letters[t]);
    for (std::size_t t = 0; t < m; ++t) conj_right();
  }

  // BraidRel/FarComm moves to the word obtained by repeatedly pulling the
  // smallest starting generator to the front.
  void canonicalize(int strands) {
    for (std::size_t off = 0; off < w_.size(); ++off) {
      const BraidWord suffix(strands, std::vector<int>(w_.begin() + static_cast<long>(off), w_.end()));
      const NormalForm nf = normal_form(suffix);
      const int j = nf.delta_power > 0 ? 1 : nf.factors.front().starting_set().front();
      bring_front(off, j);
    }
  }

 private:
  void record(WordMove m) {
    if (moves_.size() >= budget_) {
      throw ResourceCapError("move sequence exceeds " + std::to_string(budget_) + " moves");
    }
    moves_.push_back(m);
  }

  std::vector<int> w_;
  std::size_t budget_;
  std::vector<WordMove> moves_;
};

// Moves taking the end word of `moves` (applied to `start`) back to `start`.
std::vector<WordMove> reversed(const BraidWord& start, const std::vector<WordMove>& moves) {
  std::vector<BraidWord> words{start};
  words.reserve(moves.size() + 1);
  for (const auto& m : moves) words.push_back(apply_move(words.back(), m));
  std::vector<WordMove> out;
  out.reserve(moves.size());
  for (std::size_t i = moves.size(); i-- > 0;) out.push_back(inverse_move(words[i], moves[i]));
  return out;
}

void verify(const BraidWord& a, const BraidWord& b, const std::vector<WordMove>& moves) {
  BraidWord w = a;
  for (const auto& m : moves) {
    if (!is_applicable(w, m)) throw InternalError("constructed move is not applicable");
    w = apply_move(w, m);
  }
  if (w != b) throw InternalError("constructed move sequence does not reach the target");
}

std::string key_of(const std::vector<int>& letters) {
  return std::string(letters.begin(), letters.end());
}

}  // namespace

std::vector<WordMove> equality_move_sequence(const BraidWord& a, const BraidWord& b,
                                             std::size_t max_moves) {
  if (a.strands() != b.strands()) throw Error("words live on different strand counts");
  if (!words_equal_as_braids(a, b)) throw Error("words are not equal as braids");
  Recorder ra(a.letters(), max_moves), rb(b.letters(), max_moves);
  ra.canonicalize(a.strands());
  rb.canonicalize(b.strands());
  if (ra.letters() != rb.letters()) throw InternalError("canonical words differ");
  auto moves = std::move(ra.moves());
  const auto back = reversed(b, rb.moves());
  moves.insert(moves.end(), back.begin(), back.end());
  verify(a, b, moves);
  return moves;
}

std::optional<std::vector<WordMove>> search_move_sequence(const BraidWord& a, const BraidWord& b,
                                                          bool conjugations,
                                                          std::size_t max_states) {
  if (a.strands() != b.strands()) throw Error("words live on different strand counts");
  if (a == b) return std::vector<WordMove>{};
  if (a.size() != b.size()) return std::nullopt;
  const int n = a.strands();

  struct Link {
    std::string parent;
    WordMove move;  // forward side: parent -> this; backward side: this -> parent
  };
  std::unordered_map<std::string, Link> fwd, bwd;
  fwd.emplace(key_of(a.letters()), Link{});
  bwd.emplace(key_of(b.letters()), Link{});
  std::deque<std::string> qf{key_of(a.letters())}, qb{key_of(b.letters())};

  auto allowed = [&](const WordMove& m) {
    return m.kind == MoveKind::BraidRel || m.kind == MoveKind::FarComm ||
           (conjugations && (m.kind == MoveKind::ElemConjLeft || m.kind == MoveKind::ElemConjRight));
  };
  auto to_word = [&](const std::string& k) {
    return BraidWord(n, std::vector<int>(k.begin(), k.end()));
  };
  auto build = [&](const std::string& meet) {
    std::vector<WordMove> out;
    for (std::string at = meet; at != key_of(a.letters());) {
      const auto& l = fwd.at(at);
      out.push_back(l.move);
      at = l.parent;
    }
    std::reverse(out.begin(), out.end());
    for (std::string at = meet; at != key_of(b.letters());) {
      const auto& l = bwd.at(at);
      out.push_back(l.move);
      at = l.parent;
    }
    return out;
  };

  while (!qf.empty() && !qb.empty()) {
    if (fwd.size() + bwd.size() > max_states) return std::nullopt;
    const bool forward = qf.size() <= qb.size();
    auto& queue = forward ? qf : qb;
    auto& mine = forward ? fwd : bwd;
    auto& other = forward ? bwd : fwd;
    for (std::size_t level = queue.size(); level-- > 0;) {
      const std::string cur = queue.front();
      queue.pop_front();
      const BraidWord w = to_word(cur);
      for (const auto& m : enumerate_moves(w)) {
        if (!allowed(m)) continue;
        const BraidWord next = apply_move(w, m);
        const std::string k = key_of(next.letters());
        if (mine.count(k)) continue;
        mine.emplace(k, Link{cur, forward ? m : inverse_move(w, m)});
        if (other.count(k)) {
          auto moves = build(k);
          verify(a, b, moves);
          return moves;
        }
        queue.push_back(k);
      }
    }
  }
  return std::nullopt;
}

MoveSequence conjugacy_move_sequence(const BraidWord& a, const BraidWord& b,
                                     const MoveSequenceOptions& opts) {
  if (a.strands() != b.strands()) throw Error("words live on different strand counts");
  if (a.size() != b.size()) throw Error("words are not conjugate");
  if (a == b) return {{}, "procedure-found"};

  if (!opts.force_search) {
    std::vector<ConjugationStep> pa, pb;
    const NormalForm sa = to_super_summit(normal_form(a), opts.caps, &pa);
    const NormalForm sb = to_super_summit(normal_form(b), opts.caps, &pb);
    if (sa.inf() != sb.inf() || sa.sup() != sb.sup()) throw Error("words are not conjugate");
    if (sa.inf() < 1) throw Error("conjugacy moves need a half twist in the summit");
    const auto middle = super_summit_path(sa, sb, opts.caps);
    if (!middle) throw Error("words are not conjugate");

    try {
      Recorder r(a.letters(), opts.max_moves);
      for (const auto& s : pa) {
        if (s.kind == ConjugationStep::Kind::LeftRotation) {
          r.rotate_left(s.by);
        } else {
          r.rotate_right(s.by);
        }
      }
      for (const auto& s : *middle) r.rotate_left(s.by);
      // Undo b's steps in reverse: a left rotation becomes a right one.
      for (std::size_t i = pb.size(); i-- > 0;) {
        if (pb[i].kind == ConjugationStep::Kind::LeftRotation) {
          r.rotate_right(pb[i].by);
        } else {
          r.rotate_left(pb[i].by);
        }
      }
      const BraidWord reached(a.strands(), r.letters());
      auto moves = std::move(r.moves());
      const auto tail = equality_move_sequence(reached, b, opts.max_moves);
      moves.insert(moves.end(), tail.begin(), tail.end());
      if (moves.size() > opts.max_moves) {
        throw ResourceCapError("move sequence exceeds " + std::to_string(opts.max_moves) +
                               " moves");
      }
      verify(a, b, moves);
      return {std::move(moves), "procedure-found"};
    } catch (const ResourceCapError&) {
      if (a.size() > opts.search_max_length) throw;
    }
  }

  auto found = search_move_sequence(a, b, true, opts.search_max_states);
  if (!found) {
    throw ResourceCapError("no move sequence found within " +
                           std::to_string(opts.search_max_states) + " states");
  }
  return {std::move(*found), "search-found"};
}

}  // namespace braidforge
