#include "braidforge/brick.hpp"

namespace braidforge {

BrickDiagram::BrickDiagram(BraidWord word) : word_(std::move(word)) {
  for (int c = 1; c < word_.strands(); ++c) {
    bool open = false;
    std::size_t last = 0;
    for (std::size_t p = 0; p < word_.size(); ++p) {
      if (word_[p] != c) continue;
      if (open) {
        bricks_.push_back({static_cast<int>(bricks_.size()), c, last, p});
      }
      open = true;
      last = p;
    }
  }
}

std::vector<int> BrickDiagram::column(int c) const {
  std::vector<int> ids;
  for (const auto& b : bricks_) {
    if (b.column == c) ids.push_back(b.id);
  }
  return ids;
}

BrickDiagram build_bricks(const BraidWord& w) { return BrickDiagram(w); }

std::size_t brick_count(const BraidWord& w) {
  std::size_t n = 0;
  for (int c = 1; c < w.strands(); ++c) {
    const std::size_t k = w.occurrences(c);
    if (k > 1) n += k - 1;
  }
  return n;
}

}  // namespace braidforge
