#pragma once

#include <cstddef>
#include <vector>

#include "braidforge/word.hpp"

namespace braidforge {

// The rectangle between two consecutive occurrences of s_column in a word.
// `lo` and `hi` are zero-based word positions of the bounding crossings.
struct Brick {
  int id = 0;
  int column = 0;
  std::size_t lo = 0;
  std::size_t hi = 0;

  double mid() const { return (static_cast<double>(lo) + static_cast<double>(hi)) / 2.0; }

  friend bool operator==(const Brick&, const Brick&) = default;
};

// Bricks in canonical order: column ascending, bottom to top within a
// column. Brick ids equal their index in this order.
class BrickDiagram {
 public:
  explicit BrickDiagram(BraidWord word);

  const BraidWord& word() const { return word_; }
  const std::vector<Brick>& bricks() const { return bricks_; }
  std::size_t size() const { return bricks_.size(); }
  const Brick& operator[](std::size_t id) const { return bricks_[id]; }

  // Ids of the bricks in one column, bottom to top.
  std::vector<int> column(int c) const;

 private:
  BraidWord word_;
  std::vector<Brick> bricks_;
};

BrickDiagram build_bricks(const BraidWord& w);
std::size_t brick_count(const BraidWord& w);

}  // namespace braidforge
