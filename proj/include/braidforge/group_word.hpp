#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace braidforge {

// A word in a free group on generators s_1, ..., s_k. Letters are signed,
// one-based generator numbers: +g is s_g, -g is s_g^{-1}.
class GroupWord {
 public:
  GroupWord() = default;
  GroupWord(std::initializer_list<int> letters) : letters_(letters) {}
  explicit GroupWord(std::vector<int> letters) : letters_(std::move(letters)) {}

  static GroupWord generator(int g) { return GroupWord{g}; }

  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int max_generator() const;

  GroupWord inverse() const;
  GroupWord reduced() const;
  GroupWord& operator*=(const GroupWord& rhs);

  // Exponent sum per generator, indexed 0..k-1.
  std::vector<long long> exponent_sums(int k) const;

  // "s1 s2 s1^-1" style text; the empty word prints as "1".
  std::string to_string(const std::string& symbol = "s") const;

  friend bool operator==(const GroupWord&, const GroupWord&) = default;
  friend auto operator<=>(const GroupWord&, const GroupWord&) = default;

 private:
  std::vector<int> letters_;
};

GroupWord operator*(GroupWord lhs, const GroupWord& rhs);

// Replace every generator s_g by images[g-1] (and s_g^{-1} by its inverse),
// then freely reduce.
GroupWord substitute(const GroupWord& w, const std::vector<GroupWord>& images);

}  // namespace braidforge
