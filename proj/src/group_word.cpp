#include "braidforge/group_word.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace braidforge {

int GroupWord::max_generator() const {
  int m = 0;
  for (int x : letters_) m = std::max(m, std::abs(x));
  return m;
}

GroupWord GroupWord::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& x : out) x = -x;
  return GroupWord(std::move(out));
}

GroupWord GroupWord::reduced() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (int x : letters_) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return GroupWord(std::move(out));
}

GroupWord& GroupWord::operator*=(const GroupWord& rhs) {
  for (int x : rhs.letters_) {
    if (!letters_.empty() && letters_.back() == -x) {
      letters_.pop_back();
    } else {
      letters_.push_back(x);
    }
  }
  return *this;
}

GroupWord operator*(GroupWord lhs, const GroupWord& rhs) {
  lhs *= rhs;
  return lhs;
}

std::vector<long long> GroupWord::exponent_sums(int k) const {
  std::vector<long long> v(static_cast<std::size_t>(k), 0);
  for (int x : letters_) {
    v[static_cast<std::size_t>(std::abs(x) - 1)] += x > 0 ? 1 : -1;
  }
  return v;
}

std::string GroupWord::to_string(const std::string& symbol) const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ' ';
    os << symbol << std::abs(letters_[i]);
    if (letters_[i] < 0) os << "^-1";
  }
  return os.str();
}

GroupWord substitute(const GroupWord& w, const std::vector<GroupWord>& images) {
  GroupWord out;
  for (int x : w.letters()) {
    const GroupWord& img = images.at(static_cast<std::size_t>(std::abs(x) - 1));
    out *= x > 0 ? img : img.inverse();
  }
  return out;
}

}  // namespace braidforge
