#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "braidforge/error.hpp"
#include "braidforge/invariants.hpp"

namespace braidforge {

FiniteTarget::FiniteTarget(std::string name, std::size_t order, std::vector<Element> table)
    : name_(std::move(name)), order_(order), table_(std::move(table)), inverse_(order) {
  if (order_ == 0 || order_ > 4096) throw Error("target order must be in 1..4096");
  if (table_.size() != order_ * order_) throw Error("multiplication table has the wrong size");
  for (Element x : table_) {
    if (x >= order_) throw Error("multiplication table entry out of range");
  }
  for (std::size_t a = 0; a < order_; ++a) {
    const auto e = static_cast<Element>(a);
    if (mul(0, e) != e || mul(e, 0) != e) throw Error("element 0 is not the identity of " + name_);
  }
  for (std::size_t a = 0; a < order_; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < order_ && !found; ++b) {
      if (mul(static_cast<Element>(a), static_cast<Element>(b)) == 0) {
        if (mul(static_cast<Element>(b), static_cast<Element>(a)) != 0) break;
        inverse_[a] = static_cast<Element>(b);
        found = true;
      }
    }
    if (!found) throw Error("element " + std::to_string(a) + " of " + name_ + " has no inverse");
  }
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < order_; ++b) {
      const Element ab = table_[a * order_ + b];
      for (std::size_t c = 0; c < order_; ++c) {
        if (table_[ab * order_ + c] != table_[a * order_ + table_[b * order_ + c]]) {
          throw Error("multiplication table of " + name_ + " is not associative");
        }
      }
    }
  }
}

FiniteTarget::Element FiniteTarget::evaluate(const GroupWord& w,
                                             const std::vector<Element>& images) const {
  Element acc = 0;
  for (int x : w.letters()) {
    const Element g = images[static_cast<std::size_t>(std::abs(x) - 1)];
    acc = mul(acc, x > 0 ? g : inverse_[g]);
  }
  return acc;
}

namespace {

using Element = FiniteTarget::Element;

FiniteTarget symmetric(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, Element> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<Element>(i);
  const std::size_t order = perms.size();
  std::vector<Element> table(order * order);
  std::vector<int> c(static_cast<std::size_t>(n));
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t x = 0; x < c.size(); ++x) {
        c[x] = perms[a][static_cast<std::size_t>(perms[b][x])];
      }
      table[a * order + b] = index.at(c);
    }
  }
  return FiniteTarget("S" + std::to_string(n), order, std::move(table));
}

FiniteTarget dihedral(int n) {
  // r^i s^j has index i + n*j.
  const std::size_t order = static_cast<std::size_t>(2 * n);
  std::vector<Element> table(order * order);
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < 2; ++a) {
      for (int k = 0; k < n; ++k) {
        for (int b = 0; b < 2; ++b) {
          const int rot = ((i + (a ? -k : k)) % n + n) % n;
          const int ref = (a + b) % 2;
          table[static_cast<std::size_t>(i + n * a) * order + static_cast<std::size_t>(k + n * b)] =
              static_cast<Element>(rot + n * ref);
        }
      }
    }
  }
  return FiniteTarget("D" + std::to_string(n), order, std::move(table));
}

FiniteTarget quaternion() {
  // Index 2u + s: unit u in {1, i, j, k}, sign s (1 means negative).
  // Unit products: u*v = sign[u][v] * unit[u][v].
  constexpr std::array<std::array<int, 4>, 4> unit = {{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
  constexpr std::array<std::array<int, 4>, 4> neg = {{{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}}};
  std::vector<Element> table(64);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const int ua = a / 2, ub = b / 2;
      const int s = (a % 2 + b % 2 + neg[static_cast<std::size_t>(ua)][static_cast<std::size_t>(ub)]) % 2;
      table[static_cast<std::size_t>(a * 8 + b)] =
          static_cast<Element>(2 * unit[static_cast<std::size_t>(ua)][static_cast<std::size_t>(ub)] + s);
    }
  }
  return FiniteTarget("Q8", 8, std::move(table));
}

}  // namespace

std::vector<std::string> builtin_target_names() { return {"S3", "S4", "S5", "D4", "D5", "D6", "Q8"}; }

FiniteTarget builtin_target(std::string_view name) {
  if (name == "S3") return symmetric(3);
  if (name == "S4") return symmetric(4);
  if (name == "S5") return symmetric(5);
  if (name == "D4") return dihedral(4);
  if (name == "D5") return dihedral(5);
  if (name == "D6") return dihedral(6);
  if (name == "Q8") return quaternion();
  throw Error("unknown target group \"" + std::string(name) + "\"");
}

FiniteTarget parse_target_table(std::string name, std::string_view text) {
  std::istringstream in{std::string(text)};
  long order = 0;
  if (!(in >> order) || order <= 0 || order > 4096) throw Error("bad group order in table for " + name);
  const auto n = static_cast<std::size_t>(order);
  std::vector<Element> table(n * n);
  for (auto& x : table) {
    long v = -1;
    if (!(in >> v)) throw Error("multiplication table for " + name + " is truncated");
    if (v < 0 || v >= order) throw Error("table entry out of range in " + name);
    x = static_cast<Element>(v);
  }
  std::string extra;
  if (in >> extra) throw Error("trailing data after multiplication table of " + name);
  return FiniteTarget(std::move(name), n, std::move(table));
}

FiniteTarget load_target_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open target table " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  auto slash = path.find_last_of('/');
  return parse_target_table(slash == std::string::npos ? path : path.substr(slash + 1), buf.str());
}

FiniteTarget direct_product(const FiniteTarget& a, const FiniteTarget& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto pa = a.mul(static_cast<Element>(x / nb), static_cast<Element>(y / nb));
      const auto pb = b.mul(static_cast<Element>(x % nb), static_cast<Element>(y % nb));
      table[x * n + y] = static_cast<Element>(pa * nb + pb);
    }
  }
  return FiniteTarget(a.name() + "x" + b.name(), n, std::move(table));
}

}  // namespace braidforge
