#include "braidforge/garside.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "braidforge/error.hpp"

namespace braidforge {

PermBraid::PermBraid(std::vector<std::uint8_t> perm) : perm_(std::move(perm)) {
  std::vector<bool> seen(perm_.size(), false);
  for (auto x : perm_) {
    if (x >= perm_.size() || seen[x]) throw Error("not a permutation");
    seen[x] = true;
  }
}

PermBraid PermBraid::identity(int strands) {
  std::vector<std::uint8_t> p(static_cast<std::size_t>(strands));
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  return PermBraid(std::move(p));
}

PermBraid PermBraid::delta(int strands) {
  std::vector<std::uint8_t> p(static_cast<std::size_t>(strands));
  for (std::size_t k = 0; k < p.size(); ++k) p[k] = static_cast<std::uint8_t>(p.size() - 1 - k);
  return PermBraid(std::move(p));
}

PermBraid PermBraid::generator(int strands, int index) {
  return identity(strands).times_generator(index);
}

std::vector<PermBraid> PermBraid::all(int strands) {
  std::vector<PermBraid> out;
  auto p = identity(strands).perm_;
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool PermBraid::is_identity() const {
  for (std::size_t k = 0; k < perm_.size(); ++k) {
    if (perm_[k] != k) return false;
  }
  return true;
}

bool PermBraid::is_delta() const {
  for (std::size_t k = 0; k < perm_.size(); ++k) {
    if (perm_[k] != perm_.size() - 1 - k) return false;
  }
  return true;
}

std::size_t PermBraid::length() const {
  std::size_t inversions = 0;
  for (std::size_t a = 0; a < perm_.size(); ++a) {
    for (std::size_t b = a + 1; b < perm_.size(); ++b) inversions += perm_[a] > perm_[b];
  }
  return inversions;
}

bool PermBraid::starts_with(int i) const {
  const auto k = static_cast<std::size_t>(i);
  return perm_[k - 1] > perm_[k];
}

bool PermBraid::finishes_with(int i) const {
  // Strands ending at positions i-1 and i crossed iff their starts are inverted.
  std::size_t from_lo = 0, from_hi = 0;
  for (std::size_t k = 0; k < perm_.size(); ++k) {
    if (perm_[k] == static_cast<std::size_t>(i - 1)) from_lo = k;
    if (perm_[k] == static_cast<std::size_t>(i)) from_hi = k;
  }
  return from_lo > from_hi;
}

std::vector<int> PermBraid::starting_set() const {
  std::vector<int> s;
  for (int i = 1; i < strands(); ++i) {
    if (starts_with(i)) s.push_back(i);
  }
  return s;
}

std::vector<int> PermBraid::finishing_set() const {
  std::vector<int> s;
  for (int i = 1; i < strands(); ++i) {
    if (finishes_with(i)) s.push_back(i);
  }
  return s;
}

PermBraid PermBraid::times_generator(int i) const {
  auto p = perm_;
  const auto lo = static_cast<std::uint8_t>(i - 1), hi = static_cast<std::uint8_t>(i);
  for (auto& x : p) {
    if (x == lo) {
      x = hi;
    } else if (x == hi) {
      x = lo;
    }
  }
  return PermBraid(std::move(p));
}

PermBraid PermBraid::without_first(int i) const {
  auto p = perm_;
  std::swap(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(i)]);
  return PermBraid(std::move(p));
}

PermBraid PermBraid::flipped() const {
  const std::size_t n = perm_.size();
  std::vector<std::uint8_t> p(n);
  for (std::size_t k = 0; k < n; ++k) p[k] = static_cast<std::uint8_t>(n - 1 - perm_[n - 1 - k]);
  return PermBraid(std::move(p));
}

PermBraid PermBraid::complement() const {
  const std::size_t n = perm_.size();
  std::vector<std::uint8_t> p(n);
  for (std::size_t k = 0; k < n; ++k) p[perm_[k]] = static_cast<std::uint8_t>(n - 1 - k);
  return PermBraid(std::move(p));
}

PermBraid PermBraid::left_complement() const {
  const std::size_t n = perm_.size();
  std::vector<std::uint8_t> inverse(n), p(n);
  for (std::size_t k = 0; k < n; ++k) inverse[perm_[k]] = static_cast<std::uint8_t>(k);
  for (std::size_t k = 0; k < n; ++k) p[k] = inverse[n - 1 - k];
  return PermBraid(std::move(p));
}

std::vector<int> PermBraid::word() const {
  std::vector<int> w;
  PermBraid rest = *this;
  while (!rest.is_identity()) {
    for (int i = 1; i < strands(); ++i) {
      if (rest.starts_with(i)) {
        w.push_back(i);
        rest = rest.without_first(i);
        break;
      }
    }
  }
  return w;
}

BraidWord NormalForm::to_word() const {
  if (delta_power < 0) throw Error("normal form with negative Delta power has no positive word");
  std::vector<int> letters;
  const auto d = half_twist_word(strands).letters();
  for (int k = 0; k < delta_power; ++k) letters.insert(letters.end(), d.begin(), d.end());
  for (const auto& f : factors) {
    const auto w = f.word();
    letters.insert(letters.end(), w.begin(), w.end());
  }
  return BraidWord(strands, std::move(letters));
}

std::string NormalForm::to_string() const {
  std::ostringstream os;
  os << "D^" << delta_power;
  for (const auto& f : factors) {
    os << " [";
    for (std::size_t k = 0; k < f.perm().size(); ++k) os << (k ? " " : "") << f.perm()[k] + 1;
    os << ']';
  }
  return os.str();
}

bool left_weighted(const PermBraid& a, const PermBraid& b) {
  for (int i : b.starting_set()) {
    if (!a.finishes_with(i)) return false;
  }
  return true;
}

namespace {

void make_left_weighted(PermBraid& a, PermBraid& b) {
  for (;;) {
    int move = 0;
    for (int i = 1; i < b.strands() && !move; ++i) {
      if (b.starts_with(i) && !a.finishes_with(i)) move = i;
    }
    if (!move) return;
    a = a.times_generator(move);
    b = b.without_first(move);
  }
}

PermBraid tau_power(const PermBraid& p, int k) { return (k % 2 != 0) ? p.flipped() : p; }

}  // namespace

NormalForm normalize(int strands, int delta_power, const std::vector<PermBraid>& input) {
  NormalForm nf{strands, delta_power, {}};
  auto& f = nf.factors;
  for (const auto& x : input) {
    if (x.strands() != strands) throw Error("strand mismatch in normal form");
    if (x.is_identity()) continue;
    f.push_back(x);
    for (std::size_t i = f.size() - 1; i-- > 0;) make_left_weighted(f[i], f[i + 1]);
    while (!f.empty() && f.back().is_identity()) f.pop_back();
    while (!f.empty() && f.front().is_delta()) {
      f.erase(f.begin());
      ++nf.delta_power;
    }
  }
  return nf;
}

NormalForm normal_form(const BraidWord& w) {
  std::vector<PermBraid> letters;
  letters.reserve(w.size());
  for (int x : w.letters()) letters.push_back(PermBraid::generator(w.strands(), x));
  return normalize(w.strands(), 0, letters);
}

bool words_equal_as_braids(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw Error("words live on different strand counts");
  if (a.size() != b.size()) return false;
  return normal_form(a) == normal_form(b);
}

NormalForm conjugate(const NormalForm& nf, const PermBraid& x) {
  std::vector<PermBraid> f;
  f.push_back(tau_power(x.complement(), 1 - nf.delta_power));
  f.insert(f.end(), nf.factors.begin(), nf.factors.end());
  f.push_back(x);
  return normalize(nf.strands, nf.delta_power - 1, f);
}

NormalForm conjugate_inverse(const NormalForm& nf, const PermBraid& x) {
  std::vector<PermBraid> f;
  f.push_back(tau_power(x, 1 - nf.delta_power));
  for (const auto& p : nf.factors) f.push_back(p.flipped());
  f.push_back(x.complement().flipped());
  return normalize(nf.strands, nf.delta_power - 1, f);
}

PermBraid cycling_conjugator(const NormalForm& nf) {
  if (nf.factors.empty()) return PermBraid::identity(nf.strands);
  return tau_power(nf.factors.front(), nf.delta_power);
}

NormalForm cycling(const NormalForm& nf) {
  if (nf.factors.empty()) return nf;
  std::vector<PermBraid> f(nf.factors.begin() + 1, nf.factors.end());
  f.push_back(tau_power(nf.factors.front(), nf.delta_power));
  return normalize(nf.strands, nf.delta_power, f);
}

NormalForm decycling(const NormalForm& nf) {
  if (nf.factors.empty()) return nf;
  std::vector<PermBraid> f;
  f.push_back(tau_power(nf.factors.back(), nf.delta_power));
  f.insert(f.end(), nf.factors.begin(), nf.factors.end() - 1);
  return normalize(nf.strands, nf.delta_power, f);
}

NormalForm to_super_summit(const NormalForm& nf, const GarsideCaps& caps,
                           std::vector<ConjugationStep>* path) {
  const int n = nf.strands;
  const std::size_t delta_len = static_cast<std::size_t>(n * (n - 1) / 2);
  std::size_t length = 0;
  if (nf.delta_power > 0) length += static_cast<std::size_t>(nf.delta_power) * delta_len;
  for (const auto& f : nf.factors) length += f.length();
  const std::size_t budget =
      caps.max_cycling ? caps.max_cycling : (length + 2) * static_cast<std::size_t>(n * n);
  std::size_t used = 0;
  auto spend = [&] {
    if (++used > budget) {
      throw ResourceCapError("cycling exceeded " + std::to_string(budget) + " iterations");
    }
  };

  NormalForm cur = nf;
  for (bool improved = true; improved;) {
    improved = false;
    NormalForm y = cur;
    std::vector<ConjugationStep> steps;
    for (std::size_t m = 0; m < delta_len && !y.factors.empty(); ++m) {
      spend();
      PermBraid x = cycling_conjugator(y);
      y = cycling(y);
      steps.push_back({ConjugationStep::Kind::LeftRotation, std::move(x), y});
      if (y.inf() > cur.inf()) {
        cur = y;
        if (path) path->insert(path->end(), steps.begin(), steps.end());
        improved = true;
        break;
      }
    }
  }
  for (bool improved = true; improved;) {
    improved = false;
    NormalForm y = cur;
    std::vector<ConjugationStep> steps;
    for (std::size_t m = 0; m < delta_len && !y.factors.empty(); ++m) {
      spend();
      PermBraid x = y.factors.back();
      y = decycling(y);
      steps.push_back({ConjugationStep::Kind::RightRotation, std::move(x), y});
      if (y.sup() < cur.sup() && y.inf() >= cur.inf()) {
        cur = y;
        if (path) path->insert(path->end(), steps.begin(), steps.end());
        improved = true;
        break;
      }
    }
  }
  return cur;
}

namespace {

void check_set_cap(std::size_t size, const GarsideCaps& caps) {
  if (size > caps.max_summit_set) {
    throw ResourceCapError("super summit set exceeds " + std::to_string(caps.max_summit_set) +
                           " elements");
  }
}

}  // namespace

SummitData summit(const NormalForm& nf, const GarsideCaps& caps) {
  const NormalForm start = to_super_summit(nf, caps);
  const auto simples = PermBraid::all(nf.strands);
  std::set<NormalForm> seen{start};
  std::deque<NormalForm> queue{start};
  while (!queue.empty()) {
    const NormalForm cur = queue.front();
    queue.pop_front();
    for (const auto& s : simples) {
      if (s.is_identity()) continue;
      NormalForm y = conjugate(cur, s);
      if (y.inf() != start.inf() || y.sup() != start.sup()) continue;
      if (seen.insert(y).second) {
        check_set_cap(seen.size(), caps);
        queue.push_back(std::move(y));
      }
    }
  }
  return {start.inf(), std::vector<NormalForm>(seen.begin(), seen.end())};
}

std::optional<std::vector<ConjugationStep>> super_summit_path(const NormalForm& from,
                                                              const NormalForm& to,
                                                              const GarsideCaps& caps) {
  if (from == to) return std::vector<ConjugationStep>{};
  const auto simples = PermBraid::all(from.strands);
  std::map<NormalForm, std::pair<NormalForm, PermBraid>> parent;
  parent.emplace(from, std::make_pair(from, PermBraid::identity(from.strands)));
  std::deque<NormalForm> queue{from};
  while (!queue.empty()) {
    const NormalForm cur = queue.front();
    queue.pop_front();
    for (const auto& s : simples) {
      if (s.is_identity()) continue;
      NormalForm y = conjugate(cur, s);
      if (y.inf() != from.inf() || y.sup() != from.sup() || parent.count(y)) continue;
      parent.emplace(y, std::make_pair(cur, s));
      check_set_cap(parent.size(), caps);
      if (y == to) {
        std::vector<ConjugationStep> steps;
        for (NormalForm at = y; !(at == from);) {
          const auto& [prev, by] = parent.at(at);
          steps.push_back({ConjugationStep::Kind::LeftRotation, by, at});
          at = prev;
        }
        std::reverse(steps.begin(), steps.end());
        return steps;
      }
      queue.push_back(std::move(y));
    }
  }
  return std::nullopt;
}

bool are_conjugate(const BraidWord& a, const BraidWord& b, const GarsideCaps& caps) {
  if (a.strands() != b.strands()) throw Error("words live on different strand counts");
  if (a.size() != b.size()) return false;
  const NormalForm sa = to_super_summit(normal_form(a), caps);
  const NormalForm sb = to_super_summit(normal_form(b), caps);
  if (sa == sb) return true;
  if (sa.inf() != sb.inf() || sa.sup() != sb.sup()) return false;
  const auto data = summit(sa, caps);
  return std::binary_search(data.summit_set.begin(), data.summit_set.end(), sb);
}

int summit_power(const BraidWord& w, const GarsideCaps& caps) {
  return to_super_summit(normal_form(w), caps).inf();
}

bool contains_half_twist(const BraidWord& w, const GarsideCaps& caps) {
  return summit_power(w, caps) >= 1;
}

}  // namespace braidforge
