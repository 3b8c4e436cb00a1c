#include "braidforge/invariants.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <sstream>
#include <thread>

#include "braidforge/error.hpp"

namespace braidforge {

namespace {

long long checked_add(long long a, long long b) {
  long long r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceCapError("integer overflow in lattice reduction");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceCapError("integer overflow in lattice reduction");
  return r;
}

// row_i -= q * row_j
void row_sub(IntMatrix& m, std::size_t i, std::size_t j, long long q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < m[i].size(); ++c) {
    m[i][c] = checked_add(m[i][c], -checked_mul(q, m[j][c]));
  }
}

void col_sub(IntMatrix& m, std::size_t i, std::size_t j, long long q) {
  if (q == 0) return;
  for (auto& row : m) row[i] = checked_add(row[i], -checked_mul(q, row[j]));
}

}  // namespace

IntMatrix exponent_matrix(const Presentation& p) {
  IntMatrix m;
  m.reserve(p.relators().size());
  for (const auto& r : p.relators()) m.push_back(r.word.exponent_sums(p.generators()));
  return m;
}

std::vector<long long> smith_invariants(IntMatrix m, std::size_t columns) {
  const std::size_t rows = m.size();
  std::vector<long long> diag;
  std::size_t t = 0;
  while (t < rows && t < columns) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    auto find_pivot = [&](std::size_t& pi, std::size_t& pj) {
      bool found = false;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < columns; ++j) {
          if (m[i][j] != 0 && (!found || std::llabs(m[i][j]) < std::llabs(m[pi][pj]))) {
            pi = i;
            pj = j;
            found = true;
          }
        }
      }
      return found;
    };
    std::size_t pi = 0, pj = 0;
    if (!find_pivot(pi, pj)) break;
    for (;;) {
      std::swap(m[t], m[pi]);
      for (auto& row : m) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        row_sub(m, i, t, m[i][t] / m[t][t]);
        clean = clean && m[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < columns; ++j) {
        col_sub(m, j, t, m[t][j] / m[t][t]);
        clean = clean && m[t][j] == 0;
      }
      if (!clean) {
        pi = t;
        pj = t;
        for (std::size_t i = t; i < rows; ++i) {
          if (m[i][t] != 0 && std::llabs(m[i][t]) < std::llabs(m[pi][pj])) { pi = i; pj = t; }
        }
        for (std::size_t j = t; j < columns; ++j) {
          if (m[t][j] != 0 && std::llabs(m[t][j]) < std::llabs(m[pi][pj])) { pi = t; pj = j; }
        }
        continue;
      }
      // Enforce divisibility of the rest of the block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < columns; ++j) {
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t c = 0; c < columns; ++c) m[t][c] = checked_add(m[t][c], m[i][c]);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
      pi = t;
      pj = t;
    }
    diag.push_back(std::llabs(m[t][t]));
    ++t;
  }
  diag.resize(columns, 0);
  return diag;
}

int Abelianization::rank() const {
  return static_cast<int>(std::count(invariant_factors.begin(), invariant_factors.end(), 0LL));
}

std::string Abelianization::to_string() const {
  std::vector<std::string> parts;
  for (long long d : invariant_factors) {
    if (d > 1) parts.push_back("Z/" + std::to_string(d));
  }
  const int r = rank();
  if (r == 1) parts.push_back("Z");
  if (r > 1) parts.push_back("Z^" + std::to_string(r));
  if (parts.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " x " : "") + parts[i];
  return s;
}

Abelianization abelianization(const Presentation& p) {
  return {smith_invariants(exponent_matrix(p), static_cast<std::size_t>(p.generators()))};
}

int connected_components_abelian_rank(const Presentation& p) { return abelianization(p).rank(); }

RelationLattice::RelationLattice(const Presentation& p)
    : columns_(static_cast<std::size_t>(p.generators())), basis_(exponent_matrix(p)) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < columns_ && rank < basis_.size(); ++col) {
    for (;;) {
      std::size_t best = basis_.size();
      for (std::size_t i = rank; i < basis_.size(); ++i) {
        if (basis_[i][col] != 0 &&
            (best == basis_.size() || std::llabs(basis_[i][col]) < std::llabs(basis_[best][col]))) {
          best = i;
        }
      }
      if (best == basis_.size()) break;
      std::swap(basis_[rank], basis_[best]);
      bool clean = true;
      for (std::size_t i = rank + 1; i < basis_.size(); ++i) {
        row_sub(basis_, i, rank, basis_[i][col] / basis_[rank][col]);
        clean = clean && basis_[i][col] == 0;
      }
      if (clean) {
        if (basis_[rank][col] < 0) {
          for (auto& x : basis_[rank]) x = -x;
        }
        pivots_.push_back(col);
        ++rank;
        break;
      }
    }
  }
  basis_.resize(rank);
}

bool RelationLattice::contains(std::vector<long long> v) const {
  v.resize(columns_, 0);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t c = pivots_[i];
    if (v[c] % basis_[i][c] != 0) return false;
    const long long q = v[c] / basis_[i][c];
    for (std::size_t j = 0; j < columns_; ++j) v[j] = checked_add(v[j], -checked_mul(q, basis_[i][j]));
  }
  return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

bool RelationLattice::trivial(const GroupWord& w) const {
  if (w.max_generator() > static_cast<int>(columns_)) throw Error("word uses unknown generators");
  return contains(w.exponent_sums(static_cast<int>(columns_)));
}

int default_generator_cap(std::size_t order) {
  if (order <= 6) return 14;
  if (order <= 8) return 12;
  if (order <= 12) return 11;
  if (order <= 24) return 10;
  return 8;
}

namespace {

using Element = FiniteTarget::Element;

struct CompiledRelator {
  std::vector<std::pair<std::size_t, bool>> letters;  // generator, inverted
};

// Generators ordered by how many relators mention them; each relator is
// tested at the level where its last generator is assigned.
struct SearchPlan {
  std::vector<std::size_t> order;
  std::vector<std::vector<CompiledRelator>> checks;  // per level
};

SearchPlan make_plan(const Presentation& p) {
  const auto k = static_cast<std::size_t>(p.generators());
  std::vector<std::size_t> participation(k, 0);
  for (const auto& r : p.relators()) {
    std::set<std::size_t> gens;
    for (int x : r.word.letters()) gens.insert(static_cast<std::size_t>(std::abs(x) - 1));
    for (auto g : gens) ++participation[g];
  }
  SearchPlan plan;
  plan.order.resize(k);
  for (std::size_t i = 0; i < k; ++i) plan.order[i] = i;
  std::stable_sort(plan.order.begin(), plan.order.end(),
                   [&](std::size_t a, std::size_t b) { return participation[a] > participation[b]; });
  std::vector<std::size_t> level(k);
  for (std::size_t i = 0; i < k; ++i) level[plan.order[i]] = i;
  plan.checks.resize(k);
  for (const auto& r : p.relators()) {
    if (r.word.empty()) continue;
    CompiledRelator c;
    std::size_t last = 0;
    for (int x : r.word.letters()) {
      const auto g = static_cast<std::size_t>(std::abs(x) - 1);
      c.letters.push_back({g, x < 0});
      last = std::max(last, level[g]);
    }
    plan.checks[last].push_back(std::move(c));
  }
  return plan;
}

class Searcher {
 public:
  Searcher(const SearchPlan& plan, const FiniteTarget& t, std::size_t k)
      : plan_(plan), t_(t), images_(k, 0) {}

  template <typename Visit>
  void run(std::size_t level, Visit&& visit) {
    if (level == plan_.order.size()) {
      visit(images_);
      return;
    }
    const std::size_t g = plan_.order[level];
    for (std::size_t x = 0; x < t_.order(); ++x) {
      images_[g] = static_cast<Element>(x);
      if (satisfied(level)) run(level + 1, visit);
    }
  }

  template <typename Visit>
  void run_with_first(Element first, Visit&& visit) {
    if (plan_.order.empty()) {
      visit(images_);
      return;
    }
    images_[plan_.order[0]] = first;
    if (satisfied(0)) run(1, visit);
  }

 private:
  bool satisfied(std::size_t level) const {
    for (const auto& c : plan_.checks[level]) {
      Element acc = 0;
      for (const auto& [g, inverted] : c.letters) {
        acc = t_.mul(acc, inverted ? t_.inv(images_[g]) : images_[g]);
      }
      if (acc != 0) return false;
    }
    return true;
  }

  const SearchPlan& plan_;
  const FiniteTarget& t_;
  Assignment images_;
};

void check_cap(const Presentation& p, const FiniteTarget& t, int cap) {
  const int limit = cap > 0 ? cap : default_generator_cap(t.order());
  if (p.generators() > limit) {
    throw ResourceCapError("hom count into " + t.name() + " is capped at " + std::to_string(limit) +
                           " generators, presentation has " + std::to_string(p.generators()));
  }
}

Assignment conjugacy_canonical(const Assignment& a, const FiniteTarget& t) {
  Assignment best = a, tmp(a.size());
  for (std::size_t g = 1; g < t.order(); ++g) {
    const auto e = static_cast<Element>(g);
    for (std::size_t i = 0; i < a.size(); ++i) tmp[i] = t.mul(t.mul(t.inv(e), a[i]), e);
    if (tmp < best) best = tmp;
  }
  return best;
}

}  // namespace

void for_each_hom(const Presentation& p, const FiniteTarget& t,
                  const std::function<void(const Assignment&)>& visit, int generator_cap) {
  check_cap(p, t, generator_cap);
  const SearchPlan plan = make_plan(p);
  Searcher s(plan, t, static_cast<std::size_t>(p.generators()));
  s.run(0, visit);
}

std::vector<Assignment> all_homs(const Presentation& p, const FiniteTarget& t, int generator_cap) {
  std::vector<Assignment> out;
  for_each_hom(p, t, [&](const Assignment& a) { out.push_back(a); }, generator_cap);
  std::sort(out.begin(), out.end());
  return out;
}

HomCount hom_count(const Presentation& p, const FiniteTarget& t, const HomCountOptions& opts) {
  check_cap(p, t, opts.generator_cap);
  HomCount result{t.name(), 0, std::nullopt};
  const SearchPlan plan = make_plan(p);
  const auto k = static_cast<std::size_t>(p.generators());

  if (opts.up_to_conjugacy) {
    std::set<Assignment> classes;
    Searcher s(plan, t, k);
    s.run(0, [&](const Assignment& a) {
      ++result.count;
      classes.insert(conjugacy_canonical(a, t));
    });
    result.up_to_conjugacy = classes.size();
    return result;
  }

  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  if (k == 0 || threads == 1) {
    Searcher s(plan, t, k);
    s.run(0, [&](const Assignment&) { ++result.count; });
    return result;
  }
  // Split on the image of the first generator in search order.
  threads = std::min<unsigned>(threads, static_cast<unsigned>(t.order()));
  std::vector<std::future<std::uint64_t>> parts;
  for (unsigned w = 0; w < threads; ++w) {
    parts.push_back(std::async(std::launch::async, [&, w] {
      std::uint64_t n = 0;
      Searcher s(plan, t, k);
      for (std::size_t x = w; x < t.order(); x += threads) {
        s.run_with_first(static_cast<Element>(x), [&](const Assignment&) { ++n; });
      }
      return n;
    }));
  }
  for (auto& f : parts) result.count += f.get();
  return result;
}

}  // namespace braidforge
