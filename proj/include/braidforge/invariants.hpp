#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidforge/present.hpp"

namespace braidforge {

// A finite group given by its multiplication table; element 0 is the
// identity. The constructor validates the group axioms.
class FiniteTarget {
 public:
  using Element = std::uint16_t;

  FiniteTarget(std::string name, std::size_t order, std::vector<Element> table);

  const std::string& name() const { return name_; }
  std::size_t order() const { return order_; }
  Element identity() const { return 0; }
  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  const std::vector<Element>& table() const { return table_; }

  // Value of a group word under an assignment of the generators.
  Element evaluate(const GroupWord& w, const std::vector<Element>& images) const;

 private:
  std::string name_;
  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
};

// Built-in names: S3 S4 S5 D4 D5 D6 Q8 (Dn is the dihedral group of order 2n).
FiniteTarget builtin_target(std::string_view name);
std::vector<std::string> builtin_target_names();
// Multiplication-table text: first line |G|, then |G| rows of |G| indices.
FiniteTarget parse_target_table(std::string name, std::string_view text);
FiniteTarget load_target_file(const std::string& path);
FiniteTarget direct_product(const FiniteTarget& a, const FiniteTarget& b);

// Invariant factors d_1 | d_2 | ... of Z^k / <relators>, one per generator,
// with 0 standing for a free factor (zeros last).
struct Abelianization {
  std::vector<long long> invariant_factors;

  int rank() const;
  // Compact form such as "Z^2", "Z x Z/2", "1".
  std::string to_string() const;

  friend bool operator==(const Abelianization&, const Abelianization&) = default;
};

using IntMatrix = std::vector<std::vector<long long>>;

// Exponent-sum matrix: one row per relator, one column per generator.
IntMatrix exponent_matrix(const Presentation& p);
// Diagonal of the Smith normal form of an integer matrix with `columns`
// columns, padded with zeros to length `columns`, in divisibility order.
std::vector<long long> smith_invariants(IntMatrix m, std::size_t columns);

Abelianization abelianization(const Presentation& p);
int connected_components_abelian_rank(const Presentation& p);

// Integer row lattice spanned by the relators' exponent vectors; decides
// whether a word is trivial in the abelianization.
class RelationLattice {
 public:
  explicit RelationLattice(const Presentation& p);
  bool contains(std::vector<long long> v) const;
  bool trivial(const GroupWord& w) const;

 private:
  std::size_t columns_;
  IntMatrix basis_;  // row echelon, positive pivots
  std::vector<std::size_t> pivots_;
};

struct HomCountOptions {
  // Maximum number of generators; 0 picks the default for the target order.
  int generator_cap = 0;
  unsigned threads = 0;  // 0: hardware concurrency
  bool up_to_conjugacy = false;
};

int default_generator_cap(std::size_t target_order);

struct HomCount {
  std::string target;
  std::uint64_t count = 0;
  std::optional<std::uint64_t> up_to_conjugacy;
};

using Assignment = std::vector<FiniteTarget::Element>;

HomCount hom_count(const Presentation& p, const FiniteTarget& t, const HomCountOptions& opts = {});

// Calls `visit` once per homomorphism (an image for each generator), in
// lexicographic order of the assignment. Single-threaded.
void for_each_hom(const Presentation& p, const FiniteTarget& t,
                  const std::function<void(const Assignment&)>& visit, int generator_cap = 0);
std::vector<Assignment> all_homs(const Presentation& p, const FiniteTarget& t, int generator_cap = 0);

}  // namespace braidforge
