#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace tchains {

/// One element of a supported group, stored canonically:
///   free group    - freely reduced word of signed 1-based generator indices,
///   free abelian  - coordinate vector of fixed rank,
///   finite table  - a single entry, the element index.
struct GroupElement {
  std::vector<long long> data;

  auto operator<=>(const GroupElement&) const = default;
};

enum class Family { Free, Abelian, Finite };

/// A finitely generated group together with a fixed word metric. Values are
/// immutable after construction, and every member function is pure.
class Group {
 public:
  static Group free_group(int rank);
  static Group free_abelian(int rank);
  /// Free abelian group with a custom (symmetric-closed) generating set for
  /// the word metric; `generators` lists vectors whose symmetric closure must
  /// generate the whole lattice.
  static Group free_abelian(int rank, std::vector<std::vector<long long>> generators);
  /// Finite group given by a full multiplication table. Associativity,
  /// identity and inverses are verified; the generator subset (closed under
  /// inverses automatically) must reach every element.
  static Group finite_table(std::vector<std::vector<int>> table, std::vector<int> generators);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::size_t order() const;  // finite family only
  const std::vector<std::vector<int>>& table() const;

  GroupElement identity() const;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;

  /// Word length with respect to the group's generating set.
  long long word_length(const GroupElement& a) const;
  /// Left-invariant word metric d(a,b) = length(a^{-1} b).
  long long distance(const GroupElement& a, const GroupElement& b) const;

  /// All elements with word length <= radius, ordered by (length, data).
  std::vector<GroupElement> ball(long long radius) const;

  /// Positive generators s(1),...,s(r) (free/abelian) or the declared
  /// generator subset (finite), before symmetric closure.
  const std::vector<GroupElement>& positive_generators() const { return positive_gens_; }
  /// Symmetric closure actually used by the word metric.
  const std::vector<GroupElement>& generators() const { return symmetric_gens_; }

  bool has_custom_generators() const { return custom_gens_; }

  /// Throws std::invalid_argument if `a` is not a canonical element of this group.
  void validate(const GroupElement& a) const;

  bool same_spec(const Group& other) const;

  std::string describe() const;

 private:
  Group() = default;

  Family family_ = Family::Free;
  int rank_ = 0;
  bool custom_gens_ = false;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_table_;       // finite: index of a^{-1}
  std::vector<long long> length_table_;  // finite: BFS word lengths
  std::vector<GroupElement> positive_gens_;
  std::vector<GroupElement> symmetric_gens_;
};

}  // namespace tchains
