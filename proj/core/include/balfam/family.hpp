#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "balfam/error.hpp"

namespace balfam {

// A subset of the ground set [n] = {1,...,n} as a single-word bitmask:
// element i present <=> bit (i-1) set. Keeps every set operation O(1) and
// caps the ground set at 64 elements.
using SubsetMask = std::uint64_t;

inline constexpr int kMaxGroundSetSize = 64;

constexpr SubsetMask full_mask(int n) {
  return n >= 64 ? ~SubsetMask{0} : (SubsetMask{1} << n) - 1;
}

constexpr bool mask_contains(SubsetMask a, int element) {
  return ((a >> (element - 1)) & SubsetMask{1}) != 0;
}

constexpr SubsetMask complement_mask(SubsetMask a, int n) {
  return ~a & full_mask(n);
}

constexpr int mask_cardinality(SubsetMask a) { return std::popcount(a); }

// Throws ElementOutOfRange unless every element lies in 1..n.
SubsetMask mask_from_elements(std::span<const int> elements, int n);

// Elements of the mask in ascending order (1-based).
std::vector<int> mask_elements(SubsetMask a);

// An ordered family of subsets of [n]. Certificates index members by their
// 0-based position in this order. Members must be pairwise distinct unless
// the family was constructed with allow_duplicates.
class SetFamily {
 public:
  SetFamily(int n, std::vector<SubsetMask> members, bool allow_duplicates = false);

  int n() const noexcept { return n_; }
  const std::vector<SubsetMask>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  SubsetMask member(std::size_t index) const { return members_.at(index); }
  bool allow_duplicates() const noexcept { return allow_duplicates_; }

  bool operator==(const SetFamily&) const = default;

 private:
  int n_;
  std::vector<SubsetMask> members_;
  bool allow_duplicates_;
};

enum class AggregateMode { Union, Intersection };
enum class FamilyFormat { Text, Json };

// Text grammar: optional header line "n <int>", optional directive line
// "allow_duplicates", then one set per line as comma-separated 1-based
// elements; "-" alone is the empty set; "#" starts a comment. Without a
// header, n is the largest element seen. JSON: {"n":int,"sets":[[ints]]}
// with an optional "allow_duplicates" key.
SetFamily parse_family(std::string_view input, FamilyFormat format);
std::string format_family(const SetFamily& family, FamilyFormat format);

// The common cardinality of the members, or nullopt if sizes are mixed.
std::optional<int> is_uniform(const SetFamily& family);

// True iff no member is a subset of a different member.
bool is_sperner(const SetFamily& family);

// Union or intersection of the selected members; indices must be nonempty
// and in range.
SubsetMask aggregate(const SetFamily& family, std::span<const int> indices,
                     AggregateMode mode);

// All singletons {1},...,{n} followed by [n]. n+1 members; admits an equal
// pair of disjoint unions but no equal pair of disjoint intersections.
SetFamily gen_nonuniform_sharp(int n);

// {2,3} followed by {1,i} for i = 2..n. n members, 2-uniform, and admits no
// balanced splitting at all.
SetFamily gen_uniform_sharp(int n);

}  // namespace balfam
