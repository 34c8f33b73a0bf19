#pragma once

// Exhaustive generation of numerical semigroups by genus, walking the
// semigroup tree rooted at N (children of S are S \ {x} for minimal
// generators x above the Frobenius number).

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wpgap/semigroup.hpp"

namespace wpgap {

inline constexpr int kDefaultGenusCap = 35;
/// Tree nodes carry decomposition counts over a 128-slot window; generators of a
/// genus-g semigroup are at most 3g, which bounds the reachable genus.
inline constexpr int kMaxSupportedGenus = 42;
inline constexpr int kDefaultSplitDepth = 10;

struct Interval {
  int lo = 0;
  int hi = 0;

  bool contains(int x) const { return lo <= x && x <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct EnumerationFilter {
  std::optional<int> min_multiplicity;
  std::optional<int> even_gap_count;
  /// Every integer of the interval must be a non-gap.
  std::optional<Interval> required_interval;
  /// At least one integer of the interval must be a gap.
  std::optional<Interval> required_gap_in;

  bool matches(const NumericalSemigroup& s) const;
  /// Throws PreconditionViolated unless intervals are nonempty and inside [1, 2g-1].
  void validate(int genus) const;
  /// `mm=<v|*>;eg=<v|*>;ri=<a:b|*>;rg=<a:b|*>`
  std::string canonical() const;

  friend bool operator==(const EnumerationFilter&, const EnumerationFilter&) = default;
};

struct EnumerationOptions {
  int jobs = 1;
  int genus_cap = kDefaultGenusCap;
  /// Depth at which the tree is cut into independent tasks. Never derived from jobs.
  int split_depth = kDefaultSplitDepth;
  /// When set, filtered enumerations are read from / written to this directory.
  std::optional<std::filesystem::path> cache_dir;
};

struct EnumerationStats {
  int genus = 0;
  std::uint64_t total_count = 0;
  std::uint64_t filtered_count = 0;
  bool class_empty = true;
  std::int64_t max_weight_seen = 0;
  /// Lexicographically smallest gap set among those of maximal weight.
  GapList argmax_gap_set;
};

using SemigroupPredicate = std::function<bool(const NumericalSemigroup&)>;

/// Serial traversal in tree order; the visitor sees each matching semigroup once.
void visit_filtered(int genus, const EnumerationFilter& filter,
                    const std::function<void(const NumericalSemigroup&)>& visit,
                    const EnumerationOptions& options = {});

/// All semigroups of the given genus, in tree order (independent of jobs).
std::vector<NumericalSemigroup> enumerate_genus(int genus, const EnumerationOptions& options = {});

std::vector<NumericalSemigroup> enumerate_filtered(int genus, const EnumerationFilter& filter,
                                                   const EnumerationOptions& options = {});

std::uint64_t count_genus(int genus, const EnumerationOptions& options = {});

std::uint64_t count_filtered(int genus, const EnumerationFilter& filter,
                             const EnumerationOptions& options = {});

/// Weight statistics over the filtered class, optionally narrowed further by
/// a leaf predicate that cannot be expressed as a filter clause.
EnumerationStats scan_max_weight(int genus, const EnumerationFilter& filter,
                                 const EnumerationOptions& options = {},
                                 const SemigroupPredicate& extra = {});

/// Merges b into a. Associative and commutative.
void merge_stats(EnumerationStats& a, const EnumerationStats& b);

/// Throws GenusTooLarge when genus exceeds the cap (or kMaxSupportedGenus).
void check_genus(int genus, const EnumerationOptions& options);

}  // namespace wpgap
