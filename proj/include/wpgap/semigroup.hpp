#pragma once

// Numerical semigroups restricted to the window [0, 2g] that every weight
// formula inspects. Values are immutable after construction.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wpgap {

using GapList = std::vector<int>;

/// Strictly increasing gaps l_1 < ... < l_g with l_i >= i and l_g <= 2g - 1.
/// Order indices follow eps_j = l_{j+1} - 1 for j = 0 .. g-1.
class GapSequence {
 public:
  GapSequence() = default;
  explicit GapSequence(GapList gaps);

  int size() const { return static_cast<int>(gaps_.size()); }
  /// 1-based, matching l_1 .. l_g.
  int ell(int i) const { return gaps_.at(static_cast<std::size_t>(i - 1)); }
  /// 0-based order eps_j = l_{j+1} - 1.
  int order(int j) const { return ell(j + 1) - 1; }
  const GapList& gaps() const { return gaps_; }

  friend bool operator==(const GapSequence&, const GapSequence&) = default;

 private:
  GapList gaps_;
};

class NumericalSemigroup {
 public:
  /// The semigroup N of genus 0.
  NumericalSemigroup();

  static NumericalSemigroup from_gaps(GapList gaps);
  static NumericalSemigroup from_generators(std::span<const int> generators);
  /// Skips the closure check. For enumerators whose output is closed by construction.
  static NumericalSemigroup from_gaps_unchecked(GapList gaps);

  int genus() const { return static_cast<int>(gaps_.size()); }
  const GapList& gaps() const { return gaps_; }
  int multiplicity() const { return multiplicity_; }
  int conductor() const { return gaps_.empty() ? 0 : gaps_.back() + 1; }
  int frobenius() const { return conductor() - 1; }
  bool is_ordinary() const { return multiplicity_ == genus() + 1; }

  bool contains(std::int64_t x) const;
  GapSequence gap_sequence() const { return GapSequence(gaps_); }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.gaps_ == b.gaps_;
  }

 private:
  explicit NumericalSemigroup(GapList gaps);

  GapList gaps_;
  // membership_[x] for x in [0, 2g]
  std::vector<bool> membership_;
  int multiplicity_ = 1;
};

/// Weierstrass weight (3g^2+g)/2 - sum of non-gaps in (0, 2g].
std::int64_t weight(const NumericalSemigroup& s);

/// Sum of (l_i - i); equal to weight() for every semigroup.
std::int64_t gap_sequence_weight(const GapSequence& gaps);

/// l_i <= 2i - 2 for i = 2..g-1 and l_g <= 2g - 1.
/// Requires multiplicity >= 3 and genus >= 2.
bool oliveira_check(const NumericalSemigroup& s);

int even_gap_count(const NumericalSemigroup& s);

/// {h/2 : h in S, h even}.
NumericalSemigroup halved_even_part(const NumericalSemigroup& s);

/// Comma-separated ascending gaps, the interchange form used by the cache
/// and the CLI. The empty gap set formats as an empty string.
std::string format_gaps(std::span<const int> gaps);
GapList parse_gaps(std::string_view text);

}  // namespace wpgap
