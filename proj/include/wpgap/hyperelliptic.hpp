#pragma once

// Candidate semigroups at points of a double covering X -> X~ of a genus-gamma
// curve: ramified points (types I/II) and unramified points (cases A/B).
//
// The candidate classes are purely combinatorial supersets of what actually
// occurs on curves; no realizability check is made.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "wpgap/enumeration.hpp"
#include "wpgap/semigroup.hpp"

namespace wpgap {

struct CoveringProfile {
  int g = 0;
  int gamma = 0;
  /// Number of ramification points, 2g - 4*gamma + 2.
  int r = 0;
  /// Cap on type-I points, min(gamma^3 - gamma, r).
  std::int64_t t_max = 0;

  /// Requires gamma >= 0 and g >= 2*gamma.
  static CoveringProfile make(int g, int gamma);
};

/// TypeI: the image point is a Weierstrass point of X~; TypeII: it is not.
enum class RamifiedClass { TypeI, TypeII };

/// CaseA: a gap lies in [g-2gamma+1, g]; CaseB: that window is inside S.
enum class UnramifiedCase { CaseA, CaseB };

std::string_view to_string(RamifiedClass c);
std::string_view to_string(UnramifiedCase c);

struct OddNongapProfile {
  /// u_1 > u_2 > ... > u_gamma, odd non-gaps in [1, 2g-1].
  std::vector<int> u;

  std::int64_t sum() const;
  /// u_gamma, the smallest entry. Requires a nonempty profile.
  int smallest() const { return u.back(); }
};

RamifiedClass classify_ramified(const NumericalSemigroup& s, int gamma);

/// Smallest positive even non-gap <= 2*gamma + 2.
bool min_even_nongap_check(const NumericalSemigroup& s, int gamma);

/// Multiplicity >= g - 2*gamma + 1. Requires g >= 2*gamma.
bool is_type3_candidate(const NumericalSemigroup& s, int gamma);

UnramifiedCase classify_unramified(const NumericalSemigroup& s, int gamma);

OddNongapProfile odd_nongap_profile(const NumericalSemigroup& s, int gamma);

/// Sum of even non-gaps in (0, 2g].
std::int64_t even_nongap_sum(const NumericalSemigroup& s);

/// {1..g-2gamma} u {2g-6gamma+2 .. 2g-4gamma+1}: the case-B gap set of
/// maximal weight. Requires gamma >= 0 and g >= 6*gamma - 1.
GapSequence extremal_caseB_gapset(int g, int gamma);


// Structural properties of candidates with exactly gamma even gaps, checked
// exhaustively and reported as findings instead of being asserted.
enum class CandidateCheck {
  /// gamma odd non-gaps in [1, 2g-1].
  ParityCount,
  /// u_gamma >= 2g - 4gamma + 1 (gamma >= 1).
  OddNongapFloor,
  /// Smallest positive even non-gap <= 2gamma + 2.
  MinEvenNongap,
  /// Type II: even non-gaps up to 2g sum to g^2 + g - gamma^2 - gamma.
  StarIdentity,
  /// Type II, gamma >= 2: sum u_i >= 2gamma g - gamma^2 - 4gamma + 4, and
  /// >= 2gamma g - gamma^2 - 2gamma when u_gamma >= 2g - 2gamma - 1.
  OddSumFloor,
};

inline constexpr CandidateCheck kAllCandidateChecks[] = {
    CandidateCheck::ParityCount, CandidateCheck::OddNongapFloor, CandidateCheck::MinEvenNongap,
    CandidateCheck::StarIdentity, CandidateCheck::OddSumFloor};

std::string_view to_string(CandidateCheck c);
std::optional<CandidateCheck> parse_candidate_check(std::string_view text);

struct PropertyFinding {
  CandidateCheck check = CandidateCheck::ParityCount;
  int g = 0;
  int gamma = 0;
  GapList gaps;
  std::int64_t observed = 0;
  /// The bound or identity value the observation was compared with.
  std::int64_t expected = 0;
};

struct PropertyTally {
  CandidateCheck check = CandidateCheck::ParityCount;
  std::uint64_t examined = 0;
  std::uint64_t violations = 0;
};

struct PropertyReport {
  std::vector<PropertyTally> tallies;
  std::vector<PropertyFinding> findings;

  bool all_hold() const { return findings.empty(); }
};

/// Runs the selected checks on s if it has gamma even gaps; tallies must
/// already hold one entry per check, in the same order.
void check_candidate(const NumericalSemigroup& s, std::span<const CandidateCheck> checks,
                     PropertyReport& report);

/// Every semigroup with genus in [g_lo, g_hi] and even-gap count in
/// [gamma_lo, gamma_hi]. Findings come out in genus order, then tree order.
PropertyReport scan_candidate_properties(int g_lo, int g_hi, int gamma_lo, int gamma_hi,
                                         std::span<const CandidateCheck> checks,
                                         const EnumerationOptions& options = {});

}  // namespace wpgap
