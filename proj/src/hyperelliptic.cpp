#include "wpgap/hyperelliptic.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "wpgap/error.hpp"

namespace wpgap {

namespace {

void require_gamma(const NumericalSemigroup& s, int gamma) {
  const int evens = even_gap_count(s);
  if (evens != gamma) {
    throw Error(ErrorCode::GammaMismatch, "semigroup has " + std::to_string(evens) +
                                              " even gaps, expected gamma = " +
                                              std::to_string(gamma));
  }
}

void require_type3_range(int g, int gamma) {
  if (gamma < 0 || g < 2 * gamma) {
    throw Error(ErrorCode::PreconditionViolated,
                "need g >= 2*gamma (g = " + std::to_string(g) + ", gamma = " +
                    std::to_string(gamma) + ")");
  }
}

}  // namespace

CoveringProfile CoveringProfile::make(int g, int gamma) {
  require_type3_range(g, gamma);
  CoveringProfile p;
  p.g = g;
  p.gamma = gamma;
  p.r = 2 * g - 4 * gamma + 2;
  const std::int64_t gm = gamma;
  p.t_max = std::min<std::int64_t>(gm * gm * gm - gm, p.r);
  return p;
}

std::string_view to_string(RamifiedClass c) {
  return c == RamifiedClass::TypeI ? "I" : "II";
}

std::string_view to_string(UnramifiedCase c) {
  return c == UnramifiedCase::CaseA ? "a" : "b";
}

std::int64_t OddNongapProfile::sum() const {
  return std::accumulate(u.begin(), u.end(), std::int64_t{0});
}

RamifiedClass classify_ramified(const NumericalSemigroup& s, int gamma) {
  require_gamma(s, gamma);
  return weight(halved_even_part(s)) > 0 ? RamifiedClass::TypeI : RamifiedClass::TypeII;
}

bool min_even_nongap_check(const NumericalSemigroup& s, int gamma) {
  require_gamma(s, gamma);
  int h = 2;
  while (!s.contains(h)) h += 2;
  return h <= 2 * gamma + 2;
}

bool is_type3_candidate(const NumericalSemigroup& s, int gamma) {
  require_type3_range(s.genus(), gamma);
  return s.multiplicity() >= s.genus() - 2 * gamma + 1;
}

UnramifiedCase classify_unramified(const NumericalSemigroup& s, int gamma) {
  if (!is_type3_candidate(s, gamma)) {
    throw Error(ErrorCode::PreconditionViolated,
                "multiplicity below g - 2*gamma + 1; not an unramified candidate");
  }
  const int g = s.genus();
  for (int x = g - 2 * gamma + 1; x <= g; ++x) {
    if (!s.contains(x)) return UnramifiedCase::CaseA;
  }
  return UnramifiedCase::CaseB;
}

OddNongapProfile odd_nongap_profile(const NumericalSemigroup& s, int gamma) {
  require_gamma(s, gamma);
  OddNongapProfile profile;
  for (int x = 2 * s.genus() - 1; x >= 1; x -= 2) {
    if (s.contains(x)) profile.u.push_back(x);
  }
  return profile;
}

std::int64_t even_nongap_sum(const NumericalSemigroup& s) {
  std::int64_t sum = 0;
  for (std::int64_t h = 2; h <= 2 * static_cast<std::int64_t>(s.genus()); h += 2) {
    if (s.contains(h)) sum += h;
  }
  return sum;
}

GapSequence extremal_caseB_gapset(int g, int gamma) {
  if (gamma < 0 || g < 6 * gamma - 1 || g < 0) {
    throw Error(ErrorCode::PreconditionViolated,
                "extremal case-B gap set needs g >= 6*gamma - 1");
  }
  GapList gaps;
  for (int x = 1; x <= g - 2 * gamma; ++x) gaps.push_back(x);
  for (int x = 2 * g - 6 * gamma + 2; x <= 2 * g - 4 * gamma + 1; ++x) gaps.push_back(x);
  return GapSequence(std::move(gaps));
}

}  // namespace wpgap

namespace wpgap {

std::string_view to_string(CandidateCheck c) {
  switch (c) {
    case CandidateCheck::ParityCount: return "parity-count";
    case CandidateCheck::OddNongapFloor: return "odd-nongap-floor";
    case CandidateCheck::MinEvenNongap: return "min-even-nongap";
    case CandidateCheck::StarIdentity: return "star-identity";
    case CandidateCheck::OddSumFloor: return "odd-sum-floor";
  }
  return "?";
}

std::optional<CandidateCheck> parse_candidate_check(std::string_view text) {
  for (CandidateCheck c : kAllCandidateChecks) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

void check_candidate(const NumericalSemigroup& s, std::span<const CandidateCheck> checks,
                     PropertyReport& report) {
  const int g = s.genus();
  const int gamma = even_gap_count(s);
  const std::int64_t gg = g;
  const std::int64_t gm = gamma;
  const OddNongapProfile profile = odd_nongap_profile(s, gamma);
  const bool type2 = classify_ramified(s, gamma) == RamifiedClass::TypeII;

  for (std::size_t k = 0; k < checks.size(); ++k) {
    PropertyTally& tally = report.tallies[k];
    std::int64_t observed = 0;
    std::int64_t expected = 0;
    bool ok = true;
    switch (checks[k]) {
      case CandidateCheck::ParityCount:
        observed = static_cast<std::int64_t>(profile.u.size());
        expected = gm;
        ok = observed == expected;
        break;
      case CandidateCheck::OddNongapFloor:
        if (gamma < 1) continue;
        observed = profile.smallest();
        expected = 2 * gg - 4 * gm + 1;
        ok = observed >= expected;
        break;
      case CandidateCheck::MinEvenNongap: {
        std::int64_t h = 2;
        while (!s.contains(h)) h += 2;
        observed = h;
        expected = 2 * gm + 2;
        ok = min_even_nongap_check(s, gamma);
        break;
      }
      case CandidateCheck::StarIdentity:
        if (!type2) continue;
        observed = even_nongap_sum(s);
        expected = gg * gg + gg - gm * gm - gm;
        ok = observed == expected;
        break;
      case CandidateCheck::OddSumFloor:
        if (!type2 || gamma < 2) continue;
        observed = profile.sum();
        expected = profile.smallest() >= 2 * gg - 2 * gm - 1
                       ? 2 * gm * gg - gm * gm - 2 * gm
                       : 2 * gm * gg - gm * gm - 4 * gm + 4;
        ok = observed >= expected;
        break;
    }
    ++tally.examined;
    if (!ok) {
      ++tally.violations;
      report.findings.push_back({checks[k], g, gamma, s.gaps(), observed, expected});
    }
  }
}

PropertyReport scan_candidate_properties(int g_lo, int g_hi, int gamma_lo, int gamma_hi,
                                         std::span<const CandidateCheck> checks,
                                         const EnumerationOptions& options) {
  if (g_lo < 0 || g_lo > g_hi || gamma_lo < 0 || gamma_lo > gamma_hi) {
    throw Error(ErrorCode::PreconditionViolated, "empty or negative genus/gamma range");
  }
  PropertyReport report;
  for (CandidateCheck c : checks) report.tallies.push_back({c, 0, 0});
  for (int g = g_lo; g <= g_hi; ++g) {
    for (const NumericalSemigroup& s : enumerate_genus(g, options)) {
      const int gamma = even_gap_count(s);
      if (gamma < gamma_lo || gamma > gamma_hi) continue;
      check_candidate(s, checks, report);
    }
  }
  return report;
}

}  // namespace wpgap
