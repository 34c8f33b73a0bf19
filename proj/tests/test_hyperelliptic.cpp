#include <doctest.h>

#include "support/oracles.hpp"
#include "wpgap/enumeration.hpp"
#include "wpgap/error.hpp"
#include "wpgap/hyperelliptic.hpp"

using namespace wpgap;

namespace {

GapList range(int lo, int hi) {
  GapList out;
  for (int x = lo; x <= hi; ++x) out.push_back(x);
  return out;
}

GapList join(GapList a, const GapList& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

NumericalSemigroup S(GapList gaps) { return NumericalSemigroup::from_gaps(std::move(gaps)); }

ErrorCode error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected wpgap::Error");
  return ErrorCode::InvalidInput;
}

const GapList kTypeI7 = {1, 2, 3, 4, 5, 7, 8};
const GapList kTypeII8 = {1, 2, 3, 4, 5, 6, 7, 9};

}  // namespace

TEST_CASE("covering profile") {
  const CoveringProfile p = CoveringProfile::make(16, 3);
  CHECK(p.r == 22);
  CHECK(p.t_max == 22);
  CHECK(CoveringProfile::make(40, 3).t_max == 24);
  CHECK(CoveringProfile::make(6, 3).r == 2);
  CHECK(CoveringProfile::make(4, 0).t_max == 0);
  CHECK_THROWS_AS(CoveringProfile::make(5, 3), Error);
}

TEST_CASE("classify_ramified") {
  CHECK(classify_ramified(S(kTypeI7), 3) == RamifiedClass::TypeI);
  CHECK(classify_ramified(S(kTypeII8), 3) == RamifiedClass::TypeII);
  CHECK(classify_ramified(S({1, 3}), 0) == RamifiedClass::TypeII);
  CHECK(error_of([] { classify_ramified(S({1, 3}), 1); }) == ErrorCode::GammaMismatch);
}

TEST_CASE("min_even_nongap_check") {
  CHECK(min_even_nongap_check(S(kTypeI7), 3));
  CHECK(min_even_nongap_check(S({1, 3}), 0));
  CHECK(min_even_nongap_check(S(kTypeII8), 3));
  CHECK(error_of([] { min_even_nongap_check(S(kTypeII8), 2); }) == ErrorCode::GammaMismatch);
}

TEST_CASE("is_type3_candidate") {
  GapList hyper;
  for (int x = 1; x <= 27; x += 2) hyper.push_back(x);
  CHECK_FALSE(is_type3_candidate(S(hyper), 3));
  CHECK(is_type3_candidate(S(join(range(1, 12), range(20, 25))), 3));
  for (int g = 2; g <= 10; ++g) {
    for (int gamma = 0; 2 * gamma <= g; ++gamma) CHECK(is_type3_candidate(S(range(1, g)), gamma));
  }
  CHECK(error_of([] { is_type3_candidate(S({1, 2, 3}), 2); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("classify_unramified") {
  CHECK(classify_unramified(S(join(range(1, 12), range(20, 25))), 3) == UnramifiedCase::CaseB);
  CHECK(classify_unramified(S(join(range(1, 13), range(15, 19))), 3) == UnramifiedCase::CaseA);
  for (int g = 3; g <= 10; ++g) {
    for (int gamma = 1; 2 * gamma + 1 <= g; ++gamma) {
      CHECK(classify_unramified(S(range(1, g)), gamma) == UnramifiedCase::CaseA);
    }
  }
  GapList hyper{1, 3, 5, 7, 9, 11, 13};
  CHECK(error_of([&] { classify_unramified(S(hyper), 2); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("odd_nongap_profile") {
  CHECK(odd_nongap_profile(S(kTypeII8), 3).u == std::vector<int>{15, 13, 11});
  CHECK(odd_nongap_profile(S({1, 3}), 0).u.empty());
  const OddNongapProfile p = odd_nongap_profile(S(kTypeI7), 3);
  CHECK(p.u == std::vector<int>{13, 11, 9});
  CHECK(p.sum() == 33);
  CHECK(p.smallest() == 9);
  CHECK(error_of([] { odd_nongap_profile(S({1, 2}), 0); }) == ErrorCode::GammaMismatch);
}

TEST_CASE("even_nongap_sum") {
  CHECK(even_nongap_sum(S(kTypeII8)) == 60);
  CHECK(even_nongap_sum(S({1, 2, 3})) == 10);
  CHECK(even_nongap_sum(NumericalSemigroup{}) == 0);
}

TEST_CASE("extremal case-B gap sets") {
  const GapSequence g18 = extremal_caseB_gapset(18, 3);
  CHECK(g18.gaps() == join(range(1, 12), range(20, 25)));
  CHECK(gap_sequence_weight(g18) == 42);

  const GapSequence g17 = extremal_caseB_gapset(17, 3);
  CHECK(g17.gaps() == join(range(1, 11), range(18, 23)));
  CHECK(gap_sequence_weight(g17) == 36);

  // The formula places the second block at 2g-6gamma+2 .. 2g-4gamma+1 = 6..7.
  const GapSequence g5 = extremal_caseB_gapset(5, 1);
  CHECK(g5.gaps() == GapList{1, 2, 3, 6, 7});
  CHECK(gap_sequence_weight(g5) == 4);

  CHECK(error_of([] { extremal_caseB_gapset(16, 3); }) == ErrorCode::PreconditionViolated);

  for (int gamma = 0; gamma <= 5; ++gamma) {
    for (int g = std::max(6 * gamma - 1, 0); g <= 6 * gamma + 12; ++g) {
      const GapSequence seq = extremal_caseB_gapset(g, gamma);
      const NumericalSemigroup s = NumericalSemigroup::from_gaps(seq.gaps());
      REQUIRE(s.genus() == g);
      REQUIRE(weight(s) == 2 * gamma * (g - 4 * gamma + 1));
      if (g >= 2 * gamma && gamma > 0) {
        REQUIRE(is_type3_candidate(s, gamma));
        REQUIRE(classify_unramified(s, gamma) == UnramifiedCase::CaseB);
      }
    }
  }
}

TEST_CASE("extremal gap set is the case-B maximum") {
  for (int g : {17, 18, 19}) {
    EnumerationFilter f;
    f.min_multiplicity = g - 5;
    f.required_interval = Interval{g - 5, g};
    const EnumerationStats stats = scan_max_weight(g, f);
    REQUIRE_FALSE(stats.class_empty);
    const GapSequence extremal = extremal_caseB_gapset(g, 3);
    CHECK(stats.max_weight_seen == gap_sequence_weight(extremal));
    CHECK(stats.argmax_gap_set == extremal.gaps());
  }
}

TEST_CASE("parity count and min-even-nongap over all candidates") {
  for (int g = 0; g <= 14; ++g) {
    for (const NumericalSemigroup& s : enumerate_genus(g)) {
      const int gamma = even_gap_count(s);
      REQUIRE(odd_nongap_profile(s, gamma).u.size() == static_cast<std::size_t>(gamma));
      if (gamma <= 4) REQUIRE(min_even_nongap_check(s, gamma));
    }
  }
}

TEST_CASE("identity (*) for every type II candidate, g <= 16, gamma <= 5") {
  int seen = 0;
  for (int g = 0; g <= 16; ++g) {
    for (int gamma = 0; gamma <= 5; ++gamma) {
      EnumerationFilter f;
      f.even_gap_count = gamma;
      for (const NumericalSemigroup& s : enumerate_filtered(g, f)) {
        if (classify_ramified(s, gamma) != RamifiedClass::TypeII) continue;
        ++seen;
        const std::int64_t gg = g;
        REQUIRE(even_nongap_sum(s) == gg * gg + gg - gamma * gamma - gamma);
      }
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("candidate property scan") {
  const PropertyReport rep = scan_candidate_properties(
      0, 16, 0, 4,
      std::vector<CandidateCheck>{CandidateCheck::ParityCount, CandidateCheck::OddNongapFloor,
                                  CandidateCheck::MinEvenNongap, CandidateCheck::StarIdentity,
                                  CandidateCheck::OddSumFloor});
  REQUIRE(rep.tallies.size() == 5);
  for (const PropertyTally& t : rep.tallies) {
    CHECK_MESSAGE(t.examined > 0, to_string(t.check));
    CHECK_MESSAGE(t.violations == 0, to_string(t.check));
  }
  CHECK(rep.all_hold());
}

TEST_CASE("odd-sum floor has a gamma = 5 counterexample") {
  // One type II candidate per genus sits 2 below the floor; pinned as a regression.
  const CandidateCheck only[] = {CandidateCheck::OddSumFloor};
  const PropertyReport rep = scan_candidate_properties(11, 16, 5, 5, only);
  REQUIRE(rep.findings.size() == 6);
  const PropertyFinding& f16 = rep.findings.back();
  CHECK(f16.g == 16);
  CHECK(f16.gaps == GapList{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 13, 15, 23, 25, 27});
  CHECK(f16.observed == 117);
  CHECK(f16.expected == 119);
  const NumericalSemigroup s = NumericalSemigroup::from_gaps(f16.gaps);
  CHECK(odd_nongap_profile(s, 5).u == std::vector<int>{31, 29, 21, 19, 17});
  CHECK(classify_ramified(s, 5) == RamifiedClass::TypeII);
}

TEST_CASE("check names round-trip") {
  for (CandidateCheck c : kAllCandidateChecks) CHECK(parse_candidate_check(to_string(c)) == c);
  CHECK_FALSE(parse_candidate_check("nope"));
}
