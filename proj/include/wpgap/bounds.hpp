#pragma once

// Closed-form weight bounds, Weierstrass degree counts and the counting
// pipeline that turns per-point weight bounds into a lower bound on the number
// of Weierstrass points.
//
// All integer quantities are exact in 64 bits for g, gamma <= kMaxBoundsGenus;
// rational displays use arbitrary precision.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "wpgap/enumeration.hpp"
#include "wpgap/order_sequence.hpp"

namespace wpgap {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::int64_t kMaxBoundsGenus = 100000;

/// n(n-1)/2, zero for n < 2.
std::int64_t choose2(std::int64_t n);

/// Which argument attains c3. Ties (g = 6 gamma^2 - gamma + 1) report CaseB.
enum class C3Branch { CaseA, CaseB };

std::string_view to_string(C3Branch b);

struct BoundSet {
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;
  /// Present only when g >= 2*gamma.
  std::optional<std::int64_t> c3;
  std::optional<C3Branch> c3_branch;
  /// N(g, n) from the constellation criterion.
  std::int64_t n_bound = 0;
  std::int64_t omega = 0;
};

/// (2gamma-1)g - (gamma-1)(2gamma+1)
std::int64_t c3_case_a(std::int64_t g, std::int64_t gamma);
/// 2gamma g - 2gamma(4gamma-1)
std::int64_t c3_case_b(std::int64_t g, std::int64_t gamma);

BoundSet bound_set(std::int64_t g, std::int64_t gamma, std::int64_t n);

/// N(6,1) = 25, N(g,1) = max(3g+6, 4g-4), N(g,n) = 4n(g-1) for n >= 2.
std::int64_t pflaum_bound(std::int64_t g, std::int64_t n);

/// Dimension N(n) of the n-canonical embedding: g-1 for n = 1, (2n-1)(g-1)-1 otherwise.
std::int64_t embedding_dimension(std::int64_t g, std::int64_t n);

/// Degree of the n-Weierstrass divisor, sum eps_i (2g-2) + n(2g-2)(N(n)+1),
/// for arbitrary generic orders eps_0 .. eps_N(n).
BigInt omega_from_orders(std::int64_t g, std::int64_t n, const OrderSequence& generic);

/// Classical case eps_i = i.
std::int64_t omega(std::int64_t g, std::int64_t n);

/// ceil(omega_n / (g(g+1)/2)), using v_P(W_n) <= g(g+1)/2.
std::int64_t homma_ommori_lower_Wn(std::int64_t g, std::int64_t n);

enum class TPolicy {
  /// t = 2g - 4gamma + 2, as in the published inequality.
  Paper,
  /// t = min(gamma^3 - gamma, 2g - 4gamma + 2); never weaker.
  Min,
};

std::string_view to_string(TPolicy p);

struct CriterionReport {
  std::int64_t g = 0;
  std::int64_t gamma = 0;
  TPolicy policy = TPolicy::Min;
  std::int64_t t_used = 0;
  /// Ramification points, all counted as Weierstrass points.
  std::int64_t ramified = 0;
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;
  std::int64_t c3 = 0;
  C3Branch c3_branch = C3Branch::CaseA;
  /// g^3 - g - (c1 - c2) t - r c2: weight left for unramified points.
  std::int64_t numerator = 0;
  bool nonpositive_bound = false;
  std::int64_t W1_lower = 0;
  std::int64_t N_g_1 = 0;
  bool holds = false;
  /// 5g - 1 + (24gamma^2 - 10gamma - 4)/(g - 4gamma + 1), when g >= 6gamma^2 - gamma + 1.
  std::optional<Rational> closed_form_value;
  /// branch2_inequality(g, gamma), when c3 takes its CaseA branch.
  std::optional<Rational> branch2_value;
};

/// 6 gamma g^2 - 16 gamma^2 g + 16 gamma^3 - 4 gamma^2 - 2 gamma
std::int64_t w1_polynomial(std::int64_t g, std::int64_t gamma);

/// Requires gamma >= 3 and g >= 2gamma + 2.
CriterionReport theorem_pipeline(std::int64_t g, std::int64_t gamma, TPolicy policy = TPolicy::Min);

/// ceil(9gamma - 17 + (43gamma - 20)/(2gamma^2 + gamma - 1)). Requires gamma >= 3.
std::int64_t genus_threshold(std::int64_t gamma);
Rational genus_threshold_exact(std::int64_t gamma);

/// Smallest g in [2gamma+2, g_max] such that the Min pipeline holds on all of
/// [g, g_max]; nullopt if it fails at g_max.
std::optional<std::int64_t> exact_min_genus(std::int64_t gamma, std::int64_t g_max);

Rational branch2_inequality(std::int64_t g, std::int64_t gamma);

/// Requires g >= 6gamma^2 - gamma + 1.
Rational large_g_closed_form(std::int64_t g, std::int64_t gamma);

enum class LemmaClass { TypeI, TypeII, CaseA, CaseB, AllType3 };

std::string_view to_string(LemmaClass c);
/// Accepts I, II, a, b, III.
std::optional<LemmaClass> parse_lemma_class(std::string_view text);

struct LemmaVerdict {
  LemmaClass lemma_class = LemmaClass::AllType3;
  std::int64_t g = 0;
  std::int64_t gamma = 0;
  std::int64_t bound = 0;
  bool class_empty = true;
  std::int64_t max_observed = 0;
  std::uint64_t class_size = 0;
  bool holds = true;
  GapList witness;
};

/// Exhaustive check of the per-point weight bound over the candidate class.
LemmaVerdict verify_lemma(int g, int gamma, LemmaClass lemma_class,
                          const EnumerationOptions& options = {});

/// Enumeration filter selecting the class (before any leaf predicate).
EnumerationFilter lemma_filter(int g, int gamma, LemmaClass lemma_class);

}  // namespace wpgap
