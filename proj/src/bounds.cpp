#include "wpgap/bounds.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "wpgap/error.hpp"
#include "wpgap/hyperelliptic.hpp"

namespace wpgap {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::PreconditionViolated, what);
}

void require_range(std::int64_t g, std::int64_t gamma) {
  require(g >= 0 && g <= kMaxBoundsGenus, "g out of range [0, 100000]");
  require(gamma >= 0 && gamma <= kMaxBoundsGenus, "gamma out of range [0, 100000]");
}

std::int64_t to_int64(const BigInt& v) {
  require(v <= BigInt(std::numeric_limits<std::int64_t>::max()) &&
              v >= BigInt(std::numeric_limits<std::int64_t>::min()),
          "value does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

// Positive divisor.
std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

BigInt ceil_rational(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);  // always positive
  BigInt quotient = num / den;
  if (num % den != 0 && num > 0) quotient += 1;
  return quotient;
}

}  // namespace

std::int64_t choose2(std::int64_t n) { return n >= 2 ? n * (n - 1) / 2 : 0; }

std::string_view to_string(C3Branch b) { return b == C3Branch::CaseA ? "a" : "b"; }

std::int64_t c3_case_a(std::int64_t g, std::int64_t gamma) {
  return (2 * gamma - 1) * g - (gamma - 1) * (2 * gamma + 1);
}

std::int64_t c3_case_b(std::int64_t g, std::int64_t gamma) {
  return 2 * gamma * g - 2 * gamma * (4 * gamma - 1);
}

BoundSet bound_set(std::int64_t g, std::int64_t gamma, std::int64_t n) {
  require_range(g, gamma);
  require(g >= 2, "bound_set needs g >= 2");
  require(n >= 1, "bound_set needs n >= 1");
  BoundSet b;
  const std::int64_t base = choose2(g - 2 * gamma);
  b.c1 = base + 2 * gamma * gamma;
  b.c2 = base + 4 * gamma - 4;
  if (g >= 2 * gamma) {
    const std::int64_t a = c3_case_a(g, gamma);
    const std::int64_t bb = c3_case_b(g, gamma);
    b.c3 = std::max(a, bb);
    b.c3_branch = bb >= a ? C3Branch::CaseB : C3Branch::CaseA;
  }
  b.n_bound = pflaum_bound(g, n);
  b.omega = omega(g, n);
  return b;
}

std::int64_t pflaum_bound(std::int64_t g, std::int64_t n) {
  require(n >= 1, "N(g,n) needs n >= 1");
  if (n >= 2) return 4 * n * (g - 1);
  if (g == 6) return 25;
  return std::max(3 * g + 6, 4 * g - 4);
}

std::int64_t embedding_dimension(std::int64_t g, std::int64_t n) {
  require(n >= 1, "n must be positive");
  return n == 1 ? g - 1 : (2 * n - 1) * (g - 1) - 1;
}

BigInt omega_from_orders(std::int64_t g, std::int64_t n, const OrderSequence& generic) {
  require(g >= 2, "omega needs g >= 2");
  const std::int64_t dim = embedding_dimension(g, n);
  if (static_cast<std::int64_t>(generic.size()) != dim + 1) {
    throw Error(ErrorCode::LengthMismatch, "generic orders must have N(n)+1 = " +
                                               std::to_string(dim + 1) + " entries");
  }
  BigInt sum = 0;
  for (std::int64_t eps : generic.orders) sum += BigInt(eps) * (2 * g - 2);
  return sum + BigInt(n) * (2 * g - 2) * (dim + 1);
}

std::int64_t omega(std::int64_t g, std::int64_t n) {
  require(g >= 2 && g <= kMaxBoundsGenus, "omega needs 2 <= g <= 100000");
  require(n >= 1 && n <= kMaxBoundsGenus, "omega needs 1 <= n <= 100000");
  const std::int64_t dim = embedding_dimension(g, n);
  return to_int64(omega_from_orders(g, n, OrderSequence::classical(static_cast<int>(dim + 1))));
}

std::int64_t homma_ommori_lower_Wn(std::int64_t g, std::int64_t n) {
  require(n >= 2 && g >= 2, "Homma-Ommori bound needs n >= 2 and g >= 2");
  return ceil_div(omega(g, n), g * (g + 1) / 2);
}

std::string_view to_string(TPolicy p) { return p == TPolicy::Paper ? "paper" : "min"; }

std::int64_t w1_polynomial(std::int64_t g, std::int64_t gamma) {
  return 6 * gamma * g * g - 16 * gamma * gamma * g + 16 * gamma * gamma * gamma -
         4 * gamma * gamma - 2 * gamma;
}

CriterionReport theorem_pipeline(std::int64_t g, std::int64_t gamma, TPolicy policy) {
  require_range(g, gamma);
  require(gamma >= 3, "theorem pipeline needs gamma >= 3");
  require(g >= 2 * gamma + 2, "theorem pipeline needs g >= 2*gamma + 2");

  const BoundSet b = bound_set(g, gamma, 1);
  CriterionReport rep;
  rep.g = g;
  rep.gamma = gamma;
  rep.policy = policy;
  rep.ramified = 2 * g - 4 * gamma + 2;
  rep.t_used = policy == TPolicy::Paper
                   ? rep.ramified
                   : std::min(gamma * gamma * gamma - gamma, rep.ramified);
  rep.c1 = b.c1;
  rep.c2 = b.c2;
  rep.c3 = *b.c3;
  rep.c3_branch = *b.c3_branch;
  rep.N_g_1 = b.n_bound;

  const std::int64_t degree = g * g * g - g;
  rep.numerator = degree - (b.c1 - b.c2) * rep.t_used - rep.ramified * b.c2;
  if (rep.numerator <= 0) {
    rep.nonpositive_bound = true;
    rep.W1_lower = rep.ramified;
    rep.holds = false;
  } else {
    rep.W1_lower = rep.ramified + ceil_div(rep.numerator, rep.c3);
    rep.holds = rep.W1_lower > rep.N_g_1;
  }

  if (g >= 6 * gamma * gamma - gamma + 1) rep.closed_form_value = large_g_closed_form(g, gamma);
  if (rep.c3_branch == C3Branch::CaseA) rep.branch2_value = branch2_inequality(g, gamma);
  return rep;
}

Rational genus_threshold_exact(std::int64_t gamma) {
  require(gamma >= 3 && gamma <= kMaxBoundsGenus, "genus threshold needs gamma >= 3");
  return Rational(9 * gamma - 17) + Rational(43 * gamma - 20, 2 * gamma * gamma + gamma - 1);
}

std::int64_t genus_threshold(std::int64_t gamma) {
  return to_int64(ceil_rational(genus_threshold_exact(gamma)));
}

std::optional<std::int64_t> exact_min_genus(std::int64_t gamma, std::int64_t g_max) {
  require(gamma >= 3, "exact_min_genus needs gamma >= 3");
  std::optional<std::int64_t> found;
  for (std::int64_t g = g_max; g >= 2 * gamma + 2; --g) {
    if (!theorem_pipeline(g, gamma, TPolicy::Min).holds) break;
    found = g;
  }
  return found;
}

Rational branch2_inequality(std::int64_t g, std::int64_t gamma) {
  require_range(g, gamma);
  require(gamma >= 3, "branch2_inequality needs gamma >= 3");
  const BigInt gm = gamma;
  const BigInt gg = g;
  const BigInt den = (2 * gm - 1) * gg - (2 * gm * gm - gm - 1);
  if (den == 0) throw Error(ErrorCode::ZeroDenominator, "(2gamma-1)g = 2gamma^2-gamma-1");
  require(den > 0, "branch2_inequality denominator must be positive");
  const BigInt g2 = gm * gm;
  const BigInt g3 = g2 * gm;
  const BigInt linear = (2 * gm - 1) * (2 * gm + 2) * gg - (36 * g3 - 50 * g2 + 34 * gm - 6);
  const BigInt num = 24 * g3 * g2 - 40 * g2 * g2 + 22 * g3 + 4 * gm;
  return Rational(linear) + Rational(num, den);
}

Rational large_g_closed_form(std::int64_t g, std::int64_t gamma) {
  require_range(g, gamma);
  require(g >= 6 * gamma * gamma - gamma + 1, "large_g_closed_form needs g >= 6gamma^2 - gamma + 1");
  return Rational(5 * g - 1) +
         Rational(24 * gamma * gamma - 10 * gamma - 4, g - 4 * gamma + 1);
}

std::string_view to_string(LemmaClass c) {
  switch (c) {
    case LemmaClass::TypeI: return "I";
    case LemmaClass::TypeII: return "II";
    case LemmaClass::CaseA: return "a";
    case LemmaClass::CaseB: return "b";
    case LemmaClass::AllType3: return "III";
  }
  return "?";
}

std::optional<LemmaClass> parse_lemma_class(std::string_view text) {
  if (text == "I") return LemmaClass::TypeI;
  if (text == "II") return LemmaClass::TypeII;
  if (text == "a") return LemmaClass::CaseA;
  if (text == "b") return LemmaClass::CaseB;
  if (text == "III") return LemmaClass::AllType3;
  return std::nullopt;
}

EnumerationFilter lemma_filter(int g, int gamma, LemmaClass lemma_class) {
  EnumerationFilter f;
  const bool has_window = gamma > 0;
  const Interval window{g - 2 * gamma + 1, g};
  switch (lemma_class) {
    case LemmaClass::TypeI:
    case LemmaClass::TypeII:
      f.even_gap_count = gamma;
      break;
    case LemmaClass::CaseA:
      f.min_multiplicity = g - 2 * gamma + 1;
      if (has_window) f.required_gap_in = window;
      break;
    case LemmaClass::CaseB:
      f.min_multiplicity = g - 2 * gamma + 1;
      if (has_window) f.required_interval = window;
      break;
    case LemmaClass::AllType3:
      f.min_multiplicity = g - 2 * gamma + 1;
      break;
  }
  return f;
}

LemmaVerdict verify_lemma(int g, int gamma, LemmaClass lemma_class,
                          const EnumerationOptions& options) {
  require(g >= 2 && gamma >= 0, "verify_lemma needs g >= 2 and gamma >= 0");
  const bool type3 = lemma_class == LemmaClass::CaseA || lemma_class == LemmaClass::CaseB ||
                     lemma_class == LemmaClass::AllType3;
  if (type3) require(g >= 2 * gamma, "unramified classes need g >= 2*gamma");

  LemmaVerdict v;
  v.lemma_class = lemma_class;
  v.g = g;
  v.gamma = gamma;
  const BoundSet b = bound_set(g, gamma, 1);
  switch (lemma_class) {
    case LemmaClass::TypeI: v.bound = b.c1; break;
    case LemmaClass::TypeII: v.bound = b.c2; break;
    case LemmaClass::CaseA: v.bound = c3_case_a(g, gamma); break;
    case LemmaClass::CaseB: v.bound = c3_case_b(g, gamma); break;
    case LemmaClass::AllType3: v.bound = *b.c3; break;
  }

  // An empty window leaves no room for a case-A gap.
  if (lemma_class == LemmaClass::CaseA && gamma == 0) return v;

  SemigroupPredicate extra;
  if (lemma_class == LemmaClass::TypeI || lemma_class == LemmaClass::TypeII) {
    const RamifiedClass wanted =
        lemma_class == LemmaClass::TypeI ? RamifiedClass::TypeI : RamifiedClass::TypeII;
    extra = [gamma, wanted](const NumericalSemigroup& s) {
      return classify_ramified(s, gamma) == wanted;
    };
  }
  const EnumerationStats stats =
      scan_max_weight(g, lemma_filter(g, gamma, lemma_class), options, extra);
  v.class_size = stats.filtered_count;
  v.class_empty = stats.class_empty;
  if (!stats.class_empty) {
    v.max_observed = stats.max_weight_seen;
    v.witness = stats.argmax_gap_set;
    v.holds = v.max_observed <= v.bound;
  }
  return v;
}

}  // namespace wpgap
