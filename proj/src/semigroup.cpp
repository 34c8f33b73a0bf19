#include "wpgap/semigroup.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "wpgap/error.hpp"

namespace wpgap {

namespace {

void require_strictly_increasing_positive(const GapList& gaps) {
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (gaps[i] <= 0) {
      throw Error(ErrorCode::InvalidInput, "gap " + std::to_string(gaps[i]) + " is not positive");
    }
    if (i > 0 && gaps[i] <= gaps[i - 1]) {
      throw Error(ErrorCode::InvalidInput, "gap list is not strictly increasing");
    }
  }
}

}  // namespace

GapSequence::GapSequence(GapList gaps) : gaps_(std::move(gaps)) {
  require_strictly_increasing_positive(gaps_);
  const int g = size();
  for (int i = 1; i <= g; ++i) {
    if (ell(i) < i) throw Error(ErrorCode::InvalidInput, "gap sequence has l_i < i");
  }
  if (g > 0 && ell(g) > 2 * g - 1) {
    throw Error(ErrorCode::GapTooLarge, "l_g exceeds 2g - 1");
  }
}

NumericalSemigroup::NumericalSemigroup() : NumericalSemigroup(GapList{}) {}

NumericalSemigroup::NumericalSemigroup(GapList gaps) : gaps_(std::move(gaps)) {
  const int g = genus();
  membership_.assign(static_cast<std::size_t>(2 * g + 1), true);
  for (int gap : gaps_) {
    if (gap <= 2 * g) membership_[static_cast<std::size_t>(gap)] = false;
  }
  multiplicity_ = 1;
  while (!contains(multiplicity_)) ++multiplicity_;
}

NumericalSemigroup NumericalSemigroup::from_gaps_unchecked(GapList gaps) {
  return NumericalSemigroup(std::move(gaps));
}

NumericalSemigroup NumericalSemigroup::from_gaps(GapList gaps) {
  require_strictly_increasing_positive(gaps);
  const int top = gaps.empty() ? 0 : gaps.back();
  std::vector<bool> is_gap(static_cast<std::size_t>(top + 1), false);
  for (int gap : gaps) is_gap[static_cast<std::size_t>(gap)] = true;

  // Non-gaps a <= b with a + b <= top; anything larger is never a gap.
  for (int a = 1; 2 * a <= top; ++a) {
    if (is_gap[static_cast<std::size_t>(a)]) continue;
    for (int b = a; a + b <= top; ++b) {
      if (!is_gap[static_cast<std::size_t>(b)] && is_gap[static_cast<std::size_t>(a + b)]) {
        throw Error(ErrorCode::NotCoclosed, std::to_string(a) + " + " + std::to_string(b) +
                                                " = " + std::to_string(a + b) + " is a gap");
      }
    }
  }
  const auto g = static_cast<int>(gaps.size());
  if (g > 0 && top > 2 * g - 1) {
    throw Error(ErrorCode::GapTooLarge,
                "gap " + std::to_string(top) + " > 2*" + std::to_string(g) + " - 1");
  }
  return NumericalSemigroup(std::move(gaps));
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const int> generators) {
  int d = 0;
  for (int x : generators) {
    if (x <= 0) throw Error(ErrorCode::InvalidInput, "generators must be positive");
    d = std::gcd(d, x);
  }
  if (d != 1) {
    throw Error(ErrorCode::NotCoprime, "generators have gcd " + std::to_string(d));
  }
  const int smallest = *std::min_element(generators.begin(), generators.end());

  // Sieve until `smallest` consecutive members appear; everything past is in S.
  std::vector<bool> member{true};
  GapList gaps;
  int run = 1;
  for (int x = 1; run < smallest; ++x) {
    bool in = false;
    for (int a : generators) {
      if (a <= x && member[static_cast<std::size_t>(x - a)]) {
        in = true;
        break;
      }
    }
    member.push_back(in);
    if (in) {
      ++run;
    } else {
      run = 0;
      gaps.push_back(x);
    }
  }
  return NumericalSemigroup(std::move(gaps));
}

bool NumericalSemigroup::contains(std::int64_t x) const {
  if (x < 0) return false;
  if (x >= static_cast<std::int64_t>(membership_.size())) return true;
  return membership_[static_cast<std::size_t>(x)];
}

std::int64_t weight(const NumericalSemigroup& s) {
  const std::int64_t g = s.genus();
  std::int64_t nongap_sum = 0;
  for (std::int64_t m = 1; m <= 2 * g; ++m) {
    if (s.contains(m)) nongap_sum += m;
  }
  return (3 * g * g + g) / 2 - nongap_sum;
}

std::int64_t gap_sequence_weight(const GapSequence& gaps) {
  std::int64_t w = 0;
  for (int i = 1; i <= gaps.size(); ++i) w += gaps.ell(i) - i;
  return w;
}

bool oliveira_check(const NumericalSemigroup& s) {
  const int g = s.genus();
  if (g < 2 || s.multiplicity() < 3) {
    throw Error(ErrorCode::PreconditionViolated,
                "oliveira_check needs genus >= 2 and multiplicity >= 3");
  }
  const GapSequence seq = s.gap_sequence();
  for (int i = 2; i <= g - 1; ++i) {
    if (seq.ell(i) > 2 * i - 2) return false;
  }
  return seq.ell(g) <= 2 * g - 1;
}

int even_gap_count(const NumericalSemigroup& s) {
  return static_cast<int>(
      std::count_if(s.gaps().begin(), s.gaps().end(), [](int x) { return x % 2 == 0; }));
}

NumericalSemigroup halved_even_part(const NumericalSemigroup& s) {
  // k is a gap of the halved semigroup iff 2k is a gap of s.
  GapList gaps;
  for (int x : s.gaps()) {
    if (x % 2 == 0) gaps.push_back(x / 2);
  }
  return NumericalSemigroup::from_gaps_unchecked(std::move(gaps));
}

std::string format_gaps(std::span<const int> gaps) {
  std::string out;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(gaps[i]);
  }
  return out;
}

GapList parse_gaps(std::string_view text) {
  GapList gaps;
  if (text.empty()) return gaps;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view field =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int value = 0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || end != field.data() + field.size() || field.empty()) {
      throw Error(ErrorCode::InvalidInput, "malformed gap list '" + std::string(text) + "'");
    }
    gaps.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return gaps;
}

}  // namespace wpgap
