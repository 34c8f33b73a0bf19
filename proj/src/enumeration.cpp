#include "wpgap/enumeration.hpp"

#include <array>
#include <atomic>
#include <thread>

#include "wpgap/cache.hpp"
#include "wpgap/error.hpp"

namespace wpgap {

namespace {

constexpr int kWindow = 128;

// A tree node. dec[y] counts the unordered pairs {a, b} of elements with
// a + b = y (0 + y included), so y is an element iff dec[y] > 0 and a
// positive element is a minimal generator iff dec[y] == 1.
struct Node {
  std::array<std::uint8_t, kWindow> dec{};
  int genus = 0;
  int frobenius = -1;
  int multiplicity = 1;
  int even_gaps = 0;
  bool has_gap_in_window = false;

  bool contains(int y) const { return y >= kWindow || dec[static_cast<std::size_t>(y)] > 0; }

  GapList gaps() const {
    GapList out;
    out.reserve(static_cast<std::size_t>(genus));
    for (int y = 1; y <= frobenius; ++y) {
      if (!contains(y)) out.push_back(y);
    }
    return out;
  }

  std::int64_t weight() const {
    std::int64_t w = 0;
    std::int64_t i = 0;
    for (int y = 1; y <= frobenius; ++y) {
      if (!contains(y)) w += y - ++i;
    }
    return w;
  }
};

Node root_node() {
  Node n;
  for (int y = 0; y < kWindow; ++y) n.dec[static_cast<std::size_t>(y)] = static_cast<std::uint8_t>(y / 2 + 1);
  return n;
}

Node remove_generator(const Node& parent, int x, const EnumerationFilter& f) {
  Node child = parent;
  for (int y = x; y < kWindow; ++y) {
    if (parent.dec[static_cast<std::size_t>(y - x)] > 0) --child.dec[static_cast<std::size_t>(y)];
  }
  child.genus = parent.genus + 1;
  child.frobenius = x;
  if (x == parent.multiplicity) child.multiplicity = x + 1;
  if (x % 2 == 0) ++child.even_gaps;
  if (f.required_gap_in && f.required_gap_in->contains(x)) child.has_gap_in_window = true;
  return child;
}

class Walker {
 public:
  Walker(int target, const EnumerationFilter& f) : target_(target), filter_(f) {}

  bool leaf_matches(const Node& n) const {
    if (filter_.min_multiplicity && n.multiplicity < *filter_.min_multiplicity) return false;
    if (filter_.even_gap_count && n.even_gaps != *filter_.even_gap_count) return false;
    if (filter_.required_gap_in && !n.has_gap_in_window) return false;
    // required_interval is enforced on every edge, so leaves already satisfy it.
    return true;
  }

  // Whether any genus-`target_` descendant of `n` (n itself included) could match.
  bool viable(const Node& n) const {
    const int remaining = target_ - n.genus;
    if (filter_.even_gap_count) {
      if (n.even_gaps > *filter_.even_gap_count) return false;
      if (n.even_gaps + remaining < *filter_.even_gap_count) return false;
    }
    if (filter_.min_multiplicity) {
      const bool ordinary = n.frobenius < n.multiplicity;
      const int reachable = ordinary ? n.multiplicity + remaining : n.multiplicity;
      if (reachable < *filter_.min_multiplicity) return false;
    }
    if (filter_.required_gap_in && !n.has_gap_in_window) {
      // Later gaps exceed the Frobenius number.
      if (remaining == 0 || n.frobenius >= filter_.required_gap_in->hi) return false;
    }
    return true;
  }

  template <class Visit>
  void children(const Node& n, Visit&& visit) const {
    const int remaining_after = target_ - n.genus - 1;
    // The last gap must stay <= 2*target - 1 and gaps strictly increase.
    const int x_max = 2 * target_ - 1 - remaining_after;
    for (int x = std::max(n.frobenius + 1, 1); x <= x_max; ++x) {
      if (n.dec[static_cast<std::size_t>(x)] != 1) continue;
      if (filter_.required_interval && filter_.required_interval->contains(x)) continue;
      Node child = remove_generator(n, x, filter_);
      if (viable(child)) visit(child);
    }
  }

  template <class Leaf>
  void descend(const Node& n, Leaf&& leaf) const {
    if (n.genus == target_) {
      if (leaf_matches(n)) leaf(n);
      return;
    }
    children(n, [&](const Node& c) { descend(c, leaf); });
  }

  // Nodes at the split depth, in tree order.
  std::vector<Node> frontier(int depth) const {
    std::vector<Node> level;
    const Node root = root_node();
    if (!viable(root)) return level;
    level.push_back(root);
    for (int d = 0; d < depth; ++d) {
      std::vector<Node> next;
      for (const Node& n : level) children(n, [&](const Node& c) { next.push_back(c); });
      level = std::move(next);
    }
    return level;
  }

 private:
  int target_;
  const EnumerationFilter& filter_;
};

// Runs the walk with one accumulator per subtree task; accumulators come
// back in task order whatever the worker count.
template <class Acc, class LeafFn>
std::vector<Acc> run_partitioned(int genus, const EnumerationFilter& filter,
                                 const EnumerationOptions& options, LeafFn on_leaf) {
  check_genus(genus, options);
  filter.validate(genus);
  const Walker walker(genus, filter);
  const int depth = std::clamp(options.split_depth, 0, genus);
  const std::vector<Node> tasks = walker.frontier(depth);
  std::vector<Acc> results(tasks.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      walker.descend(tasks[i], [&](const Node& leaf) { on_leaf(results[i], leaf); });
    }
  };
  const auto jobs = static_cast<std::size_t>(std::max(1, options.jobs));
  if (jobs == 1 || tasks.size() < 2) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < std::min(jobs, tasks.size()); ++j) pool.emplace_back(worker);
  }
  return results;
}

bool lex_less(const GapList& a, const GapList& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void observe(EnumerationStats& stats, std::int64_t w, const auto& gaps_of) {
  ++stats.filtered_count;
  if (stats.class_empty || w > stats.max_weight_seen) {
    stats.class_empty = false;
    stats.max_weight_seen = w;
    stats.argmax_gap_set = gaps_of();
  } else if (w == stats.max_weight_seen) {
    GapList gaps = gaps_of();
    if (lex_less(gaps, stats.argmax_gap_set)) stats.argmax_gap_set = std::move(gaps);
  }
}

std::vector<NumericalSemigroup> to_semigroups(std::vector<std::vector<GapList>> parts) {
  std::vector<NumericalSemigroup> out;
  for (auto& part : parts) {
    for (auto& gaps : part) out.push_back(NumericalSemigroup::from_gaps_unchecked(std::move(gaps)));
  }
  return out;
}

std::vector<GapList> enumerate_gap_lists(int genus, const EnumerationFilter& filter,
                                         const EnumerationOptions& options) {
  auto parts = run_partitioned<std::vector<GapList>>(
      genus, filter, options,
      [](std::vector<GapList>& acc, const Node& n) { acc.push_back(n.gaps()); });
  std::vector<GapList> out;
  for (auto& part : parts) {
    for (auto& gaps : part) out.push_back(std::move(gaps));
  }
  return out;
}

}  // namespace

void check_genus(int genus, const EnumerationOptions& options) {
  if (genus < 0) throw Error(ErrorCode::InvalidInput, "genus must be nonnegative");
  const int cap = std::min(options.genus_cap, kMaxSupportedGenus);
  if (genus > cap) {
    throw Error(ErrorCode::GenusTooLarge,
                "genus " + std::to_string(genus) + " exceeds cap " + std::to_string(cap));
  }
}

bool EnumerationFilter::matches(const NumericalSemigroup& s) const {
  if (min_multiplicity && s.multiplicity() < *min_multiplicity) return false;
  if (even_gap_count && wpgap::even_gap_count(s) != *even_gap_count) return false;
  if (required_interval) {
    for (int x = required_interval->lo; x <= required_interval->hi; ++x) {
      if (!s.contains(x)) return false;
    }
  }
  if (required_gap_in) {
    bool found = false;
    for (int x = required_gap_in->lo; x <= required_gap_in->hi && !found; ++x) {
      found = !s.contains(x);
    }
    if (!found) return false;
  }
  return true;
}

void EnumerationFilter::validate(int genus) const {
  auto check = [genus](const std::optional<Interval>& iv, const char* name) {
    if (!iv) return;
    if (iv->lo > iv->hi || iv->lo < 1 || iv->hi > 2 * genus - 1) {
      throw Error(ErrorCode::PreconditionViolated,
                  std::string(name) + " [" + std::to_string(iv->lo) + "," +
                      std::to_string(iv->hi) + "] must be nonempty inside [1, 2g-1] for g = " +
                      std::to_string(genus));
    }
  };
  check(required_interval, "required_interval");
  check(required_gap_in, "required_gap_in");
  if (min_multiplicity && *min_multiplicity < 1) {
    throw Error(ErrorCode::PreconditionViolated, "min_multiplicity must be positive");
  }
  if (even_gap_count && *even_gap_count < 0) {
    throw Error(ErrorCode::PreconditionViolated, "even_gap_count must be nonnegative");
  }
}

std::string EnumerationFilter::canonical() const {
  auto value = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("*"); };
  auto interval = [](const std::optional<Interval>& iv) {
    return iv ? std::to_string(iv->lo) + ":" + std::to_string(iv->hi) : std::string("*");
  };
  return "mm=" + value(min_multiplicity) + ";eg=" + value(even_gap_count) +
         ";ri=" + interval(required_interval) + ";rg=" + interval(required_gap_in);
}

void visit_filtered(int genus, const EnumerationFilter& filter,
                    const std::function<void(const NumericalSemigroup&)>& visit,
                    const EnumerationOptions& options) {
  check_genus(genus, options);
  filter.validate(genus);
  const Walker walker(genus, filter);
  const Node root = root_node();
  if (!walker.viable(root)) return;
  walker.descend(root, [&](const Node& n) {
    visit(NumericalSemigroup::from_gaps_unchecked(n.gaps()));
  });
}

std::vector<NumericalSemigroup> enumerate_genus(int genus, const EnumerationOptions& options) {
  return enumerate_filtered(genus, EnumerationFilter{}, options);
}

std::vector<NumericalSemigroup> enumerate_filtered(int genus, const EnumerationFilter& filter,
                                                   const EnumerationOptions& options) {
  check_genus(genus, options);
  filter.validate(genus);
  if (options.cache_dir) {
    const std::string key = filter.canonical();
    if (auto cached = load_cache(*options.cache_dir, genus, key)) {
      return to_semigroups({std::move(*cached)});
    }
    std::vector<GapList> lists = enumerate_gap_lists(genus, filter, options);
    store_cache(*options.cache_dir, genus, key, lists);
    return to_semigroups({std::move(lists)});
  }
  return to_semigroups({enumerate_gap_lists(genus, filter, options)});
}

std::uint64_t count_filtered(int genus, const EnumerationFilter& filter,
                             const EnumerationOptions& options) {
  const auto parts = run_partitioned<std::uint64_t>(
      genus, filter, options, [](std::uint64_t& acc, const Node&) { ++acc; });
  std::uint64_t total = 0;
  for (std::uint64_t c : parts) total += c;
  return total;
}

std::uint64_t count_genus(int genus, const EnumerationOptions& options) {
  return count_filtered(genus, EnumerationFilter{}, options);
}

void merge_stats(EnumerationStats& a, const EnumerationStats& b) {
  a.total_count = std::max(a.total_count, b.total_count);
  a.filtered_count += b.filtered_count;
  if (b.class_empty) return;
  if (a.class_empty || b.max_weight_seen > a.max_weight_seen ||
      (b.max_weight_seen == a.max_weight_seen && lex_less(b.argmax_gap_set, a.argmax_gap_set))) {
    a.max_weight_seen = b.max_weight_seen;
    a.argmax_gap_set = b.argmax_gap_set;
  }
  a.class_empty = false;
}

EnumerationStats scan_max_weight(int genus, const EnumerationFilter& filter,
                                 const EnumerationOptions& options,
                                 const SemigroupPredicate& extra) {
  EnumerationStats stats;
  stats.genus = genus;

  if (options.cache_dir) {
    for (const NumericalSemigroup& s : enumerate_filtered(genus, filter, options)) {
      if (extra && !extra(s)) continue;
      observe(stats, weight(s), [&] { return s.gaps(); });
    }
  } else {
    const auto parts = run_partitioned<EnumerationStats>(
        genus, filter, options, [&](EnumerationStats& acc, const Node& n) {
          if (extra) {
            const NumericalSemigroup s = NumericalSemigroup::from_gaps_unchecked(n.gaps());
            if (!extra(s)) return;
            observe(acc, weight(s), [&] { return s.gaps(); });
          } else {
            observe(acc, n.weight(), [&] { return n.gaps(); });
          }
        });
    for (const EnumerationStats& part : parts) merge_stats(stats, part);
  }
  EnumerationOptions unfiltered = options;
  unfiltered.cache_dir.reset();
  stats.total_count = count_genus(genus, unfiltered);
  stats.genus = genus;
  return stats;
}

}  // namespace wpgap
