#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wpgap/bounds.hpp"
#include "wpgap/enumeration.hpp"
#include "wpgap/error.hpp"
#include "wpgap/hyperelliptic.hpp"
#include "wpgap/semigroup.hpp"

namespace wpgap::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Range {
  int lo = 0;
  int hi = 0;
};

// Thrown for flag values that parse but make no sense; maps to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Range parse_range(const std::string& text, const char* flag) {
  const std::size_t colon = text.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument("no colon");
    std::size_t used_lo = 0;
    std::size_t used_hi = 0;
    const std::string lo = text.substr(0, colon);
    const std::string hi = text.substr(colon + 1);
    Range r{std::stoi(lo, &used_lo), std::stoi(hi, &used_hi)};
    if (used_lo != lo.size() || used_hi != hi.size()) throw std::invalid_argument("trailing");
    if (r.lo > r.hi) throw std::invalid_argument("reversed");
    return r;
  } catch (const std::exception&) {
    throw UsageError(std::string(flag) + " expects A:B with A <= B, got '" + text + "'");
  }
}

Json report_header(const std::string& command) {
  Json j;
  j["wpgap_report"] = 1;
  j["command"] = command;
  return j;
}

std::string rational_text(const Rational& q) { return q.str(); }

Json optional_rational(const std::optional<Rational>& q) {
  return q ? Json(rational_text(*q)) : Json(nullptr);
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

struct CommonEnumerationFlags {
  int jobs = 1;
  int max_genus = kDefaultGenusCap;
  std::string cache_dir;

  void attach(CLI::App* app) {
    app->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    app->add_option("--max-genus", max_genus, "genus cap for enumeration");
    app->add_option("--cache-dir", cache_dir, "enumeration cache directory (overrides WPGAP_CACHE_DIR)");
  }

  EnumerationOptions options() const {
    EnumerationOptions o;
    o.jobs = jobs;
    o.genus_cap = max_genus;
    if (!cache_dir.empty()) {
      o.cache_dir = cache_dir;
    } else if (const char* env = std::getenv("WPGAP_CACHE_DIR"); env && *env) {
      o.cache_dir = env;
    }
    return o;
  }
};

// ---- enumerate ----------------------------------------------------------

struct EnumerateArgs {
  int genus = 0;
  std::optional<int> min_mult;
  std::optional<int> even_gaps;
  std::string require_interval;
  std::string require_gap_in;
  std::string format = "lines";
  bool sorted = false;
  CommonEnumerationFlags common;
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
  EnumerationFilter f;
  f.min_multiplicity = a.min_mult;
  f.even_gap_count = a.even_gaps;
  if (!a.require_interval.empty()) {
    const Range r = parse_range(a.require_interval, "--require-interval");
    f.required_interval = Interval{r.lo, r.hi};
  }
  if (!a.require_gap_in.empty()) {
    const Range r = parse_range(a.require_gap_in, "--require-gap-in");
    f.required_gap_in = Interval{r.lo, r.hi};
  }
  std::vector<NumericalSemigroup> found = enumerate_filtered(a.genus, f, a.common.options());
  if (a.sorted) {
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
      return std::lexicographical_compare(x.gaps().begin(), x.gaps().end(), y.gaps().begin(),
                                          y.gaps().end());
    });
  }

  if (a.format == "lines") {
    for (const auto& s : found) out << format_gaps(s.gaps()) << '\n';
  } else if (a.format == "csv") {
    out << "genus,multiplicity,conductor,weight,even_gaps,gaps\n";
    for (const auto& s : found) {
      std::string gaps = format_gaps(s.gaps());
      std::replace(gaps.begin(), gaps.end(), ',', ';');
      out << s.genus() << ',' << s.multiplicity() << ',' << s.conductor() << ',' << weight(s)
          << ',' << even_gap_count(s) << ',' << gaps << '\n';
    }
  } else {
    Json j = report_header("enumerate");
    j["genus"] = a.genus;
    j["filter"] = f.canonical();
    j["count"] = found.size();
    Json list = Json::array();
    for (const auto& s : found) list.push_back(s.gaps());
    j["semigroups"] = std::move(list);
    emit(out, j);
  }
  return kExitOk;
}

// ---- weight / classify --------------------------------------------------

Json describe(const NumericalSemigroup& s) {
  Json j;
  j["gaps"] = s.gaps();
  j["genus"] = s.genus();
  j["multiplicity"] = s.multiplicity();
  j["conductor"] = s.conductor();
  j["weight"] = weight(s);
  j["even_gaps"] = even_gap_count(s);
  return j;
}

int cmd_weight(const std::string& gaps, std::ostream& out) {
  const NumericalSemigroup s = NumericalSemigroup::from_gaps(parse_gaps(gaps));
  Json j = report_header("weight");
  j.update(describe(s));
  emit(out, j);
  return kExitOk;
}

int cmd_classify(const std::string& gaps, int gamma, std::ostream& out) {
  const NumericalSemigroup s = NumericalSemigroup::from_gaps(parse_gaps(gaps));
  Json j = report_header("classify");
  j.update(describe(s));
  j["gamma"] = gamma;
  if (even_gap_count(s) == gamma) {
    j["ramified_class"] = std::string(to_string(classify_ramified(s, gamma)));
    j["odd_nongaps"] = odd_nongap_profile(s, gamma).u;
    j["min_even_nongap_check"] = min_even_nongap_check(s, gamma);
  } else {
    j["ramified_class"] = nullptr;
  }
  if (s.genus() >= 2 * gamma && is_type3_candidate(s, gamma)) {
    j["unramified_case"] = std::string(to_string(classify_unramified(s, gamma)));
  } else {
    j["unramified_case"] = nullptr;
  }
  j["even_nongap_sum"] = even_nongap_sum(s);
  emit(out, j);
  return kExitOk;
}

// ---- verify -------------------------------------------------------------

struct VerifyLemmaArgs {
  int gamma = 0;
  std::string genus_range;
  std::string lemma_class;
  CommonEnumerationFlags common;
};

int cmd_verify_lemma(const VerifyLemmaArgs& a, std::ostream& out) {
  const Range r = parse_range(a.genus_range, "--genus-range");
  const auto cls = parse_lemma_class(a.lemma_class);
  if (!cls) throw UsageError("--class must be one of I, II, a, b, III");

  Json j = report_header("verify lemma");
  j["gamma"] = a.gamma;
  j["class"] = a.lemma_class;
  Json results = Json::array();
  bool all_hold = true;
  for (int g = r.lo; g <= r.hi; ++g) {
    const LemmaVerdict v = verify_lemma(g, a.gamma, *cls, a.common.options());
    Json row;
    row["g"] = g;
    row["class"] = std::string(to_string(v.lemma_class));
    row["bound"] = v.bound;
    row["class_size"] = v.class_size;
    row["class_empty"] = v.class_empty;
    row["max_observed"] = v.class_empty ? Json(nullptr) : Json(v.max_observed);
    row["witness"] = v.class_empty ? Json(nullptr) : Json(v.witness);
    row["holds"] = v.holds;
    all_hold = all_hold && v.holds;
    results.push_back(std::move(row));
  }
  j["results"] = std::move(results);
  j["all_hold"] = all_hold;
  emit(out, j);
  return all_hold ? kExitOk : kExitCheckFailed;
}

struct VerifyTheoremArgs {
  int gamma = 0;
  std::optional<int> genus;
  std::string genus_range;
  std::string t_policy = "min";
  int jobs = 1;
};

Json criterion_json(const CriterionReport& rep) {
  Json row;
  row["g"] = rep.g;
  row["gamma"] = rep.gamma;
  row["t_policy"] = std::string(to_string(rep.policy));
  row["t_used"] = rep.t_used;
  row["ramified"] = rep.ramified;
  row["c1"] = rep.c1;
  row["c2"] = rep.c2;
  row["c3"] = rep.c3;
  row["c3_branch"] = std::string(to_string(rep.c3_branch));
  row["numerator"] = rep.numerator;
  row["nonpositive_bound"] = rep.nonpositive_bound;
  row["W1_lower"] = rep.W1_lower;
  row["N"] = rep.N_g_1;
  row["holds"] = rep.holds;
  row["closed_form_value"] = optional_rational(rep.closed_form_value);
  row["branch2_value"] = optional_rational(rep.branch2_value);
  return row;
}

int cmd_verify_theorem(const VerifyTheoremArgs& a, std::ostream& out) {
  Range r{};
  if (a.genus && !a.genus_range.empty()) throw UsageError("use either --genus or --genus-range");
  if (a.genus) {
    r = {*a.genus, *a.genus};
  } else if (!a.genus_range.empty()) {
    r = parse_range(a.genus_range, "--genus-range");
  } else {
    throw UsageError("one of --genus or --genus-range is required");
  }
  TPolicy policy = TPolicy::Min;
  if (a.t_policy == "paper") {
    policy = TPolicy::Paper;
  } else if (a.t_policy != "min") {
    throw UsageError("--t-policy must be paper or min");
  }

  Json j = report_header("verify theorem");
  j["gamma"] = a.gamma;
  j["t_policy"] = a.t_policy;
  Json results = Json::array();
  bool all_hold = true;
  for (int g = r.lo; g <= r.hi; ++g) {
    const CriterionReport rep = theorem_pipeline(g, a.gamma, policy);
    all_hold = all_hold && rep.holds;
    results.push_back(criterion_json(rep));
  }
  j["results"] = std::move(results);
  j["all_hold"] = all_hold;
  emit(out, j);
  return all_hold ? kExitOk : kExitCheckFailed;
}

struct VerifyPropertiesArgs {
  std::string genus_range;
  std::string gamma_range;
  std::vector<std::string> checks;
  CommonEnumerationFlags common;
};

int cmd_verify_properties(const VerifyPropertiesArgs& a, std::ostream& out) {
  const Range gr = parse_range(a.genus_range, "--genus-range");
  const Range cr = parse_range(a.gamma_range, "--gamma-range");
  std::vector<CandidateCheck> checks;
  for (const std::string& name : a.checks) {
    const auto c = parse_candidate_check(name);
    if (!c) throw UsageError("unknown check '" + name + "'");
    checks.push_back(*c);
  }
  if (checks.empty()) checks.assign(std::begin(kAllCandidateChecks), std::end(kAllCandidateChecks));

  const PropertyReport rep =
      scan_candidate_properties(gr.lo, gr.hi, cr.lo, cr.hi, checks, a.common.options());
  Json j = report_header("verify properties");
  j["genus_range"] = {gr.lo, gr.hi};
  j["gamma_range"] = {cr.lo, cr.hi};
  Json tallies = Json::array();
  for (const PropertyTally& t : rep.tallies) {
    tallies.push_back({{"check", std::string(to_string(t.check))},
                       {"examined", t.examined},
                       {"violations", t.violations}});
  }
  j["checks"] = std::move(tallies);
  Json findings = Json::array();
  for (const PropertyFinding& f : rep.findings) {
    findings.push_back({{"check", std::string(to_string(f.check))},
                        {"g", f.g},
                        {"gamma", f.gamma},
                        {"gaps", f.gaps},
                        {"observed", f.observed},
                        {"expected", f.expected}});
  }
  j["findings"] = std::move(findings);
  j["all_hold"] = rep.all_hold();
  emit(out, j);
  return rep.all_hold() ? kExitOk : kExitCheckFailed;
}

// ---- table --------------------------------------------------------------

int cmd_table_thresholds(const std::string& gamma_range, int g_max, std::ostream& out) {
  const Range r = parse_range(gamma_range, "--gamma-range");
  out << "gamma,closed_form_threshold,exact_min_genus\n";
  for (int gamma = r.lo; gamma <= r.hi; ++gamma) {
    const auto exact = exact_min_genus(gamma, g_max);
    out << gamma << ',' << genus_threshold(gamma) << ','
        << (exact ? std::to_string(*exact) : std::string("none")) << '\n';
  }
  return kExitOk;
}

int cmd_table_bounds(int gamma, const std::string& genus_range, std::ostream& out) {
  const Range r = parse_range(genus_range, "--genus-range");
  if (r.lo < 2 * gamma || r.lo < 2) throw UsageError("bounds table needs g >= max(2, 2*gamma)");
  out << "g,c1,c2,c3,N,omega1\n";
  for (int g = r.lo; g <= r.hi; ++g) {
    const BoundSet b = bound_set(g, gamma, 1);
    out << g << ',' << b.c1 << ',' << b.c2 << ',' << *b.c3 << ',' << b.n_bound << ',' << b.omega
        << '\n';
  }
  return kExitOk;
}

int cmd_table_pflaum(const std::string& genus_range, int n, std::ostream& out) {
  const Range r = parse_range(genus_range, "--genus-range");
  if (n < 2) throw UsageError("--n must be >= 2");
  if (r.lo < 2) throw UsageError("genus must be >= 2");
  out << "g,n,omega_n,W_lower,N,holds\n";
  for (int g = r.lo; g <= r.hi; ++g) {
    const std::int64_t w = homma_ommori_lower_Wn(g, n);
    const std::int64_t bound = pflaum_bound(g, n);
    out << g << ',' << n << ',' << omega(g, n) << ',' << w << ',' << bound << ','
        << bool_text(w > bound) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"wpgap: numerical semigroups, Weierstrass weights and double-covering bounds"};
  app.name("wpgap");
  app.require_subcommand(1);

  int exit_code = kExitOk;
  std::function<int()> action;

  EnumerateArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "list semigroups of a genus");
  enumerate->add_option("--genus", en.genus)->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--min-mult", en.min_mult);
  enumerate->add_option("--even-gaps", en.even_gaps);
  enumerate->add_option("--require-interval", en.require_interval, "A:B inside the semigroup");
  enumerate->add_option("--require-gap-in", en.require_gap_in, "A:B containing a gap");
  enumerate->add_option("--format", en.format)->check(CLI::IsMember({"lines", "csv", "json"}));
  enumerate->add_flag("--sorted", en.sorted);
  en.common.attach(enumerate);
  enumerate->callback([&] { action = [&] { return cmd_enumerate(en, out); }; });

  std::string weight_gaps;
  auto* weight_cmd = app.add_subcommand("weight", "weight and invariants of a gap set");
  weight_cmd->add_option("--gaps", weight_gaps, "comma-separated gaps")->required();
  weight_cmd->callback([&] { action = [&] { return cmd_weight(weight_gaps, out); }; });

  std::string classify_gaps;
  int classify_gamma = 0;
  auto* classify = app.add_subcommand("classify", "double-covering classification of a gap set");
  classify->add_option("--gaps", classify_gaps)->required();
  classify->add_option("--gamma", classify_gamma)->required()->check(CLI::NonNegativeNumber);
  classify->callback([&] { action = [&] { return cmd_classify(classify_gaps, classify_gamma, out); }; });

  auto* verify = app.add_subcommand("verify", "verification runs");
  verify->require_subcommand(1);

  VerifyLemmaArgs vl;
  auto* lemma = verify->add_subcommand("lemma", "exhaustive per-point weight bound check");
  lemma->add_option("--gamma", vl.gamma)->required()->check(CLI::NonNegativeNumber);
  lemma->add_option("--genus-range", vl.genus_range)->required();
  lemma->add_option("--class", vl.lemma_class)->required();
  vl.common.attach(lemma);
  lemma->callback([&] { action = [&] { return cmd_verify_lemma(vl, out); }; });

  VerifyTheoremArgs vt;
  auto* theorem = verify->add_subcommand("theorem", "counting pipeline W1 > N(g,1)");
  theorem->add_option("--gamma", vt.gamma)->required();
  theorem->add_option("--genus", vt.genus);
  theorem->add_option("--genus-range", vt.genus_range);
  theorem->add_option("--t-policy", vt.t_policy);
  theorem->add_option("--jobs", vt.jobs)->check(CLI::PositiveNumber);
  theorem->callback([&] { action = [&] { return cmd_verify_theorem(vt, out); }; });

  VerifyPropertiesArgs vp;
  auto* properties = verify->add_subcommand("properties", "structural checks on gamma-even-gap candidates");
  properties->add_option("--genus-range", vp.genus_range)->required();
  properties->add_option("--gamma-range", vp.gamma_range)->required();
  properties->add_option("--check", vp.checks, "check name (repeatable; default all)");
  vp.common.attach(properties);
  properties->callback([&] { action = [&] { return cmd_verify_properties(vp, out); }; });

  auto* table = app.add_subcommand("table", "CSV tables");
  table->require_subcommand(1);

  std::string th_gamma_range;
  int th_g_max = 500;
  auto* thresholds = table->add_subcommand("thresholds", "closed-form and exact genus thresholds");
  thresholds->add_option("--gamma-range", th_gamma_range)->required();
  thresholds->add_option("--g-max", th_g_max, "upper end of the exact scan");
  thresholds->callback([&] { action = [&] { return cmd_table_thresholds(th_gamma_range, th_g_max, out); }; });

  int tb_gamma = 0;
  std::string tb_genus_range;
  auto* bounds = table->add_subcommand("bounds", "c1, c2, c3, N(g,1), omega_1 per genus");
  bounds->add_option("--gamma", tb_gamma)->required()->check(CLI::NonNegativeNumber);
  bounds->add_option("--genus-range", tb_genus_range)->required();
  bounds->callback([&] { action = [&] { return cmd_table_bounds(tb_gamma, tb_genus_range, out); }; });

  std::string pf_genus_range;
  int pf_n = 2;
  auto* pflaum = table->add_subcommand("pflaum-n2", "n-Weierstrass point counts for n >= 2");
  pflaum->add_option("--genus-range", pf_genus_range)->required();
  pflaum->add_option("--n", pf_n);
  pflaum->callback([&] { action = [&] { return cmd_table_pflaum(pf_genus_range, pf_n, out); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    exit_code = action ? action() : kExitUsage;
  } catch (const UsageError& e) {
    err << "wpgap: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "wpgap: " << e.what() << '\n';
    return e.code() == ErrorCode::GenusTooLarge ? kExitResourceCap : kExitUsage;
  }
  return exit_code;
}

}  // namespace wpgap::cli
