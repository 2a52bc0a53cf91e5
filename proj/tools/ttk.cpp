// ttk: command-line front end for the twisted torus knot pipeline.
//
// Exit codes: 0 success, 2 validation error, 3 Whitehead budget exhausted,
// 4 verification failure or internal inconsistency.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ttk/classify.hpp"
#include "ttk/errors.hpp"
#include "ttk/serialize.hpp"
#include "ttk/surgery.hpp"
#include "ttk/verify.hpp"
#include "ttk/whitehead.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;
constexpr int kExitVerify = 4;

constexpr std::size_t kMinBudget = 10'000;
// Largest fiber sum tried when a side has no closed-form match.
constexpr ttk::Int kSearchMaxSum = 12;

struct Config {
  std::string format;
  std::optional<std::size_t> budget;
};

ttk::TtkParams params_from_args(const std::vector<std::string>& args) {
  if (args.size() == 1) return ttk::parse_params(args[0]);
  if (args.size() != 5) throw ttk::ValidationError("expected p q r m n (or \"p,q,r,m,n\")");
  std::string joined;
  for (const auto& a : args) joined += (joined.empty() ? "" : ",") + a;
  return ttk::parse_params(joined);
}

ttk::SearchOptions search_options(const Config& cfg) {
  ttk::SearchOptions opts;
  if (const char* env = std::getenv("TTK_WHITEHEAD_BUDGET")) {
    try {
      opts.node_budget = std::stoull(env);
    } catch (const std::exception&) {
      throw ttk::ValidationError(std::string("TTK_WHITEHEAD_BUDGET is not an integer: ") + env);
    }
  }
  if (cfg.budget) opts.node_budget = *cfg.budget;
  if (opts.node_budget < kMinBudget) throw ttk::ValidationError("the Whitehead budget must be at least 10000");
  return opts;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw ttk::ValidationError("format '" + format + "' is not supported by this command");
}

int cmd_word(const Config& cfg, const std::vector<std::string>& args, const std::string& side) {
  const std::string format = cfg.format.empty() ? "text" : cfg.format;
  require_format(format, {"text", "json"});
  const ttk::TtkParams k = params_from_args(args);
  std::string text;
  if (side == "inside") {
    text = ttk::format_word(ttk::ttk_word(k));
  } else if (side == "outside") {
    text = ttk::format_word(ttk::ttk_word_outside(k));
  } else {
    if (k.p < 1) throw ttk::ValidationError("pattern requires p >= 1");
    text = ttk::jump_pattern(k.p, k.q, k.r % k.p).str();
  }
  if (format == "json") {
    std::cout << ttk::Json{{"params", ttk::to_json(k)}, {"side", side}, {"word", text}}.dump(2) << '\n';
  } else {
    std::cout << text << '\n';
  }
  return kExitOk;
}

ttk::Json oracle_side(const ttk::Word& w, const ttk::SfClassification& c, const ttk::SearchOptions& opts,
                      bool& disagree) {
  const bool primitive = ttk::is_primitive_oracle(w, opts);
  if (primitive != c.is_primitive()) disagree = true;
  ttk::Json j{{"primitive", primitive}};
  if (!primitive && c.matches.empty()) {
    const auto fibers = ttk::search_sf_fibers(w, kSearchMaxSum, opts);
    j["sf_search"] = fibers ? ttk::Json::array({fibers->a, fibers->b}) : ttk::Json("not detected");
  }
  return j;
}

int cmd_surgery(const Config& cfg, const std::vector<std::string>& args) {
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  require_format(format, {"json", "text"});
  const ttk::SearchOptions opts = search_options(cfg);
  const ttk::TtkParams k = params_from_args(args);
  const ttk::PsfReport report = ttk::psf_report(k);
  ttk::Json out = ttk::to_json(report);

  std::optional<ttk::MultiplicityResult> triple;
  std::optional<ttk::NonTorusCertificate> cert;
  const bool middle = std::any_of(report.inside.matches.begin(), report.inside.matches.end(),
                                  [](const ttk::SfMatch& m) { return std::holds_alternative<ttk::MiddleSf>(m); });
  if (k.m == 1 && ttk::abs_int(k.n) == 1 && middle && report.outside.is_primitive() &&
      !report.flags.is_torus_degenerate && !report.inside.is_primitive()) {
    triple = ttk::multiplicity_triple(k);
    cert = ttk::nontorus_certificate(k, triple->slope, triple->mu);
    out["mu"] = ttk::mu_to_json(*triple);
    out["certificates"] = ttk::to_json(*cert);
  }

  bool disagree = false;
  out["oracle"] = {{"inside", oracle_side(ttk::ttk_word(k), report.inside, opts, disagree)},
                   {"outside", oracle_side(ttk::ttk_word_outside(k), report.outside, opts, disagree)}};

  if (format == "json") {
    std::cout << out.dump(2) << '\n';
  } else {
    const auto& f = report.flags;
    std::cout << "K(" << ttk::format_params(k) << ")\n"
              << "slope " << report.surface_slope << '\n'
              << "inside " << (report.inside.matches.empty() ? "none" : "") ;
    for (const auto& m : report.inside.matches) std::cout << ttk::match_name(m) << ' ';
    std::cout << "\noutside " << (report.outside.matches.empty() ? "none" : "");
    for (const auto& m : report.outside.matches) std::cout << ttk::match_name(m) << ' ';
    std::cout << "\nflags torus_degenerate=" << f.is_torus_degenerate << " doubly_primitive=" << f.is_doubly_primitive
              << " primitive_sf=" << f.is_primitive_sf << " doubly_sf=" << f.is_doubly_sf << '\n';
    if (triple) {
      std::cout << "mu ";
      if (triple->is_connected_sum()) {
        std::cout << "connected_sum\n";
      } else {
        std::cout << triple->mu[0] << ' ' << triple->mu[1] << ' ' << triple->mu[2] << '\n';
      }
      std::cout << "certified " << (cert->certified ? "yes" : "no") << '\n';
    }
  }
  if (disagree) {
    std::cerr << "verification failure: closed-form primitivity disagrees with the Whitehead oracle\n";
    return kExitVerify;
  }
  return kExitOk;
}

void print_records(const std::vector<ttk::KnotRecord>& records, const std::string& format) {
  if (format == "json") {
    ttk::Json arr = ttk::Json::array();
    for (const auto& rec : records) arr.push_back(ttk::to_json(rec));
    std::cout << arr.dump(2) << '\n';
  } else if (format == "tsv") {
    std::cout << ttk::tsv_header() << '\n';
    for (const auto& rec : records) std::cout << ttk::to_tsv_row(rec) << '\n';
  } else {
    for (const auto& rec : records) std::cout << ttk::to_text(rec) << '\n';
  }
}

int cmd_realize(const Config& cfg, const std::vector<ttk::Int>& mu, bool positive) {
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  require_format(format, {"json", "tsv", "text"});
  if (mu.size() != 3) throw ttk::ValidationError("expected three multiplicities");
  const auto rec = ttk::realize_triple(mu[0], mu[1], mu[2],
                                       positive ? ttk::RealizationVariant::Positive : ttk::RealizationVariant::Negative);
  if (format == "json") {
    std::cout << ttk::to_json(rec).dump(2) << '\n';
  } else {
    print_records({rec}, format);
  }
  return kExitOk;
}

int cmd_enumerate(const Config& cfg, ttk::Int max_p, std::optional<ttk::Int> max_q, int family,
                  std::optional<int> eps) {
  const std::string format = cfg.format.empty() ? "tsv" : cfg.format;
  require_format(format, {"json", "tsv", "text"});
  if (max_p < 1 || (max_q && *max_q < 1)) throw ttk::ValidationError("bounds must be >= 1");
  if (family < 0 || family > 5) throw ttk::ValidationError("--family must be 1..5");
  if (eps && *eps != 1 && *eps != -1) throw ttk::ValidationError("--eps must be 1 or -1");
  std::vector<ttk::KnotRecord> records;
  for (auto& rec : ttk::enumerate_middle_psf(max_p, max_q)) {
    if (family != 0 && rec.family != family) continue;
    if (eps && rec.params.n != *eps) continue;
    records.push_back(std::move(rec));
  }
  print_records(records, format);
  return kExitOk;
}

int cmd_verify(const Config& cfg, const std::string& level) {
  const std::string format = cfg.format.empty() ? "text" : cfg.format;
  require_format(format, {"text", "json"});
  if (level != "quick" && level != "full") throw ttk::ValidationError("--level must be quick or full");
  const auto results =
      ttk::run_verification(level == "full" ? ttk::VerifyLevel::Full : ttk::VerifyLevel::Quick, search_options(cfg));
  bool all = true;
  ttk::Json arr = ttk::Json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    arr.push_back({{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}, {"notes", r.notes}});
  }
  if (format == "json") {
    std::cout << ttk::Json{{"level", level}, {"passed", all}, {"checks", arr}}.dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      std::ostringstream line;
      line << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)";
      if (!r.passed) line << ": " << r.detail;
      std::cout << line.str() << '\n';
      for (const auto& note : r.notes) std::cout << "     note: " << note << '\n';
    }
    std::cout << (all ? "all checks passed" : "verification failed") << '\n';
  }
  return all ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted torus knots: words, primitive/Seifert-fibered classification and surgery multiplicities"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  std::size_t budget = 0;
  app.add_option("--format", cfg.format, "Output format: json, tsv or text");
  auto* budget_opt = app.add_option("--budget", budget, "Whitehead search node budget (>= 10000)");

  std::vector<std::string> word_args;
  std::string side = "inside";
  auto* word = app.add_subcommand("word", "Print the inside or outside word, or the A/B pattern");
  word->add_option("params", word_args, "p q r m n")->required();
  word->add_option("--side", side, "inside, outside or pattern")->check(CLI::IsMember({"inside", "outside", "pattern"}));

  std::vector<std::string> surgery_args;
  auto* surgery = app.add_subcommand("surgery", "Primitive/Seifert-fibered report and surgery multiplicities");
  surgery->add_option("params", surgery_args, "p q r m n")->required();

  std::vector<ttk::Int> mu;
  auto* realize = app.add_subcommand("realize", "Family-2 knot realizing a multiplicity triple");
  realize->add_option("mu", mu, "mu1 mu2 mu3")->required()->expected(3);
  auto* negative = realize->add_flag("--negative", "Negative twisting (default)");
  auto* positive = realize->add_flag("--positive", "Positive twisting");
  negative->excludes(positive);

  ttk::Int max_p = 20;
  ttk::Int max_q_value = 0;
  int family = 0;
  int eps_value = 0;
  auto* enumerate = app.add_subcommand("enumerate", "List primitive/middle-SF knots of the five families");
  enumerate->add_option("--max-p", max_p, "Largest p");
  auto* max_q_opt = enumerate->add_option("--max-q", max_q_value, "Largest q (default 3 * max-p)");
  enumerate->add_option("--family", family, "Restrict to one family (1..5)");
  auto* eps_opt = enumerate->add_option("--eps", eps_value, "Restrict to twisting sign 1 or -1");

  std::string level = "quick";
  auto* verify = app.add_subcommand("verify", "Run the property suites");
  verify->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }
  if (*budget_opt) cfg.budget = budget;

  try {
    if (*word) return cmd_word(cfg, word_args, side);
    if (*surgery) return cmd_surgery(cfg, surgery_args);
    if (*realize) return cmd_realize(cfg, mu, positive->count() > 0);
    if (*enumerate) {
      return cmd_enumerate(cfg, max_p, *max_q_opt ? std::optional<ttk::Int>(max_q_value) : std::nullopt, family,
                           *eps_opt ? std::optional<int>(eps_value) : std::nullopt);
    }
    if (*verify) return cmd_verify(cfg, level);
  } catch (const ttk::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ttk::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ttk::InconsistencyError& e) {
    std::cerr << "inconsistency: " << e.what() << '\n';
    return kExitVerify;
  }
  return kExitValidation;
}
