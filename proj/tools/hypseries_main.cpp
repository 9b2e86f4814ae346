// Command-line front end: expand series, run identity checks, evaluate the
// numeric summation formulas, and list the registry.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hypseries/verify.hpp"

namespace hv = hypseries::verify;
namespace hs = hypseries;
namespace sf = hypseries::specfun;

namespace {

constexpr const char* kVersion = "hypseries 0.1.0";

struct CommonOpts {
  int order = 12;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string format = "text";
};

std::uint64_t effective_seed(const CommonOpts& o) {
  if (o.seed_set) return o.seed;
  if (const char* env = std::getenv("HYPSERIES_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      return 0;
    }
  }
  return o.seed;
}

void print_header(const CommonOpts& o, std::uint64_t seed, const std::string& extra) {
  if (o.format == "json") {
    nlohmann::json j;
    j["suite"] = kVersion;
    j["registry_hash"] = hv::registry_hash();
    j["order"] = o.order;
    j["seed"] = seed;
    if (!extra.empty()) j["config"] = extra;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << kVersion << " | registry " << hv::registry_hash() << " | order " << o.order
              << " | seed " << seed;
    if (!extra.empty()) std::cout << " | " << extra;
    std::cout << "\n";
  }
}

std::vector<hs::FieldElem> parse_list(const std::string& text) {
  std::vector<hs::FieldElem> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(hs::FieldElem::parse(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(hs::FieldElem::parse(cur));
  return out;
}

hv::Overrides parse_overrides(const std::vector<std::string>& kvs) {
  hv::Overrides out;
  for (const auto& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos)
      hs::fail(hs::Errc::UsageError, "--param expects name=value, got " + kv);
    out.emplace(kv.substr(0, eq), hs::FieldElem::parse(kv.substr(eq + 1)));
  }
  return out;
}

void print_report(const hv::CheckReport& r, const std::string& format) {
  if (format == "json") {
    std::cout << r.to_json().dump() << "\n";
    return;
  }
  std::cout << (r.outcome == hv::Outcome::Pass   ? "PASS "
                : r.outcome == hv::Outcome::Fail ? "FAIL "
                                                 : "ERROR")
            << "  " << r.id << "  [" << r.regime << "]  (" << r.params << ")";
  if (!r.detail.empty()) std::cout << "\n       " << r.detail;
  std::cout << "\n";
}

int outcome_exit(const std::vector<hv::CheckReport>& reports) {
  for (const auto& r : reports) {
    if (r.regime == "evidence") continue;
    if (r.outcome != hv::Outcome::Pass) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(kVersion) +
               " - exact checks for hypergeometric-series identities"};
  app.require_subcommand(1);

  CommonOpts opts;

  // ---- list ----------------------------------------------------------------
  auto* cmd_list = app.add_subcommand("list", "list registered identity checks");
  std::string list_format = "text";
  cmd_list->add_option("--format", list_format, "text|json");

  // ---- expand --------------------------------------------------------------
  auto* cmd_expand = app.add_subcommand("expand", "expand a family or kernel as a series");
  std::string expand_kind = "family";
  std::string expand_id;
  std::string upper_text, lower_text, bs_text, slopes_text, vars_text = "x";
  int fn_index = 1;
  cmd_expand->add_option("kind", expand_kind, "family|kernel")->required();
  cmd_expand->add_option("id", expand_id, "name (see list of families/kernels)")->required();
  cmd_expand->add_option("--order", opts.order, "truncation order");
  cmd_expand->add_option("--upper,--a", upper_text, "comma-separated upper parameters");
  cmd_expand->add_option("--lower,--c", lower_text, "comma-separated lower parameters");
  cmd_expand->add_option("--b", bs_text, "comma-separated b parameters");
  cmd_expand->add_option("--slopes", slopes_text, "comma-separated slopes");
  cmd_expand->add_option("--vars", vars_text, "comma-separated variable names");
  cmd_expand->add_option("--n", fn_index, "index for the fn kernel / multivariate arity");
  cmd_expand->add_option("--format", opts.format, "text|json");
  bool expand_rep = false;
  cmd_expand->add_flag("--rep", expand_rep, "expand through the operator representation");

  // ---- check ---------------------------------------------------------------
  auto* cmd_check = app.add_subcommand("check", "check one identity");
  std::string check_id;
  std::vector<std::string> check_params;
  int check_draws = 1;
  cmd_check->add_option("id", check_id, "identity id")->required();
  cmd_check->add_option("--order", opts.order, "truncation order");
  auto* seed_opt = cmd_check->add_option("--seed", opts.seed, "draw seed");
  cmd_check->add_option("--param", check_params, "override parameter, name=value");
  cmd_check->add_option("--draws", check_draws, "number of draws");
  cmd_check->add_option("--format", opts.format, "text|json");
  bool check_evidence = false;
  cmd_check->add_flag("--evidence", check_evidence, "allow conjecture-evidence regimes");

  // ---- check-all -----------------------------------------------------------
  auto* cmd_all = app.add_subcommand("check-all", "run the whole registry");
  std::string filter;
  int all_draws = 3;
  bool evidence = false;
  cmd_all->add_option("--order", opts.order, "truncation order");
  auto* seed_opt2 = cmd_all->add_option("--seed", opts.seed, "draw seed");
  cmd_all->add_option("--filter", filter, "glob filter on identity ids");
  cmd_all->add_option("--draws", all_draws, "draws per case");
  cmd_all->add_flag("--evidence", evidence, "also run conjecture-evidence cases");
  cmd_all->add_option("--format", opts.format, "text|json");

  // ---- eval ----------------------------------------------------------------
  auto* cmd_eval = app.add_subcommand("eval", "numeric evaluation/checks");
  std::string eval_id;
  std::string eval_upper, eval_lower, eval_x = "0.25";
  std::vector<std::string> eval_params;
  cmd_eval->add_option("id", eval_id, "numeric check id, or 'pfq' for an ad-hoc series")
      ->required();
  cmd_eval->add_option("--upper,--a", eval_upper, "upper parameters (pfq mode)");
  cmd_eval->add_option("--lower,--c", eval_lower, "lower parameters (pfq mode)");
  cmd_eval->add_option("--x", eval_x, "argument (pfq mode)");
  cmd_eval->add_option("--param", eval_params, "override parameter, name=value");
  auto* seed_opt3 = cmd_eval->add_option("--seed", opts.seed, "draw seed");
  cmd_eval->add_option("--format", opts.format, "text|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_list->parsed()) {
      for (const auto& c : hv::registry()) {
        if (list_format == "json") {
          nlohmann::json j;
          j["id"] = c.id;
          j["kind"] = hv::kind_name(c.kind);
          j["field"] = c.field_req;
          j["status"] = hv::status_name(c.status);
          j["evidence_only"] = c.evidence_only;
          if (!c.note.empty()) j["note"] = c.note;
          std::cout << j.dump() << "\n";
        } else {
          std::cout << c.id << "  [" << hv::kind_name(c.kind) << ", " << c.field_req << ", "
                    << hv::status_name(c.status) << (c.evidence_only ? ", evidence-only" : "")
                    << "]\n";
        }
      }
      return 0;
    }

    if (cmd_expand->parsed()) {
      sf::FamilyParams p;
      p.upper = parse_list(upper_text);
      p.lower = parse_list(lower_text);
      p.bs = parse_list(bs_text);
      p.slopes = parse_list(slopes_text);
      p.n = fn_index;
      std::vector<std::string> vars;
      {
        std::string cur;
        for (char ch : vars_text + ",") {
          if (ch == ',') {
            if (!cur.empty()) vars.push_back(cur);
            cur.clear();
          } else {
            cur.push_back(ch);
          }
        }
      }
      hs::FieldCtx ctx;
      for (const auto& s : p.slopes) ctx = hs::join(ctx, s.ctx());
      hs::Universe u{vars, opts.order, ctx};
      hs::MultiSeries out = [&] {
        if (expand_kind == "kernel") {
          auto id = sf::kernel_by_name(expand_id);
          if (!id) hs::fail(hs::Errc::UsageError, "unknown kernel " + expand_id);
          return sf::kernel_series(*id, p, u);
        }
        auto id = sf::family_by_name(expand_id);
        if (!id) hs::fail(hs::Errc::UsageError, "unknown family " + expand_id);
        return expand_rep ? sf::rep_series(*id, p, u) : sf::family_series(*id, p, u);
      }();
      if (opts.format == "json")
        std::cout << out.to_json().dump() << "\n";
      else
        std::cout << out.text() << "\n";
      return 0;
    }

    if (cmd_check->parsed()) {
      opts.seed_set = seed_opt->count() > 0;
      std::uint64_t seed = effective_seed(opts);
      hv::Overrides ov = parse_overrides(check_params);
      print_header(opts, seed, "check " + check_id);

      // dynamic change-of-variable check: id Fnsubs with an m override
      if (check_id == "Fnsubs" && ov.count("m")) {
        long m = *ov.at("m").integer_value();
        hv::ParamDraw draw(seed + 1);
        hs::FieldElem c = hv::random_noninteger(draw.rng());
        hs::FieldElem a = hv::random_noninteger(draw.rng());
        auto oi = hs::theorem_main_chains(m, a, c, opts.order, hs::FieldCtx::rational(),
                                          check_evidence);
        auto fns = hs::monomial_testfns(oi.rhs.universe, oi.rhs_var, 6);
        auto res = hs::check_operator_identity(oi, fns);
        std::cout << (res.pass ? "PASS" : "FAIL") << "  Fnsubs[m=" << m << "] a=" << a.str()
                  << " c=" << c.str() << "\n";
        return res.pass ? 0 : 1;
      }

      std::vector<hv::CheckReport> reports;
      for (int i = 0; i < check_draws; ++i)
        reports.push_back(
            hv::check_identity(check_id, seed + i, opts.order, ov.empty() ? nullptr : &ov));
      for (const auto& r : reports) print_report(r, opts.format);
      return outcome_exit(reports);
    }

    if (cmd_all->parsed()) {
      opts.seed_set = seed_opt2->count() > 0;
      std::uint64_t seed = effective_seed(opts);
      print_header(opts, seed,
                   std::string("check-all draws=") + std::to_string(all_draws) +
                       (evidence ? " +evidence" : "") +
                       (filter.empty() ? "" : " filter=" + filter));
      auto reports = hv::check_all(opts.order, seed, filter, evidence, all_draws);
      for (const auto& r : reports) print_report(r, opts.format);
      auto s = hv::summarize(reports);
      if (opts.format == "json")
        std::cout << s.to_json().dump() << "\n";
      else
        std::cout << "total " << s.total << ": " << s.pass << " pass, " << s.fail << " fail, "
                  << s.error << " error"
                  << (s.evidence_total ? " | evidence " + std::to_string(s.evidence_pass) + "/" +
                                             std::to_string(s.evidence_total) + " pass"
                                       : "")
                  << "\n";
      return outcome_exit(reports);
    }

    if (cmd_eval->parsed()) {
      opts.seed_set = seed_opt3->count() > 0;
      std::uint64_t seed = effective_seed(opts);
      if (eval_id == "pfq") {
        std::vector<hypseries::numeval::Cplx> up, lo;
        for (const auto& e : parse_list(eval_upper)) up.push_back(e.to_complex());
        for (const auto& e : parse_list(eval_lower)) lo.push_back(e.to_complex());
        auto x = hs::FieldElem::parse(eval_x).to_complex();
        auto r = hypseries::numeval::pfq_partial_sum(up, lo, x);
        std::cout << r.value.real() << (r.value.imag() < 0 ? "-" : "+")
                  << std::abs(r.value.imag()) << "j  (" << r.terms_used << " terms, "
                  << r.stop << ")\n";
        return 0;
      }
      if (eval_id == "gauss-sum") eval_id = "2F1(1)";
      const hv::IdentityCase* c = hv::find_case(eval_id);
      if (!c || c->kind != hv::CaseKind::NumericIdentity)
        hs::fail(hs::Errc::UsageError, "unknown numeric check " + eval_id);
      print_header(opts, seed, "eval " + eval_id);
      hv::Overrides ov = parse_overrides(eval_params);
      auto rep = c->run(seed, opts.order, false, ov.empty() ? nullptr : &ov);
      print_report(rep, opts.format);
      if (rep.outcome == hv::Outcome::Pass) return 0;
      return rep.outcome == hv::Outcome::Fail ? 1 : 3;
    }
  } catch (const hs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case hs::Errc::NoConvergenceDetected: return 3;
      case hs::Errc::UsageError:
      case hs::Errc::UnknownIdentity:
      case hs::Errc::RegimeViolation:
      case hs::Errc::ParseError: return 2;
      default: return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
