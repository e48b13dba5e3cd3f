#include "weakring/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "weakring/clean.hpp"
#include "weakring/expr.hpp"
#include "weakring/harness.hpp"
#include "weakring/report.hpp"

namespace weakring {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::string output;

  std::string expr;
  std::string ideal;
  bool all_ideals = false;
  bool witnesses = false;

  bool all_checks = false;
  std::vector<std::string> checks;
  std::size_t corpus_max_order = 0;

  std::string query;
};

CorpusOptions corpus_options(const Options& opts, const Limits& limits) {
  CorpusOptions corpus;
  corpus.limits = limits;
  if (opts.corpus_max_order > 0) corpus.max_order = opts.corpus_max_order;
  return corpus;
}

Report cmd_classify(const Options& opts, const Limits& limits) {
  const auto expr = parse_ring_expr(opts.expr);
  const auto ring = evaluate(expr, limits);
  Report report;
  report.command = "classify";
  report.columns = classification_columns(opts.witnesses);
  if (opts.all_ideals) {
    for (const auto& ideal : all_ideals(ring, limits)) {
      report.rows.push_back(classification_row(classify(ideal, opts.witnesses), *ring, opts.witnesses));
    }
  } else {
    const auto ideal_expr = parse_ideal_expr(opts.ideal.empty() ? "0" : opts.ideal);
    const auto ideal = evaluate_ideal(ring, ideal_expr);
    report.rows.push_back(
        classification_row(classify(ideal, opts.witnesses, to_string(ideal_expr)), *ring, opts.witnesses));
  }
  report.summary["rows"] = report.rows.size();
  return report;
}

Report cmd_verify(const Options& opts, const Limits& limits, bool& failed) {
  std::vector<CheckId> checks;
  if (opts.all_checks || opts.checks.empty()) {
    for (const auto& info : check_registry()) checks.push_back(info.id);
  }
  for (const auto& name : opts.checks) {
    const auto id = check_from_name(name);
    if (!id) throw UsageError("unknown check id '" + name + "'");
    checks.push_back(*id);
  }
  const auto corpus = default_corpus(corpus_options(opts, limits));
  const auto results = run_all(corpus, checks, limits);
  const auto summary = summarize(results);

  Report report;
  report.command = "verify";
  report.columns = check_columns();
  for (const auto& r : results) report.rows.push_back(check_row(r));
  report.summary["instances"] = corpus.size();
  report.summary["results"] = results.size();
  report.summary["passed"] = summary.passed;
  report.summary["failed"] = summary.failed;
  report.summary["skipped"] = summary.skipped;
  report.summary["errors"] = summary.errors;
  Json exercised = Json::object();
  for (const auto& [id, count] : summary.exercised) {
    if (std::find(checks.begin(), checks.end(), id) != checks.end()) exercised[std::string(check_info(id).name)] = count;
  }
  report.summary["exercised"] = std::move(exercised);
  failed = summary.failed > 0 || summary.errors > 0;
  return report;
}

Report cmd_hunt(const Options& opts, const Limits& limits) {
  const auto query = hunt_from_name(opts.query);
  if (!query) throw UsageError("unknown hunt query '" + opts.query + "'");
  const auto corpus = default_corpus(corpus_options(opts, limits));
  const auto matches = hunt(*query, corpus, limits);
  Report report;
  report.command = "hunt";
  report.columns = hunt_columns();
  for (const auto& m : matches) report.rows.push_back(hunt_row(*query, m));
  report.summary["query"] = to_string(*query);
  report.summary["matches"] = matches.size();
  if (matches.empty()) report.summary["result"] = "none found";
  return report;
}

Report cmd_show(const Options& opts, const Limits& limits) {
  const auto ring = evaluate(parse_ring_expr(opts.expr), limits);
  Report report;
  report.command = "show";
  report.columns = show_columns();
  report.vertical = true;
  report.rows.push_back(show_row(ring, limits));
  return report;
}

void add_common(CLI::App* cmd, Options& opts) {
  cmd->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--output", opts.output, "Write the report to this file");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  Options opts;
  CLI::App app{"Finite ring cleanness classifier and theorem checker", "weakring"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  auto* classify_cmd = app.add_subcommand("classify", "Classify a ring against an ideal (or all ideals)");
  classify_cmd->add_option("expr", opts.expr, "Ring expression, e.g. \"Z2 x Z3\"")->required();
  auto* ideal_opt = classify_cmd->add_option("--ideal", opts.ideal, "Ideal literal: 0, J, nil or <g1,...>");
  classify_cmd->add_flag("--all-ideals", opts.all_ideals, "Classify against every ideal")->excludes(ideal_opt);
  classify_cmd->add_flag("--witnesses", opts.witnesses, "Include per-element clean witnesses");
  add_common(classify_cmd, opts);

  auto* verify_cmd = app.add_subcommand("verify", "Run the theorem checks over the built-in corpus");
  verify_cmd->add_flag("--all", opts.all_checks, "Run every registered check");
  verify_cmd->add_option("--check", opts.checks, "Check ids, comma separated")->delimiter(',');
  verify_cmd->add_option("--corpus-max-order", opts.corpus_max_order, "Drop corpus rings above this order");
  add_common(verify_cmd, opts);

  auto* hunt_cmd = app.add_subcommand("hunt", "Search the corpus for instances of a named query");
  hunt_cmd->add_option("query", opts.query, "CONVERSE-L1, CONVERSE-T2, INTERSECTION or STRICT")->required();
  hunt_cmd->add_option("--corpus-max-order", opts.corpus_max_order, "Drop corpus rings above this order");
  add_common(hunt_cmd, opts);

  auto* show_cmd = app.add_subcommand("show", "Print structural facts about a ring");
  show_cmd->add_option("expr", opts.expr, "Ring expression")->required();
  add_common(show_cmd, opts);

  std::vector<std::string> argv_storage;
  argv_storage.emplace_back("weakring");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  int code = kExitOk;
  Report report;
  try {
    const auto limits = Limits::from_env();
    if (classify_cmd->parsed()) {
      report = cmd_classify(opts, limits);
    } else if (verify_cmd->parsed()) {
      bool failed = false;
      report = cmd_verify(opts, limits, failed);
      if (failed) code = kExitVerificationFailed;
    } else if (hunt_cmd->parsed()) {
      report = cmd_hunt(opts, limits);
    } else {
      report = cmd_show(opts, limits);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RingError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  }

  report.invocation = args;
  report.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const auto text = render(report, *format_from_name(opts.format));
  if (opts.output.empty()) {
    out << text;
  } else {
    std::ofstream file(opts.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << opts.output << "\n";
      return kExitResource;
    }
    file << text;
  }
  return code;
}

}  // namespace weakring
