// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "cli_run.hpp"
#include "oracle.hpp"
#include "properties.hpp"
#include "schema_check.hpp"
#include "support.hpp"
#include "weakring/expr.hpp"
#include "weakring/harness.hpp"

using namespace weakring;
using Set = std::set<std::size_t>;

namespace {

/// Collects failed expectations for one criterion.
struct Tally {
  std::vector<std::string> problems;
  std::string info;

  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

const std::vector<Instance>& corpus() {
  static const auto c = default_corpus();
  return c;
}

Set as_set(const std::vector<Elem>& xs) { return {xs.begin(), xs.end()}; }

void master_suite(Tally& t) {
  std::vector<CheckId> all;
  for (const auto& info : check_registry()) all.push_back(info.id);
  const auto start = std::chrono::steady_clock::now();
  const auto results = run_all(corpus(), all);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const auto summary = summarize(results);

  std::map<std::string, std::size_t> failing;
  for (const auto& r : results)
    if (r.verdict == Verdict::fail || r.verdict == Verdict::error) ++failing[std::string(check_info(r.id).name)];
  for (const auto& [name, count] : failing) t.expect(false, name + " failed on " + std::to_string(count) + " instances");
  for (const auto& [id, count] : summary.exercised) {
    t.expect(count > 0, std::string(check_info(id).name) + " never exercised");
  }
  t.expect(secs < 120.0, "runtime over 120 s");
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu results, %zu pass, %zu fail, %zu skipped, %zu error, %.2f s", results.size(),
                summary.passed, summary.failed, summary.skipped, summary.errors, secs);
  t.info = buf;
}

void biconditional(Tally& t) {
  std::size_t pairs = 0, lhs_true = 0, oracle_checked = 0;
  for (const auto* p : properties::corpus_pairs(corpus())) {
    const bool lhs = is_uniquely_weakly_I_clean(p->ideal);
    const bool rhs = is_semi_boolean(*quotient(p->ring, p->ideal).ring) && lifts_uniquely_weakly(p->ideal);
    const std::string where = p->ring->describe() + " / " + p->ideal.describe();
    t.expect(!lhs || rhs, "forward direction fails on " + where);
    t.expect(!rhs || lhs, "backward direction fails on " + where);
    ++pairs;
    lhs_true += lhs;
    if (p->ring->provenance().kind == Construction::zmod) {
      const auto o = oracle::zmod(p->ring->order());
      const auto members = as_set(p->ideal.members());
      t.expect(lhs == oracle::uniquely_weakly_clean(o, members), "oracle disagrees on left side for " + where);
      t.expect(rhs == (oracle::quotient_semi_boolean(o, members) && oracle::lifts_uniquely_weakly(o, members)),
               "oracle disagrees on right side for " + where);
      ++oracle_checked;
    }
  }
  t.expect(pairs >= 200, "only " + std::to_string(pairs) + " pairs");
  t.expect(lhs_true > 0 && lhs_true < pairs, "one truth value never occurs");
  t.info = std::to_string(pairs) + " pairs, " + std::to_string(lhs_true) + " true, " + std::to_string(oracle_checked) +
           " cross-checked by oracle";
}

void goldens(Tally& t) {
  auto z = [](std::size_t n) { return make_zmod(n); };
  auto gen = [](const RingPtr& r, std::vector<Elem> g) { return ideal_generated_by(r, g); };
  const Set zero{0};

  // Each literal is first reproduced by the oracle, then compared with the library.
  struct Golden {
    std::string what;
    bool frozen;
    bool by_oracle;
    bool by_library;
  };
  const auto o3 = oracle::zmod(3), o5 = oracle::zmod(5), o6 = oracle::zmod(6), o9 = oracle::zmod(9);
  const Set o6_even{0, 2, 4}, o9_j = oracle::radical(o9);
  const auto z9 = z(9);
  const auto z9j = jacobson_radical(z9);
  const std::vector<Golden> goldens = {
      {"(Z3,0) weakly clean", true, oracle::weakly_clean(o3, zero), is_weakly_I_clean(zero_ideal(z(3)))},
      {"(Z3,0) I-clean", false, oracle::i_clean(o3, zero), is_I_clean(zero_ideal(z(3)))},
      {"(Z5,0) weakly clean", false, oracle::weakly_clean(o5, zero), is_weakly_I_clean(zero_ideal(z(5)))},
      {"(Z6,0) uniquely weakly clean", true, oracle::uniquely_weakly_clean(o6, zero),
       is_uniquely_weakly_I_clean(zero_ideal(z(6)))},
      {"(Z6,<2>) uniquely weakly clean", false, oracle::uniquely_weakly_clean(o6, o6_even),
       is_uniquely_weakly_I_clean(gen(z(6), {2}))},
      {"(Z6,<2>) x=4 has witnesses {0,4}", true, oracle::weak_idempotents(o6, o6_even, 4) == Set{0, 4},
       as_set(distinct_idempotents(weak_clean_witnesses(gen(z(6), {2}), 4))) == Set{0, 4}},
      {"(Z9,J) uniquely weakly clean", true, oracle::uniquely_weakly_clean(o9, o9_j), is_uniquely_weakly_I_clean(z9j)},
      {"(Z9,J) I-clean", false, oracle::i_clean(o9, o9_j), is_I_clean(z9j)},
      {"(Z9,J) quotient semi-boolean", true, oracle::quotient_semi_boolean(o9, o9_j),
       classify(z9j).flags.quotient_semi_boolean},
      {"Z9 local", true, oracle::local(o9), is_local(z9)},
  };
  for (const auto& g : goldens) {
    t.expect(g.by_oracle == g.frozen, "oracle does not reproduce " + g.what);
    t.expect(g.by_library == g.frozen, "library disagrees on " + g.what);
  }
  Set oracle_semi, lib_semi;
  for (std::size_t n = 1; n <= 10; ++n) {
    if (oracle::semi_boolean(oracle::zmod(n))) oracle_semi.insert(n);
    if (is_semi_boolean(*z(n))) lib_semi.insert(n);
  }
  t.expect(oracle_semi == Set{1, 2, 3, 6}, "oracle semi-boolean Z_n set differs");
  t.expect(lib_semi == Set{1, 2, 3, 6}, "library semi-boolean Z_n set differs");
  t.info = std::to_string(goldens.size() + 1) + " golden values";
}

void product_boundary(Tally& t) {
  auto pair = [](std::size_t n) {
    auto r = make_zmod(n);
    return PairInstance{r, zero_ideal(r)};
  };
  auto flag = [](const CheckResult& r, const std::string& name) {
    for (const auto& c : r.conditions)
      if (c.name == name) return c.value;
    return false;
  };
  const auto good = run_check(CheckId::prod, ProductInstance{{pair(2), pair(3)}});
  t.expect(good.verdict == Verdict::pass, "Z2 x Z3 check did not pass");
  t.expect(flag(good, "product weakly I-clean"), "Z2 x Z3 not weakly clean");
  t.expect(oracle::weakly_clean(oracle::zmod_product(2, 3), {0}), "oracle: Z2 x Z3 not weakly clean");

  const auto bad = run_check(CheckId::prod, ProductInstance{{pair(3), pair(3)}});
  t.expect(bad.verdict == Verdict::pass, "Z3 x Z3 check did not pass");
  t.expect(!flag(bad, "product weakly I-clean"), "Z3 x Z3 reported weakly clean");
  t.expect(!flag(bad, "right-hand side"), "Z3 x Z3 right-hand side true");
  t.expect(bad.evidence.size() == 1, "no unwitnessed element in payload");
  if (!bad.evidence.empty()) {
    const auto x = bad.evidence.front();
    t.expect(oracle::weak_idempotents(oracle::zmod_product(3, 3), {0}, x).empty(),
             "oracle finds a witness for the payload element");
    t.info = "Z3 x Z3 unwitnessed element " + support::ring("Z3 x Z3")->label(x);
  }
}

void extension_suite(Tally& t) {
  const auto z2 = make_zmod(2);
  const auto v = make_bimodule(z2, VKind::zero, 2);
  const auto s = ideal_extension(z2, v);
  const auto o = oracle::zmod_dual(2);
  auto labels = [&](const std::vector<Elem>& xs) { return support::labels_of(s, xs); };
  using L = std::vector<std::string>;

  t.expect(as_set(idempotents(s).members) == oracle::idempotents(o), "oracle idempotents differ");
  t.expect(labels(idempotents(s).members) == L{"(0,0)", "(1,0)"}, "Idem(S) wrong");
  t.expect(as_set(units(s).members) == oracle::units(o), "oracle units differ");
  t.expect(labels(units(s).members) == L{"(1,0)", "(1,1)"}, "U(S) is not U(R) x V");
  t.expect(as_set(jacobson_radical(s).members()) == oracle::radical(o), "oracle radical differs");
  t.expect(labels(jacobson_radical(s).members()) == L{"(0,0)", "(0,1)"}, "J(S) is not J(R) x V");

  const ExtensionInstance inst{z2, v};
  const auto transfer = run_check(CheckId::ext_transfer, inst);
  t.expect(transfer.verdict == Verdict::pass, "CH-EXT-TRANSFER did not pass");
  for (const auto& c : transfer.conditions) t.expect(c.value, "CH-EXT-TRANSFER condition false: " + c.name);
  const auto lifted = extension_ideal(s, zero_ideal(z2));
  t.expect(labels(lifted.members()) == L{"(0,0)", "(0,1)"}, "I' is not {0} x V");
  t.expect(is_uniquely_weakly_I_clean(lifted), "S not uniquely weakly ({0} x V)-clean");
  t.expect(oracle::uniquely_weakly_clean(o, as_set(lifted.members())), "oracle: S not uniquely weakly I'-clean");
  t.expect(is_uniquely_weakly_I_clean(zero_ideal(z2)), "R not uniquely weakly 0-clean");
  for (CheckId id : {CheckId::ext_idem, CheckId::ext_uj}) {
    t.expect(run_check(id, inst).verdict == Verdict::pass, std::string(check_info(id).name) + " did not pass");
  }
}

void structural_oracles(Tally& t) {
  std::size_t rings = 0, commutative = 0, products = 0;
  for (const auto& ring : properties::corpus_rings(corpus())) {
    ++rings;
    if (is_commutative(*ring)) {
      ++commutative;
      const auto e = properties::radical_is_meet_of_maximals(ring);
      t.expect(e.empty(), e);
    }
    if (ring->provenance().kind == Construction::product) ++products;
    const auto p = properties::product_sets_componentwise(ring);
    t.expect(p.empty(), p);
    const auto l = properties::central_plus_nilpotent(ring);
    t.expect(l.empty(), l);
  }
  t.expect(products > 0, "no product rings in corpus");
  t.info = std::to_string(rings) + " rings (" + std::to_string(commutative) + " commutative, " +
           std::to_string(products) + " products)";
}

void cli_contract(Tally& t) {
  const std::vector<std::string> grammar = {
      "Z1", "Z2", "Z6", "Z36", "Z2 x Z3", "Z2 x Z3 x Z5", "Z4xZ4", "  Z5   x  Z7 ", "S2(Z2)", "S3(Z2)",
      "S2(Z2 x Z3)", "S4(Z2)", "Z3 x S2(Z2)", "ext(Z2, zero 1)", "ext(Z2, zero 2)", "ext(Z3, zero 9)",
      "ext(Z2, ann 4)", "ext(Z3, ann 3)", "ext(Z2, ring 2)", "ext(S2(Z2), ring 4)", "S2(ext(Z2, zero 2))",
      "quot(Z9, J)", "quot(Z12, <4>)", "quot(Z12, <4, 6>)", "quot(Z8, nil)", "quot(Z6, 0)", "quot(S2(Z3), J)",
      "S2(quot(Z12, <3>))", "ext(quot(Z9, J), zero 3)", "quot(ext(Z2, zero 2), J)"};
  for (const auto& text : grammar) {
    try {
      const auto first = parse_ring_expr(text);
      const auto printed = to_string(first);
      const auto second = parse_ring_expr(printed);
      t.expect(second.root == first.root && to_string(second) == printed, "round trip changed " + text);
      t.expect(evaluate(first)->describe() == printed, "evaluated description differs for " + text);
    } catch (const std::exception& e) {
      t.expect(false, text + ": " + e.what());
    }
  }

  const schema_check::Validator validator(schema_check::load(WEAKRING_SCHEMA_PATH));
  const std::vector<std::vector<std::string>> reports = {
      {"classify", "Z12", "--all-ideals", "--witnesses", "--format", "json"},
      {"verify", "--all", "--format", "json"},
      {"hunt", "INTERSECTION", "--format", "json"},
      {"hunt", "STRICT", "--format", "json"},
      {"show", "ext(Z2, zero 2)", "--format", "json"}};
  for (const auto& args : reports) {
    const auto o = cli_run::spawn(args);
    try {
      const auto errors = validator.validate(nlohmann::json::parse(o.out));
      t.expect(errors.empty(), args[0] + " report violates schema" + (errors.empty() ? "" : ": " + errors[0]));
    } catch (const std::exception& e) {
      t.expect(false, args[0] + " report is not JSON: " + e.what());
    }
  }

  struct Expect {
    std::vector<std::string> args;
    std::string env;
    int code;
  };
  const std::vector<Expect> codes = {
      {{"classify", "Z6"}, "", 0},
      {{"hunt", "STRICT", "--corpus-max-order", "2"}, "", 0},
      {{"verify", "--check", "CH-PROD"}, "", 0},
      {{"verify", "--check", "CH-UNIQUE-CONSEQ"}, "", 1},
      {{"classify", "Z6 x"}, "", 2},
      {{"verify", "--check", "CH-NOPE"}, "", 2},
      {{"hunt", "NOPE"}, "", 2},
      {{"frobnicate"}, "", 2},
      {{"show", "Z5000"}, "", 3},
      {{"show", "Z60"}, "WEAKRING_SIZE_CAP=50", 3}};
  for (const auto& e : codes) {
    const auto got = cli_run::spawn(e.args, e.env).code;
    std::string joined;
    for (const auto& a : e.args) joined += " " + a;
    t.expect(got == e.code, "exit " + std::to_string(got) + " (expected " + std::to_string(e.code) + ") for" + joined);
  }
  t.expect(cli_run::spawn({"hunt", "STRICT", "--corpus-max-order", "2"}).out.find("none found") != std::string::npos,
           "empty hunt does not say none found");

  const std::vector<std::vector<std::string>> repeat = {{"verify", "--all"},
                                                        {"verify", "--all", "--format", "json"},
                                                        {"classify", "Z12", "--all-ideals", "--witnesses", "--format", "csv"},
                                                        {"hunt", "INTERSECTION", "--format", "json"},
                                                        {"show", "S2(Z3)"}};
  for (const auto& args : repeat) {
    const auto a = cli_run::spawn(args), b = cli_run::spawn(args);
    t.expect(!a.out.empty() && cli_run::without_footer(a.out) == cli_run::without_footer(b.out),
             "output differs across runs of " + args[0] + " " + args[1]);
  }
  t.info = std::to_string(grammar.size()) + " expressions, " + std::to_string(reports.size()) + " schema checks, " +
           std::to_string(codes.size()) + " exit codes, " + std::to_string(repeat.size()) + " determinism checks";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Tally&)>>> criteria = {
      {"master theorem suite", master_suite},
      {"uniquely weakly clean biconditional", biconditional},
      {"golden classifications", goldens},
      {"product theorem boundary", product_boundary},
      {"ideal-extension suite", extension_suite},
      {"structural oracles", structural_oracles},
      {"CLI contract", cli_contract}};

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally t;
    try {
      criteria[i].second(t);
    } catch (const std::exception& e) {
      t.problems.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = t.problems.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].first;
    if (!t.info.empty()) std::cout << " (" << t.info << ")";
    std::cout << "\n";
    for (const auto& p : t.problems) std::cout << "        - " << p << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
