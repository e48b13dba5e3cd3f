#pragma once

#include <chrono>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "weakring/constructions.hpp"
#include "weakring/ideal.hpp"
#include "weakring/ring.hpp"

namespace weakring {

enum class CheckId {
  prod,
  radical,
  boollift,
  centnil,
  triang,
  unique_conseq,
  lift_equiv,
  semibool_char,
  jclean_char,
  nilclean_char,
  fourway,
  prime_max,
  local,
  ext_idem,
  ext_uj,
  ext_transfer,
};

/// What a check consumes.
enum class Shape { ring, pair, product, triangular, extension };

struct CheckInfo {
  CheckId id;
  std::string_view name;
  std::string_view description;
  /// Short quote locating the result being checked.
  std::string_view anchor;
  Shape shape;
};

/// Registry in canonical order.
const std::vector<CheckInfo>& check_registry();
const CheckInfo& check_info(CheckId id);
std::optional<CheckId> check_from_name(std::string_view name);

struct RingInstance {
  RingPtr ring;
};

struct PairInstance {
  RingPtr ring;
  Ideal ideal;
};

struct ProductInstance {
  std::vector<PairInstance> factors;
};

struct TriangularInstance {
  PairInstance base;
  std::size_t n = 2;
};

struct ExtensionInstance {
  RingPtr base;
  BimoduleRing v;
};

using Instance = std::variant<RingInstance, PairInstance, ProductInstance, TriangularInstance, ExtensionInstance>;

Shape shape_of(const Instance& instance);
/// Ring expression the instance is about (product / S / ext built from the parts).
std::string describe_ring(const Instance& instance);
/// Ideal literal, or "-" for ring-level instances.
std::string describe_ideal(const Instance& instance);

enum class Verdict { pass, fail, skipped, error };

const char* to_string(Verdict verdict);

struct Condition {
  std::string name;
  bool value = false;
};

struct CheckResult {
  CheckId id;
  std::string ring;
  std::string ideal;
  Verdict verdict = Verdict::pass;
  /// Skip reason, error message, or a one-line account of the outcome.
  std::string note;
  /// Truth values of every hypothesis and conclusion evaluated.
  std::vector<Condition> conditions;
  /// Elements certifying the outcome (counterexample on failure). Indices of
  /// the ring named by `evidence_ring` (defaults to `ring`).
  std::vector<Elem> evidence;
  std::string evidence_ring;
  std::chrono::nanoseconds elapsed{0};
};

/// Evaluates one theorem on one instance. Hypotheses are evaluated first;
/// when they fail the verdict is `skipped` with the reason in `note`.
/// Throws RingError when the instance shape does not fit the check.
CheckResult run_check(CheckId id, const Instance& instance, const Limits& limits = {});

/// Replays a failing result's evidence against the clean predicates. True when
/// the violation reproduces.
bool reverify_failure(const CheckResult& result, const Instance& instance, const Limits& limits = {});

struct CorpusOptions {
  std::size_t max_order = std::numeric_limits<std::size_t>::max();
  Limits limits;
};

/// Z_n (1 <= n <= 36), two-factor products over {Z2,Z3,Z4,Z5}, S2(Z2..Z4), S3(Z2)
/// and ideal extensions of Z2/Z3. Rings above `max_order` are left out.
std::vector<Instance> default_corpus(const CorpusOptions& options = {});

struct RunSummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::size_t errors = 0;
  /// Non-skipped, non-error results per check, in registry order.
  std::vector<std::pair<CheckId, std::size_t>> exercised;
};

/// One result per applicable (check, instance) pair, ordered by instance then
/// registry order. Work is spread over `threads` workers (0 = hardware).
std::vector<CheckResult> run_all(const std::vector<Instance>& corpus, const std::vector<CheckId>& checks,
                                 const Limits& limits = {}, unsigned threads = 0);

RunSummary summarize(const std::vector<CheckResult>& results);

enum class HuntQuery { converse_l1, converse_t2, intersection, strict };

std::optional<HuntQuery> hunt_from_name(std::string_view name);
const char* to_string(HuntQuery query);

struct HuntMatch {
  std::string ring;
  std::string ideal;
  std::vector<Condition> status;
};

/// Every corpus instance satisfying the query.
///   CONVERSE-L1:  J(R) inside I, R not weakly I-clean.
///   CONVERSE-T2:  R weakly I-clean, R/I not boolean.
///   STRICT:       R weakly I-clean, not I-clean.
///   INTERSECTION: R weakly I1- and I2-clean, not weakly (I1 cap I2)-clean.
std::vector<HuntMatch> hunt(HuntQuery query, const std::vector<Instance>& corpus, const Limits& limits = {});

}  // namespace weakring
