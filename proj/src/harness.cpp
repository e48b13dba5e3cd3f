#include "weakring/harness.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "weakring/clean.hpp"
#include "weakring/structure.hpp"

namespace weakring {

namespace {

const std::vector<CheckInfo> kRegistry = {
    {CheckId::prod, "CH-PROD",
     "product is weakly (prod I)-clean iff every factor is weakly clean and at most one is not I-clean",
     "at most one R_alpha is not I_alpha-clean", Shape::product},
    {CheckId::radical, "CH-RADICAL", "weakly I-clean implies J(R) inside I", "then J(R) in I", Shape::pair},
    {CheckId::boollift, "CH-BOOLLIFT", "R/I boolean and weak lifting imply weakly I-clean",
     "R/I is boolean and idempotents lift weakly modulo I", Shape::pair},
    {CheckId::centnil, "CH-CENTNIL", "e = f + n with e, f idempotent, f central, n nilpotent forces n = 0",
     "e=f+n, where e, f in Idem(R)", Shape::ring},
    {CheckId::triang, "CH-TRIANG",
     "weakly I-clean with central idempotents implies constant-diagonal triangular ring is weakly I'-clean",
     "a_ii=a_jj for all i,j} is weakly I'-clean", Shape::triangular},
    {CheckId::unique_conseq, "CH-UNIQUE-CONSEQ",
     "uniquely weakly I-clean implies I idempotent-free, quasi-regular elements in I, R abelian",
     "I contains all the quasi-regular elements", Shape::pair},
    {CheckId::lift_equiv, "CH-LIFT-EQUIV",
     "with Nil(R) inside I: unique weak lifting iff weak lifting + abelian + idempotent-free iff central weak "
     "lifting + idempotent-free",
     "Idempotents can be lifted centrally weakly modulo I", Shape::pair},
    {CheckId::semibool_char, "CH-SEMIBOOL-CHAR",
     "uniquely weakly I-clean iff R/I semi-boolean and unique weak lifting",
     "R/I is semi boolean and idempotents can be lifted uniquely weakly", Shape::pair},
    {CheckId::jclean_char, "CH-JCLEAN-CHAR", "uniquely weakly J-clean iff R/J semi-boolean and unique weak lifting",
     "R/J(R) is semi boolean", Shape::ring},
    {CheckId::nilclean_char, "CH-NILCLEAN-CHAR",
     "commutative: uniquely weakly nil clean iff R/Nil semi-boolean and unique weak lifting",
     "R/Nil(R) is semi boolean", Shape::ring},
    {CheckId::fourway, "CH-FOURWAY", "four equivalent forms of unique weak I-cleanness",
     "there exists a central idempotent e in R", Shape::pair},
    {CheckId::prime_max, "CH-PRIME-MAX", "prime / two idempotents / R/I is Z2 or Z3 / maximal, all with unique weak cleanness",
     "R/I = Z_2 or Z_3 and I is idempotent free", Shape::pair},
    {CheckId::local, "CH-LOCAL", "local + uniquely weakly J-clean iff two idempotents iff R/J is Z2 or Z3",
     "R/J(R) = Z_2 or Z_3", Shape::ring},
    {CheckId::ext_idem, "CH-EXT-IDEM", "idempotent-free V with commuting idempotent action gives Idem(S) = Idem(R) x 0",
     "Idem(S)={(e,0) | e in Idem(R)}", Shape::extension},
    {CheckId::ext_uj, "CH-EXT-UJ", "V quasi-regular iff (1,v) units iff U(S) = U(R) x V iff J(S) = J(R) x V",
     "J(S)=J(R)xV", Shape::extension},
    {CheckId::ext_transfer, "CH-EXT-TRANSFER",
     "S = I(R;V) uniquely weakly clean for some ideal iff R is, with commuting idempotent action",
     "S=I(R;V) is uniquely weakly I'-clean", Shape::extension},
};

const char* shape_name(Shape s) {
  switch (s) {
    case Shape::ring: return "ring";
    case Shape::pair: return "ring+ideal";
    case Shape::product: return "product family";
    case Shape::triangular: return "triangular pair";
    case Shape::extension: return "extension";
  }
  return "?";
}

template <class T>
const T& expect_shape(const Instance& instance, CheckId id) {
  if (const T* p = std::get_if<T>(&instance)) return *p;
  throw RingError(std::string(check_info(id).name) + " expects a " + shape_name(check_info(id).shape) +
                  " instance, got " + shape_name(shape_of(instance)));
}

const RingPtr& ring_of(const Instance& instance, CheckId id) { return expect_shape<RingInstance>(instance, id).ring; }

bool all_same(const std::vector<Condition>& conds) {
  return std::all_of(conds.begin(), conds.end(), [&](const Condition& c) { return c.value == conds.front().value; });
}

bool prime_order_unital(const FiniteRing& r) { return r.order() == 2 || r.order() == 3; }

bool only_trivial_idempotents(const RingPtr& ring) {
  const auto idems = idempotents(ring).members;
  return idems == std::vector<Elem>{0, ring->one()} || (ring->is_zero_ring() && idems.size() == 1);
}

std::string ideal_list(const std::vector<Ideal>& ideals) {
  std::string out;
  for (const auto& i : ideals) {
    if (!out.empty()) out += ", ";
    out += i.describe();
  }
  return out.empty() ? "none" : out;
}

CheckResult skipped(CheckResult r, std::string reason) {
  r.verdict = Verdict::skipped;
  r.note = std::move(reason);
  return r;
}

RingPtr product_ring(const ProductInstance& inst, const Limits& limits) {
  std::vector<RingPtr> rings;
  for (const auto& f : inst.factors) rings.push_back(f.ring);
  return direct_product(rings, limits);
}

Ideal product_ideal_of(const RingPtr& product, const ProductInstance& inst) {
  std::vector<Ideal> ideals;
  for (const auto& f : inst.factors) ideals.push_back(f.ideal);
  return product_ideal(product, ideals);
}

// Biconditional between "uniquely weakly I-clean" and "R/I semi-boolean with unique weak lifting".
void semibool_conditions(CheckResult& r, const Ideal& ideal, std::string_view tag) {
  const auto top = quotient(ideal.ring(), ideal).ring;
  r.conditions.push_back({"uniquely weakly " + std::string(tag) + "-clean", is_uniquely_weakly_I_clean(ideal)});
  r.conditions.push_back({"R/" + std::string(tag) + " semi-boolean and lifts uniquely weakly",
                          is_semi_boolean(*top) && lifts_uniquely_weakly(ideal)});
  r.verdict = all_same(r.conditions) ? Verdict::pass : Verdict::fail;
  if (auto x = first_multiply_witnessed(ideal)) r.evidence.push_back(*x);
  if (auto x = first_unwitnessed(ideal)) r.evidence.push_back(*x);
}

CheckResult check_prod(CheckResult r, const ProductInstance& inst, const Limits& limits) {
  if (inst.factors.empty()) throw RingError("CH-PROD needs at least one factor");
  const auto product = product_ring(inst, limits);
  const auto ideal = product_ideal_of(product, inst);
  const bool lhs = is_weakly_I_clean(ideal);
  bool factors_weak = true;
  std::size_t not_clean = 0;
  for (const auto& f : inst.factors) {
    factors_weak = factors_weak && is_weakly_I_clean(f.ideal);
    if (!is_I_clean(f.ideal)) ++not_clean;
  }
  const bool rhs = factors_weak && not_clean <= 1;
  r.conditions = {{"product weakly I-clean", lhs},
                  {"every factor weakly I-clean", factors_weak},
                  {"at most one factor not I-clean", not_clean <= 1},
                  {"right-hand side", rhs}};
  r.verdict = lhs == rhs ? Verdict::pass : Verdict::fail;
  r.evidence_ring = product->describe();
  if (auto x = first_unwitnessed(ideal)) {
    r.evidence.push_back(*x);
    r.note = "unwitnessed element " + product->label(*x);
  }
  return r;
}

CheckResult check_radical(CheckResult r, const PairInstance& inst) {
  if (!is_weakly_I_clean(inst.ideal)) return skipped(std::move(r), "R is not weakly I-clean");
  const auto radical = jacobson_radical(inst.ring);
  for (Elem x : radical.members()) {
    if (!inst.ideal.contains(x)) r.evidence.push_back(x);
  }
  r.conditions = {{"weakly I-clean", true}, {"J(R) inside I", r.evidence.empty()}};
  r.verdict = r.evidence.empty() ? Verdict::pass : Verdict::fail;
  return r;
}

CheckResult check_boollift(CheckResult r, const PairInstance& inst) {
  const auto top = quotient(inst.ring, inst.ideal).ring;
  const bool boolean = is_boolean(*top);
  const bool lifts = lifts_weakly(inst.ideal);
  if (!boolean) return skipped(std::move(r), "R/I is not boolean");
  if (!lifts) return skipped(std::move(r), "idempotents do not lift weakly modulo I");
  const auto missing = first_unwitnessed(inst.ideal);
  r.conditions = {{"R/I boolean", true}, {"lifts weakly", true}, {"weakly I-clean", !missing}};
  if (missing) r.evidence.push_back(*missing);
  r.verdict = missing ? Verdict::fail : Verdict::pass;
  return r;
}

CheckResult check_centnil(CheckResult r, const RingPtr& ring) {
  const auto idems = idempotents(ring).members;
  std::size_t triples = 0;
  for (Elem e : idems) {
    for (Elem f : idems) {
      if (!is_central(*ring, f)) continue;
      const Elem n = ring->sub(e, f);
      if (!is_nilpotent(*ring, n)) continue;
      ++triples;
      if (n != 0 && r.evidence.empty()) r.evidence = {e, f};
    }
  }
  r.conditions = {{"every nilpotent difference e - f with f central is zero", r.evidence.empty()}};
  r.note = std::to_string(triples) + " (e, f, n) triples scanned";
  r.verdict = r.evidence.empty() ? Verdict::pass : Verdict::fail;
  return r;
}

CheckResult check_triang(CheckResult r, const TriangularInstance& inst, const Limits& limits) {
  if (!is_weakly_I_clean(inst.base.ideal)) return skipped(std::move(r), "R is not weakly I-clean");
  if (!is_abelian(inst.base.ring)) return skipped(std::move(r), "idempotents of R are not central");
  const auto s = const_diag_triangular(inst.base.ring, inst.n, limits);
  const auto ideal = triangular_ideal(s, inst.base.ideal);
  const auto missing = first_unwitnessed(ideal);
  r.conditions = {{"R weakly I-clean", true}, {"Idem(R) central", true}, {"S weakly I'-clean", !missing}};
  r.evidence_ring = s->describe();
  if (missing) r.evidence.push_back(*missing);
  r.verdict = missing ? Verdict::fail : Verdict::pass;
  return r;
}

CheckResult check_unique_conseq(CheckResult r, const PairInstance& inst) {
  if (!is_uniquely_weakly_I_clean(inst.ideal)) return skipped(std::move(r), "R is not uniquely weakly I-clean");
  const auto& ring = inst.ring;
  std::vector<Elem> idem_in_ideal, qr_outside, noncentral;
  for (Elem e : idempotents(ring).members) {
    if (e != 0 && inst.ideal.contains(e)) idem_in_ideal.push_back(e);
    if (!is_central(*ring, e)) noncentral.push_back(e);
  }
  for (Elem a : quasi_regular_elements(ring).members) {
    if (!inst.ideal.contains(a)) qr_outside.push_back(a);
  }
  r.conditions = {{"uniquely weakly I-clean", true},
                  {"I idempotent-free", idem_in_ideal.empty()},
                  {"quasi-regular elements inside I", qr_outside.empty()},
                  {"R abelian", noncentral.empty()}};
  for (const auto* group : {&idem_in_ideal, &qr_outside, &noncentral}) {
    r.evidence.insert(r.evidence.end(), group->begin(), group->end());
  }
  const bool ok = r.evidence.empty();
  r.verdict = ok ? Verdict::pass : Verdict::fail;
  if (!qr_outside.empty()) {
    std::string list;
    for (Elem a : qr_outside) list += (list.empty() ? "" : ",") + ring->label(a);
    r.note = "quasi-regular elements outside I: " + list;
  }
  return r;
}

CheckResult check_lift_equiv(CheckResult r, const PairInstance& inst) {
  for (Elem n : nilpotents(inst.ring).members) {
    if (!inst.ideal.contains(n)) return skipped(std::move(r), "Nil(R) is not inside I");
  }
  const bool free = is_idempotent_free(inst.ideal);
  r.conditions = {{"(i) lifts uniquely weakly", lifts_uniquely_weakly(inst.ideal)},
                  {"(ii) lifts weakly, abelian, I idempotent-free",
                   lifts_weakly(inst.ideal) && is_abelian(inst.ring) && free},
                  {"(iii) lifts centrally weakly, I idempotent-free", lifts_centrally_weakly(inst.ideal) && free}};
  r.verdict = all_same(r.conditions) ? Verdict::pass : Verdict::fail;
  return r;
}

CheckResult check_fourway(CheckResult r, const PairInstance& inst) {
  const auto top = quotient(inst.ring, inst.ideal).ring;
  const bool semi = is_semi_boolean(*top);
  const bool free = is_idempotent_free(inst.ideal);
  r.conditions = {{"(i) uniquely weakly I-clean", is_uniquely_weakly_I_clean(inst.ideal)},
                  {"(ii) R/I semi-boolean, lifts uniquely weakly", semi && lifts_uniquely_weakly(inst.ideal)},
                  {"(iii) R/I semi-boolean, lifts weakly, abelian, I idempotent-free",
                   semi && lifts_weakly(inst.ideal) && is_abelian(inst.ring) && free},
                  {"(iv) central weak decompositions, I idempotent-free",
                   has_central_weak_decompositions(inst.ideal) && free}};
  r.verdict = all_same(r.conditions) ? Verdict::pass : Verdict::fail;
  return r;
}

CheckResult check_prime_max(CheckResult r, const PairInstance& inst) {
  if (inst.ideal.is_whole_ring()) return skipped(std::move(r), "I is not proper");
  const bool unique = is_uniquely_weakly_I_clean(inst.ideal);
  const auto top = quotient(inst.ring, inst.ideal).ring;
  r.conditions = {{"(i) I prime, uniquely weakly I-clean", is_prime(inst.ideal) && unique},
                  {"(ii) uniquely weakly I-clean, Idem(R) = {0,1}", unique && only_trivial_idempotents(inst.ring)},
                  {"(iii) R/I is Z2 or Z3, I idempotent-free",
                   prime_order_unital(*top) && is_idempotent_free(inst.ideal)},
                  {"(iv) I maximal, uniquely weakly I-clean", is_maximal(inst.ideal) && unique}};
  r.verdict = all_same(r.conditions) ? Verdict::pass : Verdict::fail;
  return r;
}

CheckResult check_local(CheckResult r, const RingPtr& ring) {
  if (ring->is_zero_ring()) return skipped(std::move(r), "zero ring");
  const auto radical = jacobson_radical(ring);
  const bool unique = is_uniquely_weakly_I_clean(radical);
  const auto top = quotient(ring, radical).ring;
  r.conditions = {{"(i) local, uniquely weakly J-clean", is_local(ring) && unique},
                  {"(ii) uniquely weakly J-clean, Idem(R) = {0,1}", unique && only_trivial_idempotents(ring)},
                  {"(iii) R/J(R) is Z2 or Z3", prime_order_unital(*top)}};
  r.verdict = all_same(r.conditions) ? Verdict::pass : Verdict::fail;
  return r;
}

CheckResult check_ext_idem(CheckResult r, const ExtensionInstance& inst, const Limits& limits) {
  if (!is_idempotent_free(inst.v)) return skipped(std::move(r), "V is not idempotent-free");
  if (!idempotents_commute_with(inst.v)) return skipped(std::move(r), "some idempotent of R does not commute with V");
  const auto s = ideal_extension(inst.base, inst.v, limits);
  std::vector<Elem> expected;
  for (Elem e : idempotents(inst.base).members) expected.push_back(extension_element(*s, e, 0));
  std::sort(expected.begin(), expected.end());
  const auto actual = idempotents(s).members;
  std::set_symmetric_difference(actual.begin(), actual.end(), expected.begin(), expected.end(),
                                std::back_inserter(r.evidence));
  r.conditions = {{"V idempotent-free", true},
                  {"idempotents commute with V", true},
                  {"Idem(S) = Idem(R) x 0", r.evidence.empty()}};
  r.verdict = r.evidence.empty() ? Verdict::pass : Verdict::fail;
  return r;
}

CheckResult check_ext_uj(CheckResult r, const ExtensionInstance& inst, const Limits& limits) {
  const auto s = ideal_extension(inst.base, inst.v, limits);
  const auto q = static_cast<Elem>(inst.base->order());
  const auto m = static_cast<Elem>(inst.v.order);

  bool one_plus_v_units = true;
  for (Elem v = 0; v < m; ++v) one_plus_v_units = one_plus_v_units && is_unit(*s, extension_element(*s, inst.base->one(), v));

  const auto base_units = units(inst.base);
  std::vector<Elem> expected_units;
  for (Elem u : base_units.members) {
    for (Elem v = 0; v < m; ++v) expected_units.push_back(extension_element(*s, u, v));
  }
  std::sort(expected_units.begin(), expected_units.end());

  const auto base_radical = jacobson_radical(inst.base);
  const auto radical = jacobson_radical(s);
  std::vector<Elem> expected_radical;
  for (Elem j : base_radical.members()) {
    for (Elem v = 0; v < m; ++v) expected_radical.push_back(extension_element(*s, j, v));
  }
  std::sort(expected_radical.begin(), expected_radical.end());

  r.conditions = {{"(i) every v has w with v + w + vw = 0", is_quasi_regular_ring(inst.v)},
                  {"(ii) (1,v) is a unit for all v", one_plus_v_units},
                  {"(iii) U(S) = U(R) x V", units(s).members == expected_units},
                  {"(iv) J(S) = J(R) x V", radical.members() == expected_radical}};
  bool ok = all_same(r.conditions);
  if (r.conditions.front().value) {
    bool restriction = true;
    for (Elem x = 0; x < q; ++x) {
      restriction = restriction && (base_radical.contains(x) == radical.contains(extension_element(*s, x, 0)));
    }
    r.conditions.push_back({"J(R) = {r : (r,0) in J(S)}", restriction});
    ok = ok && restriction;
  }
  r.verdict = ok ? Verdict::pass : Verdict::fail;
  return r;
}

CheckResult check_ext_transfer(CheckResult r, const ExtensionInstance& inst, const Limits& limits) {
  if (!is_idempotent_free(inst.v)) return skipped(std::move(r), "V is not idempotent-free");
  const auto s = ideal_extension(inst.base, inst.v, limits);

  std::vector<Ideal> s_good, r_good;
  for (auto& ideal : all_ideals(s, limits)) {
    if (is_uniquely_weakly_I_clean(ideal)) s_good.push_back(std::move(ideal));
  }
  for (auto& ideal : all_ideals(inst.base, limits)) {
    if (is_uniquely_weakly_I_clean(ideal)) r_good.push_back(std::move(ideal));
  }
  const bool commute = idempotents_commute_with(inst.v);
  const bool lhs = !s_good.empty();
  const bool rhs = !r_good.empty() && commute;
  r.conditions = {{"(i) S uniquely weakly I'-clean for some I'", lhs},
                  {"(ii)(a) R uniquely weakly I-clean for some I", !r_good.empty()},
                  {"(ii)(b) idempotents commute with V", commute},
                  {"(ii)", rhs}};
  bool ok = lhs == rhs;
  if (rhs) {
    // The forward construction: every good I of R yields a good I x V of S.
    bool lifted = true;
    for (const auto& ideal : r_good) lifted = lifted && is_uniquely_weakly_I_clean(extension_ideal(s, ideal));
    r.conditions.push_back({"I x V works for every good I", lifted});
    ok = ok && lifted;
  }
  r.verdict = ok ? Verdict::pass : Verdict::fail;
  r.note = "good ideals of S: " + ideal_list(s_good) + "; of R: " + ideal_list(r_good);
  return r;
}

}  // namespace

const std::vector<CheckInfo>& check_registry() { return kRegistry; }

const CheckInfo& check_info(CheckId id) {
  for (const auto& info : kRegistry) {
    if (info.id == id) return info;
  }
  throw RingError("unregistered check");
}

std::optional<CheckId> check_from_name(std::string_view name) {
  for (const auto& info : kRegistry) {
    if (info.name == name) return info.id;
  }
  return std::nullopt;
}

Shape shape_of(const Instance& instance) {
  return std::visit(
      [](const auto& inst) {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, RingInstance>) return Shape::ring;
        else if constexpr (std::is_same_v<T, PairInstance>) return Shape::pair;
        else if constexpr (std::is_same_v<T, ProductInstance>) return Shape::product;
        else if constexpr (std::is_same_v<T, TriangularInstance>) return Shape::triangular;
        else return Shape::extension;
      },
      instance);
}

std::string describe_ring(const Instance& instance) {
  return std::visit(
      [](const auto& inst) -> std::string {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, RingInstance> || std::is_same_v<T, PairInstance>) {
          return inst.ring->describe();
        } else if constexpr (std::is_same_v<T, ProductInstance>) {
          std::string out;
          for (const auto& f : inst.factors) out += (out.empty() ? "" : " x ") + f.ring->describe();
          return out;
        } else if constexpr (std::is_same_v<T, TriangularInstance>) {
          return "S" + std::to_string(inst.n) + "(" + inst.base.ring->describe() + ")";
        } else {
          return "ext(" + inst.base->describe() + ", " + inst.v.spec + ")";
        }
      },
      instance);
}

std::string describe_ideal(const Instance& instance) {
  return std::visit(
      [](const auto& inst) -> std::string {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, PairInstance>) {
          return inst.ideal.describe();
        } else if constexpr (std::is_same_v<T, ProductInstance>) {
          std::string out;
          for (const auto& f : inst.factors) out += (out.empty() ? "" : " x ") + f.ideal.describe();
          return out;
        } else if constexpr (std::is_same_v<T, TriangularInstance>) {
          return "diag(" + inst.base.ideal.describe() + ")";
        } else {
          return "-";
        }
      },
      instance);
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped-precondition";
    case Verdict::error: return "error";
  }
  return "error";
}

CheckResult run_check(CheckId id, const Instance& instance, const Limits& limits) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  r.id = id;
  r.ring = describe_ring(instance);
  r.ideal = describe_ideal(instance);
  switch (id) {
    case CheckId::prod: r = check_prod(std::move(r), expect_shape<ProductInstance>(instance, id), limits); break;
    case CheckId::radical: r = check_radical(std::move(r), expect_shape<PairInstance>(instance, id)); break;
    case CheckId::boollift: r = check_boollift(std::move(r), expect_shape<PairInstance>(instance, id)); break;
    case CheckId::centnil: r = check_centnil(std::move(r), ring_of(instance, id)); break;
    case CheckId::triang: r = check_triang(std::move(r), expect_shape<TriangularInstance>(instance, id), limits); break;
    case CheckId::unique_conseq: r = check_unique_conseq(std::move(r), expect_shape<PairInstance>(instance, id)); break;
    case CheckId::lift_equiv: r = check_lift_equiv(std::move(r), expect_shape<PairInstance>(instance, id)); break;
    case CheckId::semibool_char:
      semibool_conditions(r, expect_shape<PairInstance>(instance, id).ideal, "I");
      break;
    case CheckId::jclean_char: semibool_conditions(r, jacobson_radical(ring_of(instance, id)), "J"); break;
    case CheckId::nilclean_char: {
      const auto& ring = ring_of(instance, id);
      if (!is_commutative(*ring)) {
        r = skipped(std::move(r), "R is not commutative");
        break;
      }
      semibool_conditions(r, nil_ideal(ring), "Nil");
      break;
    }
    case CheckId::fourway: r = check_fourway(std::move(r), expect_shape<PairInstance>(instance, id)); break;
    case CheckId::prime_max: r = check_prime_max(std::move(r), expect_shape<PairInstance>(instance, id)); break;
    case CheckId::local: r = check_local(std::move(r), ring_of(instance, id)); break;
    case CheckId::ext_idem: r = check_ext_idem(std::move(r), expect_shape<ExtensionInstance>(instance, id), limits); break;
    case CheckId::ext_uj: r = check_ext_uj(std::move(r), expect_shape<ExtensionInstance>(instance, id), limits); break;
    case CheckId::ext_transfer:
      r = check_ext_transfer(std::move(r), expect_shape<ExtensionInstance>(instance, id), limits);
      break;
  }
  if (r.evidence_ring.empty()) r.evidence_ring = r.ring;
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

bool reverify_failure(const CheckResult& result, const Instance& instance, const Limits& limits) {
  if (result.verdict != Verdict::fail) return false;
  switch (result.id) {
    case CheckId::radical: {
      const auto& inst = std::get<PairInstance>(instance);
      if (!is_weakly_I_clean(inst.ideal) || result.evidence.empty()) return false;
      const auto& ring = *inst.ring;
      return std::all_of(result.evidence.begin(), result.evidence.end(), [&](Elem x) {
        bool in_radical = true;
        for (Elem s = 0; s < ring.order(); ++s) in_radical = in_radical && is_unit(ring, ring.sub(ring.one(), ring.mul(s, x)));
        return in_radical && !inst.ideal.contains(x);
      });
    }
    case CheckId::boollift:
    case CheckId::triang:
    case CheckId::prod: {
      if (result.evidence.empty()) break;
      std::optional<Ideal> ideal;
      if (const auto* p = std::get_if<PairInstance>(&instance)) ideal = p->ideal;
      if (const auto* t = std::get_if<TriangularInstance>(&instance)) {
        ideal = triangular_ideal(const_diag_triangular(t->base.ring, t->n, limits), t->base.ideal);
      }
      if (const auto* p = std::get_if<ProductInstance>(&instance)) {
        const auto product = product_ring(*p, limits);
        ideal = product_ideal_of(product, *p);
      }
      if (!ideal) return false;
      const bool unwitnessed = weak_clean_witnesses(*ideal, result.evidence.front()).empty();
      if (result.id != CheckId::prod) return unwitnessed;
      // Product: the recorded left side (weakly clean) must disagree with the right side.
      return unwitnessed == result.conditions.back().value;
    }
    case CheckId::centnil: {
      if (result.evidence.size() != 2) return false;
      const auto& ring = *ring_of(instance, result.id);
      const Elem e = result.evidence[0], f = result.evidence[1];
      const Elem n = ring.sub(e, f);
      return ring.mul(e, e) == e && ring.mul(f, f) == f && is_central(ring, f) && n != 0 && is_nilpotent(ring, n);
    }
    case CheckId::unique_conseq: {
      const auto& inst = std::get<PairInstance>(instance);
      if (!is_uniquely_weakly_I_clean(inst.ideal) || result.evidence.empty()) return false;
      const auto& ring = *inst.ring;
      return std::all_of(result.evidence.begin(), result.evidence.end(), [&](Elem a) {
        const bool idempotent = ring.mul(a, a) == a;
        const bool idem_in_ideal = idempotent && a != 0 && inst.ideal.contains(a);
        const bool qr_outside = is_unit(ring, ring.sub(ring.one(), a)) && !inst.ideal.contains(a);
        const bool noncentral = idempotent && !is_central(ring, a);
        return idem_in_ideal || qr_outside || noncentral;
      });
    }
    default: break;
  }
  // Equivalence checks: recompute every condition and confirm they still disagree.
  const auto again = run_check(result.id, instance, limits);
  if (again.conditions.size() != result.conditions.size()) return false;
  for (std::size_t i = 0; i < again.conditions.size(); ++i) {
    if (again.conditions[i].value != result.conditions[i].value) return false;
  }
  return again.verdict == Verdict::fail;
}

std::vector<Instance> default_corpus(const CorpusOptions& options) {
  const auto& limits = options.limits;
  std::vector<Instance> corpus;
  auto fits = [&](std::size_t order) { return order <= options.max_order; };

  auto add_ring = [&](const RingPtr& ring) {
    corpus.push_back(RingInstance{ring});
    for (auto& ideal : all_ideals(ring, limits)) corpus.push_back(PairInstance{ring, std::move(ideal)});
  };

  std::map<std::size_t, RingPtr> zmod;
  for (std::size_t n = 1; n <= 36; ++n) {
    zmod[n] = make_zmod(n, limits);
    if (fits(n)) add_ring(zmod[n]);
  }

  const std::size_t small[] = {2, 3, 4, 5};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i; j < 4; ++j) {
      const RingPtr a = zmod[small[i]], b = zmod[small[j]];
      if (!fits(a->order() * b->order())) continue;
      const RingPtr factors[] = {a, b};
      add_ring(direct_product(factors, limits));
      for (const auto& ia : all_ideals(a, limits)) {
        for (const auto& ib : all_ideals(b, limits)) {
          corpus.push_back(ProductInstance{{PairInstance{a, ia}, PairInstance{b, ib}}});
        }
      }
    }
  }

  const std::pair<std::size_t, std::size_t> triangular[] = {{2, 2}, {3, 2}, {4, 2}, {2, 3}};
  for (auto [q, n] : triangular) {
    const auto s = const_diag_triangular(zmod[q], n, limits);
    if (!fits(s->order())) continue;
    add_ring(s);
    for (const auto& ideal : all_ideals(zmod[q], limits)) {
      corpus.push_back(TriangularInstance{PairInstance{zmod[q], ideal}, n});
    }
  }

  const std::tuple<std::size_t, VKind, std::size_t> extensions[] = {
      {2, VKind::zero, 1}, {2, VKind::zero, 2}, {2, VKind::zero, 4}, {3, VKind::zero, 1}, {3, VKind::zero, 3},
      {2, VKind::ann, 4},  {3, VKind::ann, 9},  {2, VKind::ring, 2}, {2, VKind::ring, 4}, {3, VKind::ring, 3},
  };
  for (auto [q, kind, m] : extensions) {
    if (!fits(q * m)) continue;
    auto v = make_bimodule(zmod[q], kind, m, limits);
    add_ring(ideal_extension(zmod[q], v, limits));
    corpus.push_back(ExtensionInstance{zmod[q], std::move(v)});
  }
  return corpus;
}

std::vector<CheckResult> run_all(const std::vector<Instance>& corpus, const std::vector<CheckId>& checks,
                                 const Limits& limits, unsigned threads) {
  struct Task {
    std::size_t instance;
    CheckId id;
  };
  std::vector<CheckId> ordered;
  for (const auto& info : check_registry()) {
    if (std::find(checks.begin(), checks.end(), info.id) != checks.end()) ordered.push_back(info.id);
  }
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (CheckId id : ordered) {
      if (check_info(id).shape == shape_of(corpus[i])) tasks.push_back({i, id});
    }
  }

  std::vector<CheckResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      const auto& task = tasks[t];
      try {
        results[t] = run_check(task.id, corpus[task.instance], limits);
      } catch (const std::exception& e) {
        CheckResult& r = results[t];
        r = CheckResult{};
        r.id = task.id;
        r.ring = describe_ring(corpus[task.instance]);
        r.ideal = describe_ideal(corpus[task.instance]);
        r.verdict = Verdict::error;
        r.note = e.what();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(tasks.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
    worker();
  }
  return results;
}

RunSummary summarize(const std::vector<CheckResult>& results) {
  RunSummary summary;
  for (const auto& info : check_registry()) summary.exercised.emplace_back(info.id, 0);
  for (const auto& r : results) {
    switch (r.verdict) {
      case Verdict::pass: ++summary.passed; break;
      case Verdict::fail: ++summary.failed; break;
      case Verdict::skipped: ++summary.skipped; break;
      case Verdict::error: ++summary.errors; break;
    }
    if (r.verdict == Verdict::pass || r.verdict == Verdict::fail) {
      for (auto& [id, count] : summary.exercised) {
        if (id == r.id) ++count;
      }
    }
  }
  return summary;
}

std::optional<HuntQuery> hunt_from_name(std::string_view name) {
  if (name == "CONVERSE-L1") return HuntQuery::converse_l1;
  if (name == "CONVERSE-T2") return HuntQuery::converse_t2;
  if (name == "INTERSECTION") return HuntQuery::intersection;
  if (name == "STRICT") return HuntQuery::strict;
  return std::nullopt;
}

const char* to_string(HuntQuery query) {
  switch (query) {
    case HuntQuery::converse_l1: return "CONVERSE-L1";
    case HuntQuery::converse_t2: return "CONVERSE-T2";
    case HuntQuery::intersection: return "INTERSECTION";
    case HuntQuery::strict: return "STRICT";
  }
  return "?";
}

std::vector<HuntMatch> hunt(HuntQuery query, const std::vector<Instance>& corpus, const Limits& /*limits*/) {
  std::vector<HuntMatch> matches;
  if (query == HuntQuery::intersection) {
    // Group the corpus pairs by ring, keeping corpus order.
    std::vector<std::pair<RingPtr, std::vector<const Ideal*>>> groups;
    for (const auto& inst : corpus) {
      const auto* p = std::get_if<PairInstance>(&inst);
      if (!p) continue;
      auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == p->ring; });
      if (it == groups.end()) {
        groups.push_back({p->ring, {}});
        it = std::prev(groups.end());
      }
      it->second.push_back(&p->ideal);
    }
    for (const auto& [ring, ideals] : groups) {
      std::vector<bool> weak;
      for (const Ideal* ideal : ideals) weak.push_back(is_weakly_I_clean(*ideal));
      for (std::size_t i = 0; i < ideals.size(); ++i) {
        for (std::size_t j = i + 1; j < ideals.size(); ++j) {
          if (!weak[i] || !weak[j]) continue;
          const auto meet = intersect(*ideals[i], *ideals[j]);
          const bool weak_meet = is_weakly_I_clean(meet);
          if (weak_meet) continue;
          matches.push_back({ring->describe(),
                             ideals[i]->describe() + " cap " + ideals[j]->describe() + " = " + meet.describe(),
                             {{"weakly I1-clean", true}, {"weakly I2-clean", true}, {"weakly (I1 cap I2)-clean", false}}});
        }
      }
    }
    return matches;
  }

  for (const auto& inst : corpus) {
    const auto* p = std::get_if<PairInstance>(&inst);
    if (!p) continue;
    const bool weak = is_weakly_I_clean(p->ideal);
    HuntMatch m{p->ring->describe(), p->ideal.describe(), {}};
    switch (query) {
      case HuntQuery::converse_l1: {
        const bool contained = is_subset(jacobson_radical(p->ring), p->ideal);
        if (contained && !weak) {
          m.status = {{"J(R) inside I", true}, {"weakly I-clean", false}};
          matches.push_back(std::move(m));
        }
        break;
      }
      case HuntQuery::converse_t2: {
        const bool boolean = is_boolean(*quotient(p->ring, p->ideal).ring);
        if (weak && !boolean) {
          m.status = {{"weakly I-clean", true}, {"R/I boolean", false}};
          matches.push_back(std::move(m));
        }
        break;
      }
      case HuntQuery::strict: {
        if (weak && !is_I_clean(p->ideal)) {
          m.status = {{"weakly I-clean", true}, {"I-clean", false}};
          matches.push_back(std::move(m));
        }
        break;
      }
      case HuntQuery::intersection: break;
    }
  }
  return matches;
}

}  // namespace weakring
