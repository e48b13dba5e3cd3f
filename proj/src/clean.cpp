#include "weakring/clean.hpp"

#include <algorithm>

#include "weakring/constructions.hpp"
#include "weakring/structure.hpp"

namespace weakring {

namespace {

std::vector<CleanWitness> witnesses_using(const Ideal& ideal, const std::vector<Elem>& idems, Elem x) {
  const auto& r = *ideal.ring();
  std::vector<CleanWitness> out;
  for (Elem e : idems) {
    if (const Elem w = r.sub(x, e); ideal.contains(w)) out.push_back({x, e, Sign::plus, w});
    if (const Elem w = r.add(x, e); ideal.contains(w)) out.push_back({x, e, Sign::minus, w});
  }
  return out;
}

std::size_t distinct_count(const std::vector<CleanWitness>& ws) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    bool repeat = false;
    for (std::size_t j = 0; j < i && !repeat; ++j) repeat = ws[j].idempotent == ws[i].idempotent;
    if (!repeat) ++count;
  }
  return count;
}

bool is_idempotent_mod(const Ideal& ideal, Elem x) {
  const auto& r = *ideal.ring();
  return ideal.contains(r.sub(r.mul(x, x), x));
}

enum class Need { any, unique, central };

bool lifts(const Ideal& ideal, Need need) {
  const auto& ring = ideal.ring();
  std::vector<Elem> idems = idempotents(ring).members;
  if (need == Need::central) {
    std::erase_if(idems, [&](Elem e) { return !is_central(*ring, e); });
  }
  for (Elem x = 0; x < ring->order(); ++x) {
    if (!is_idempotent_mod(ideal, x)) continue;
    const auto ws = witnesses_using(ideal, idems, x);
    if (ws.empty()) return false;
    if (need == Need::unique && distinct_count(ws) != 1) return false;
  }
  return true;
}

}  // namespace

std::vector<CleanWitness> weak_clean_witnesses(const Ideal& ideal, Elem x) {
  return witnesses_using(ideal, idempotents(ideal.ring()).members, x);
}

std::vector<Elem> distinct_idempotents(const std::vector<CleanWitness>& witnesses) {
  std::vector<Elem> out;
  for (const auto& w : witnesses) out.push_back(w.idempotent);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool witness_holds(const Ideal& ideal, const CleanWitness& w) {
  const auto& r = *ideal.ring();
  if (r.mul(w.idempotent, w.idempotent) != w.idempotent || !ideal.contains(w.residual)) return false;
  const Elem rebuilt = w.sign == Sign::plus ? r.add(w.residual, w.idempotent) : r.sub(w.residual, w.idempotent);
  return rebuilt == w.element;
}

bool is_I_clean(const Ideal& ideal) {
  const auto& r = *ideal.ring();
  const auto idems = idempotents(ideal.ring()).members;
  for (Elem x = 0; x < r.order(); ++x) {
    const bool ok = std::any_of(idems.begin(), idems.end(), [&](Elem e) { return ideal.contains(r.sub(x, e)); });
    if (!ok) return false;
  }
  return true;
}

std::optional<Elem> first_unwitnessed(const Ideal& ideal) {
  const auto idems = idempotents(ideal.ring()).members;
  for (Elem x = 0; x < ideal.ring()->order(); ++x) {
    if (witnesses_using(ideal, idems, x).empty()) return x;
  }
  return std::nullopt;
}

std::optional<Elem> first_multiply_witnessed(const Ideal& ideal) {
  const auto idems = idempotents(ideal.ring()).members;
  for (Elem x = 0; x < ideal.ring()->order(); ++x) {
    if (distinct_count(witnesses_using(ideal, idems, x)) > 1) return x;
  }
  return std::nullopt;
}

bool is_weakly_I_clean(const Ideal& ideal) { return !first_unwitnessed(ideal); }

bool is_uniquely_weakly_I_clean(const Ideal& ideal) {
  const auto idems = idempotents(ideal.ring()).members;
  for (Elem x = 0; x < ideal.ring()->order(); ++x) {
    if (distinct_count(witnesses_using(ideal, idems, x)) != 1) return false;
  }
  return true;
}

bool is_boolean(const FiniteRing& r) {
  for (Elem x = 0; x < r.order(); ++x) {
    if (r.mul(x, x) != x) return false;
  }
  return true;
}

bool is_semi_boolean(const FiniteRing& r) {
  for (Elem x = 0; x < r.order(); ++x) {
    const Elem sq = r.mul(x, x);
    if (sq != x && sq != r.neg(x)) return false;
  }
  return true;
}

bool lifts_weakly(const Ideal& ideal) { return lifts(ideal, Need::any); }
bool lifts_uniquely_weakly(const Ideal& ideal) { return lifts(ideal, Need::unique); }
bool lifts_centrally_weakly(const Ideal& ideal) { return lifts(ideal, Need::central); }

bool has_central_weak_decompositions(const Ideal& ideal) {
  const auto& ring = ideal.ring();
  auto idems = idempotents(ring).members;
  std::erase_if(idems, [&](Elem e) { return !is_central(*ring, e); });
  for (Elem x = 0; x < ring->order(); ++x) {
    if (witnesses_using(ideal, idems, x).empty()) return false;
  }
  return true;
}

bool is_weakly_J_clean(const RingPtr& ring) { return is_weakly_I_clean(jacobson_radical(ring)); }
bool is_uniquely_weakly_J_clean(const RingPtr& ring) { return is_uniquely_weakly_I_clean(jacobson_radical(ring)); }

Ideal nil_ideal(const RingPtr& ring) {
  if (!is_commutative(*ring)) throw RingError("Nil(R) is only used as an ideal for commutative rings");
  const auto nil = nilpotents(ring).members;
  if (!is_ideal(*ring, nil)) throw RingError("nilpotent elements of " + ring->describe() + " do not form an ideal");
  return make_ideal(ring, nil);
}

bool is_weakly_nil_clean(const RingPtr& ring) { return is_weakly_I_clean(nil_ideal(ring)); }
bool is_uniquely_weakly_nil_clean(const RingPtr& ring) { return is_uniquely_weakly_I_clean(nil_ideal(ring)); }

bool is_local(const RingPtr& ring) {
  if (ring->is_zero_ring()) throw RingError("locality is undefined for the zero ring");
  const auto top = quotient(ring, jacobson_radical(ring)).ring;
  for (Elem x = 1; x < top->order(); ++x) {
    if (!is_unit(*top, x)) return false;
  }
  return true;
}

Classification classify(const Ideal& ideal, bool with_witnesses, std::string ideal_text) {
  const auto& ring = ideal.ring();
  Classification row;
  row.ring = ring->describe();
  row.ideal = ideal_text.empty() ? ideal.describe() : std::move(ideal_text);
  row.ideal_members = ideal.members();
  row.zero_ring = ring->is_zero_ring();

  const auto top = quotient(ring, ideal).ring;
  auto& f = row.flags;
  f.i_clean = is_I_clean(ideal);
  f.weakly_clean = is_weakly_I_clean(ideal);
  f.uniquely_weakly_clean = is_uniquely_weakly_I_clean(ideal);
  f.lifts_weakly = lifts_weakly(ideal);
  f.lifts_uniquely_weakly = lifts_uniquely_weakly(ideal);
  f.lifts_centrally_weakly = lifts_centrally_weakly(ideal);
  f.quotient_boolean = is_boolean(*top);
  f.quotient_semi_boolean = is_semi_boolean(*top);
  f.ideal_idempotent_free = is_idempotent_free(ideal);
  f.ring_abelian = is_abelian(ring);

  if (with_witnesses) {
    const auto idems = idempotents(ring).members;
    row.witnesses.reserve(ring->order());
    for (Elem x = 0; x < ring->order(); ++x) row.witnesses.push_back(witnesses_using(ideal, idems, x));
  }
  return row;
}

bool flags_consistent(const CleanFlags& f) {
  if (f.uniquely_weakly_clean && !f.weakly_clean) return false;
  if (f.i_clean && !f.weakly_clean) return false;
  if (f.quotient_boolean && !f.quotient_semi_boolean) return false;
  if (f.lifts_uniquely_weakly && !f.lifts_weakly) return false;
  if (f.lifts_centrally_weakly && !f.lifts_weakly) return false;
  return true;
}

}  // namespace weakring
