#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weakring/ideal.hpp"
#include "weakring/ring.hpp"

namespace weakring {

enum class Sign { plus, minus };

/// x = residual + e (plus) or x = residual - e (minus), residual in the ideal.
struct CleanWitness {
  Elem element = 0;
  Elem idempotent = 0;
  Sign sign = Sign::plus;
  Elem residual = 0;

  bool operator==(const CleanWitness&) const = default;
};

/// Every (e, sign) with x - e in I (plus) or x + e in I (minus). When both
/// signs work for one e, both entries are listed.
std::vector<CleanWitness> weak_clean_witnesses(const Ideal& ideal, Elem x);

/// Distinct idempotents across a witness list, sorted.
std::vector<Elem> distinct_idempotents(const std::vector<CleanWitness>& witnesses);

/// Re-checks a witness from scratch against ring arithmetic.
bool witness_holds(const Ideal& ideal, const CleanWitness& w);

bool is_I_clean(const Ideal& ideal);
bool is_weakly_I_clean(const Ideal& ideal);
bool is_uniquely_weakly_I_clean(const Ideal& ideal);

/// First x with no weak witness, if any.
std::optional<Elem> first_unwitnessed(const Ideal& ideal);
/// First x whose weak witnesses use two or more distinct idempotents.
std::optional<Elem> first_multiply_witnessed(const Ideal& ideal);

bool is_boolean(const FiniteRing& ring);
bool is_semi_boolean(const FiniteRing& ring);

/// Idempotent lifting modulo I: every x with x^2 - x in I has an (any /
/// exactly one distinct / central) idempotent e with x - e or x + e in I.
bool lifts_weakly(const Ideal& ideal);
bool lifts_uniquely_weakly(const Ideal& ideal);
bool lifts_centrally_weakly(const Ideal& ideal);

/// Every x has a central idempotent e with x - e or x + e in I.
bool has_central_weak_decompositions(const Ideal& ideal);

bool is_weakly_J_clean(const RingPtr& ring);
bool is_uniquely_weakly_J_clean(const RingPtr& ring);

/// Nil(R) as an ideal. Throws RingError for noncommutative rings, or when the
/// nilpotents do not form an ideal.
Ideal nil_ideal(const RingPtr& ring);

bool is_weakly_nil_clean(const RingPtr& ring);
bool is_uniquely_weakly_nil_clean(const RingPtr& ring);

/// R/J(R) is a division ring. Throws RingError on the zero ring.
bool is_local(const RingPtr& ring);

struct CleanFlags {
  bool i_clean = false;
  bool weakly_clean = false;
  bool uniquely_weakly_clean = false;
  bool lifts_weakly = false;
  bool lifts_uniquely_weakly = false;
  bool lifts_centrally_weakly = false;
  bool quotient_boolean = false;
  bool quotient_semi_boolean = false;
  bool ideal_idempotent_free = false;
  bool ring_abelian = false;
};

/// One report row for a (ring, ideal) pair.
struct Classification {
  std::string ring;
  std::string ideal;
  std::vector<Elem> ideal_members;
  bool zero_ring = false;
  CleanFlags flags;
  /// Indexed by element; filled only when requested.
  std::vector<std::vector<CleanWitness>> witnesses;
};

Classification classify(const Ideal& ideal, bool with_witnesses = false, std::string ideal_text = {});

/// uniquely => weakly, I-clean => weakly, boolean quotient => semi-boolean quotient.
bool flags_consistent(const CleanFlags& flags);

}  // namespace weakring
