#pragma once

#include "weakring/ideal.hpp"
#include "weakring/ring.hpp"

namespace weakring {

// Structural subsets, each an exhaustive table scan.

ElementSet idempotents(const RingPtr& ring);
ElementSet units(const RingPtr& ring);
/// x^k = 0 for some k <= order.
ElementSet nilpotents(const RingPtr& ring);
ElementSet center(const RingPtr& ring);
/// {x : 1 - x is a unit}.
ElementSet quasi_regular_elements(const RingPtr& ring);

/// {x : 1 - r x is a unit for every r}. Checked on return to be an ideal
/// whose quotient has zero radical.
Ideal jacobson_radical(const RingPtr& ring);

/// Idempotents are central.
bool is_abelian(const RingPtr& ring);

bool is_unit(const FiniteRing& ring, Elem x);
bool is_nilpotent(const FiniteRing& ring, Elem x);
bool is_central(const FiniteRing& ring, Elem x);

}  // namespace weakring
