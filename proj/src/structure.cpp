#include "weakring/structure.hpp"

#include <algorithm>

#include "weakring/constructions.hpp"

namespace weakring {

namespace {

template <class Pred>
ElementSet collect(const RingPtr& ring, SetKind kind, Pred pred) {
  ElementSet set{ring, {}, kind};
  for (Elem x = 0; x < ring->order(); ++x) {
    if (pred(x)) set.members.push_back(x);
  }
  return set;
}

std::vector<bool> unit_mask(const FiniteRing& r) {
  const auto n = static_cast<Elem>(r.order());
  std::vector<bool> mask(n, false);
  for (Elem x = 0; x < n; ++x) {
    if (mask[x]) continue;
    for (Elem y = 0; y < n; ++y) {
      if (r.mul(x, y) == r.one() && r.mul(y, x) == r.one()) {
        mask[x] = mask[y] = true;
        break;
      }
    }
  }
  return mask;
}

std::vector<bool> radical_mask(const FiniteRing& r) {
  const auto n = static_cast<Elem>(r.order());
  const auto unit = unit_mask(r);
  std::vector<bool> mask(n, false);
  for (Elem x = 0; x < n; ++x) {
    bool inside = true;
    for (Elem s = 0; s < n && inside; ++s) inside = unit[r.sub(r.one(), r.mul(s, x))];
    mask[x] = inside;
  }
  return mask;
}

}  // namespace

bool is_unit(const FiniteRing& r, Elem x) {
  for (Elem y = 0; y < r.order(); ++y) {
    if (r.mul(x, y) == r.one() && r.mul(y, x) == r.one()) return true;
  }
  return false;
}

bool is_nilpotent(const FiniteRing& r, Elem x) {
  // x^order suffices; stop early on reaching 0 or revisiting x^1.
  Elem power = x;
  for (std::size_t k = 1; k <= r.order(); ++k) {
    if (power == 0) return true;
    power = r.mul(power, x);
    if (power == x) return false;
  }
  return power == 0;
}

bool is_central(const FiniteRing& r, Elem x) {
  for (Elem y = 0; y < r.order(); ++y) {
    if (r.mul(x, y) != r.mul(y, x)) return false;
  }
  return true;
}

ElementSet idempotents(const RingPtr& ring) {
  return collect(ring, SetKind::idempotents, [&](Elem x) { return ring->mul(x, x) == x; });
}

ElementSet units(const RingPtr& ring) {
  const auto mask = unit_mask(*ring);
  return collect(ring, SetKind::units, [&](Elem x) { return mask[x]; });
}

ElementSet nilpotents(const RingPtr& ring) {
  return collect(ring, SetKind::nilpotents, [&](Elem x) { return is_nilpotent(*ring, x); });
}

ElementSet center(const RingPtr& ring) {
  return collect(ring, SetKind::center, [&](Elem x) { return is_central(*ring, x); });
}

ElementSet quasi_regular_elements(const RingPtr& ring) {
  const auto mask = unit_mask(*ring);
  return collect(ring, SetKind::quasi_regular, [&](Elem x) { return mask[ring->sub(ring->one(), x)]; });
}

Ideal jacobson_radical(const RingPtr& ring) {
  auto mask = radical_mask(*ring);
  std::vector<Elem> members;
  for (Elem x = 0; x < ring->order(); ++x) {
    if (mask[x]) members.push_back(x);
  }
  if (!is_ideal(*ring, members)) throw RingError("radical scan of " + ring->describe() + " is not an ideal");
  auto radical = Ideal::from_mask(ring, std::move(mask), {});
  const auto top = quotient(ring, radical);
  const auto top_radical = radical_mask(*top.ring);
  if (std::count(top_radical.begin(), top_radical.end(), true) != 1) {
    throw RingError("R/J(R) has nonzero radical for " + ring->describe());
  }
  return radical;
}

bool is_abelian(const RingPtr& ring) {
  for (Elem e : idempotents(ring).members) {
    if (!is_central(*ring, e)) return false;
  }
  return true;
}

}  // namespace weakring
