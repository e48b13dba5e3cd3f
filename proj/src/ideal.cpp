#include "weakring/ideal.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "weakring/structure.hpp"

namespace weakring {

namespace {

std::vector<bool> mask_of(std::size_t order, std::span<const Elem> subset) {
  std::vector<bool> mask(order, false);
  for (Elem x : subset) {
    if (x >= order) throw RingError("element " + std::to_string(x) + " out of range for ring of order " +
                                    std::to_string(order));
    mask[x] = true;
  }
  return mask;
}

bool mask_is_ideal(const FiniteRing& r, const std::vector<bool>& mask) {
  const auto n = static_cast<Elem>(r.order());
  if (!mask[0]) return false;
  for (Elem w = 0; w < n; ++w) {
    if (!mask[w]) continue;
    if (!mask[r.neg(w)]) return false;
    for (Elem x = 0; x < n; ++x) {
      if (mask[x] && !mask[r.add(w, x)]) return false;
      if (!mask[r.mul(x, w)] || !mask[r.mul(w, x)]) return false;
    }
  }
  return true;
}

// Closes `mask` in place under addition, negation and two-sided multiplication.
void close_ideal(const FiniteRing& r, std::vector<bool>& mask) {
  const auto n = static_cast<Elem>(r.order());
  mask[0] = true;
  std::vector<Elem> members;
  for (Elem x = 0; x < n; ++x) {
    if (mask[x]) members.push_back(x);
  }
  std::vector<Elem> frontier = members;
  auto push = [&](Elem y) {
    if (!mask[y]) {
      mask[y] = true;
      members.push_back(y);
      frontier.push_back(y);
    }
  };
  while (!frontier.empty()) {
    const Elem w = frontier.back();
    frontier.pop_back();
    push(r.neg(w));
    for (Elem x = 0; x < n; ++x) {
      push(r.mul(x, w));
      push(r.mul(w, x));
    }
    // Sums with every member seen so far; later members pair with w when they are popped.
    for (std::size_t i = 0; i < members.size(); ++i) push(r.add(w, members[i]));
  }
}

}  // namespace

Ideal Ideal::from_mask(RingPtr ring, std::vector<bool> mask, std::vector<Elem> generators) {
  Ideal ideal;
  for (Elem x = 0; x < mask.size(); ++x) {
    if (mask[x]) ideal.members_.push_back(x);
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  ideal.ring_ = std::move(ring);
  ideal.mask_ = std::move(mask);
  ideal.generators_ = std::move(generators);
  return ideal;
}

std::string Ideal::describe() const {
  if (is_zero()) return "0";
  std::vector<Elem> shown = generators_;
  shown.erase(std::remove(shown.begin(), shown.end(), Elem{0}), shown.end());
  if (shown.empty()) {
    shown = members_;
    shown.erase(shown.begin());
  }
  std::string out = "<";
  for (std::size_t i = 0; i < shown.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(shown[i]);
  }
  return out + ">";
}

bool is_ideal(const FiniteRing& ring, std::span<const Elem> subset) {
  for (Elem x : subset) {
    if (x >= ring.order()) return false;
  }
  return mask_is_ideal(ring, mask_of(ring.order(), subset));
}

Ideal make_ideal(const RingPtr& ring, std::span<const Elem> subset) {
  auto mask = mask_of(ring->order(), subset);
  if (!mask_is_ideal(*ring, mask)) throw RingError("subset is not a two-sided ideal");
  return Ideal::from_mask(ring, std::move(mask), {subset.begin(), subset.end()});
}

Ideal zero_ideal(const RingPtr& ring) {
  std::vector<bool> mask(ring->order(), false);
  mask[0] = true;
  return Ideal::from_mask(ring, std::move(mask), {});
}

Ideal whole_ring(const RingPtr& ring) {
  return Ideal::from_mask(ring, std::vector<bool>(ring->order(), true), {ring->one()});
}

Ideal ideal_generated_by(const RingPtr& ring, std::span<const Elem> gens) {
  auto mask = mask_of(ring->order(), gens);
  close_ideal(*ring, mask);
  return Ideal::from_mask(ring, std::move(mask), {gens.begin(), gens.end()});
}

std::vector<Ideal> all_ideals(const RingPtr& ring, const Limits& limits) {
  const auto n = static_cast<Elem>(ring->order());
  if (n > limits.max_ideal_enum_order) {
    throw CapExceeded("ideal enumeration limited to rings of order " + std::to_string(limits.max_ideal_enum_order) +
                      ", got " + std::to_string(n));
  }
  // Breadth-first over the lattice: every ideal is reached from a smaller one by
  // adjoining a single element and closing.
  std::map<std::vector<bool>, std::vector<Elem>> seen;
  std::vector<std::vector<bool>> queue;
  std::vector<bool> zero(n, false);
  zero[0] = true;
  seen.emplace(zero, std::vector<Elem>{});
  queue.push_back(zero);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto current = queue[head];
    const auto gens = seen.at(current);
    for (Elem x = 0; x < n; ++x) {
      if (current[x]) continue;
      auto next = current;
      next[x] = true;
      close_ideal(*ring, next);
      if (!seen.contains(next)) {
        auto next_gens = gens;
        next_gens.push_back(x);
        seen.emplace(next, std::move(next_gens));
        queue.push_back(std::move(next));
      }
    }
  }

  std::vector<Ideal> ideals;
  ideals.reserve(seen.size());
  for (auto& [mask, gens] : seen) ideals.push_back(Ideal::from_mask(ring, mask, gens));
  std::sort(ideals.begin(), ideals.end(), [](const Ideal& a, const Ideal& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  });
  return ideals;
}

bool is_idempotent_free(const Ideal& ideal) {
  const auto& r = *ideal.ring();
  for (Elem e : ideal.members()) {
    if (e != 0 && r.mul(e, e) == e) return false;
  }
  return true;
}

bool is_prime(const Ideal& ideal) {
  if (ideal.is_whole_ring()) throw NotProperIdeal("primality requires a proper ideal");
  const auto& r = *ideal.ring();
  const auto n = static_cast<Elem>(r.order());
  for (Elem a = 0; a < n; ++a) {
    if (ideal.contains(a)) continue;
    for (Elem b = 0; b < n; ++b) {
      if (ideal.contains(b)) continue;
      bool escapes = false;
      for (Elem x = 0; x < n && !escapes; ++x) escapes = !ideal.contains(r.mul(r.mul(a, x), b));
      if (!escapes) return false;
    }
  }
  return true;
}

bool is_maximal(const Ideal& ideal) {
  if (ideal.is_whole_ring()) throw NotProperIdeal("maximality requires a proper ideal");
  const auto& ring = ideal.ring();
  const auto n = static_cast<Elem>(ring->order());
  for (Elem x = 0; x < n; ++x) {
    if (ideal.contains(x)) continue;
    auto gens = ideal.members();
    gens.push_back(x);
    if (!ideal_generated_by(ring, gens).is_whole_ring()) return false;
  }
  return true;
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring()) throw RingError("cannot intersect ideals of different rings");
  const auto n = a.ring()->order();
  std::vector<bool> mask(n, false);
  for (Elem x : a.members()) mask[x] = b.contains(x);
  return Ideal::from_mask(a.ring(), std::move(mask), {});
}

bool is_subset(const Ideal& a, const Ideal& b) {
  return std::all_of(a.members().begin(), a.members().end(), [&](Elem x) { return b.contains(x); });
}

}  // namespace weakring
