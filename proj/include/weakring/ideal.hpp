#pragma once

#include <span>
#include <vector>

#include "weakring/ring.hpp"

namespace weakring {

/// Raised by is_prime / is_maximal when handed the whole ring.
class NotProperIdeal : public RingError {
 public:
  using RingError::RingError;
};

/// Two-sided ideal of a finite ring.
///
/// Always obtained through a checking factory (make_ideal, ideal_generated_by,
/// all_ideals, jacobson_radical, ...). `generators` is provenance only and may
/// be empty; it is what reports print.
class Ideal {
 public:
  const RingPtr& ring() const { return ring_; }
  const std::vector<Elem>& members() const { return members_; }
  const std::vector<Elem>& generators() const { return generators_; }
  std::size_t size() const { return members_.size(); }

  bool contains(Elem x) const { return mask_[x]; }
  bool is_zero() const { return members_.size() == 1; }
  bool is_whole_ring() const { return members_.size() == ring_->order(); }

  bool operator==(const Ideal& other) const { return ring_ == other.ring_ && members_ == other.members_; }

  /// Reparseable ideal literal: "0", or "<g1,g2,...>".
  std::string describe() const;

  /// Trusted constructor; `mask` must describe an ideal of `ring`.
  static Ideal from_mask(RingPtr ring, std::vector<bool> mask, std::vector<Elem> generators);

 private:
  RingPtr ring_;
  std::vector<Elem> members_;
  std::vector<Elem> generators_;
  std::vector<bool> mask_;
};

bool is_ideal(const FiniteRing& ring, std::span<const Elem> subset);

/// Wraps `subset` after checking the ideal invariants; throws RingError otherwise.
Ideal make_ideal(const RingPtr& ring, std::span<const Elem> subset);

Ideal zero_ideal(const RingPtr& ring);
Ideal whole_ring(const RingPtr& ring);

/// Smallest two-sided ideal containing `gens`, by closure to a fixpoint.
Ideal ideal_generated_by(const RingPtr& ring, std::span<const Elem> gens);

/// Every two-sided ideal exactly once, sorted by size then members.
/// Throws CapExceeded above limits.max_ideal_enum_order.
std::vector<Ideal> all_ideals(const RingPtr& ring, const Limits& limits = {});

/// No nonzero idempotent of the ring lies in `ideal`.
bool is_idempotent_free(const Ideal& ideal);

/// aRb in I implies a or b in I. Throws NotProperIdeal when I = R.
bool is_prime(const Ideal& ideal);

/// Every x outside I generates R together with I. Throws NotProperIdeal when I = R.
bool is_maximal(const Ideal& ideal);

/// Set intersection; throws RingError when the ideals live in different rings.
Ideal intersect(const Ideal& a, const Ideal& b);

bool is_subset(const Ideal& a, const Ideal& b);

}  // namespace weakring
