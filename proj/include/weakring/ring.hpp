#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace weakring {

/// Dense element index. 0 is always the additive identity.
using Elem = std::uint32_t;

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction would exceed the configured element cap.
class CapExceeded : public RingError {
 public:
  using RingError::RingError;
};

/// Tables handed to a construction do not form a unital ring.
class AxiomViolation : public RingError {
 public:
  using RingError::RingError;
};

struct Limits {
  std::size_t max_order = 4096;
  std::size_t max_ideal_enum_order = 64;

  /// Defaults, with WEAKRING_SIZE_CAP overriding max_order when set.
  static Limits from_env();
};

enum class Construction { zmod, product, quotient, const_diag_triangular, ideal_extension, tables };

struct Provenance {
  Construction kind = Construction::tables;
  /// Canonical ring expression, reparseable when the ring came from one.
  std::string expr;
  /// zmod: factors empty. product: the factors. quotient/triangular/extension: the base ring.
  std::vector<RingPtr> parts;
  /// zmod: n. triangular: matrix size. extension: |V|.
  std::size_t param = 0;
};

/// Finite unital ring given by full addition and multiplication tables.
///
/// Construction only checks table shapes. Use verify_ring_axioms() for the
/// algebraic laws; the library constructions call it where the laws are not
/// already guaranteed.
class FiniteRing {
 public:
  FiniteRing(std::size_t order, std::vector<Elem> add, std::vector<Elem> mul, Elem one,
             std::vector<std::string> labels = {}, Provenance provenance = {});

  std::size_t order() const { return order_; }
  Elem zero() const { return 0; }
  Elem one() const { return one_; }
  bool is_zero_ring() const { return order_ == 1; }

  Elem add(Elem a, Elem b) const { return add_[a * order_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * order_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem pow(Elem a, std::size_t k) const;

  /// False when some element has no additive inverse (corrupted tables).
  bool has_negatives() const { return has_negatives_; }

  const std::string& label(Elem a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Provenance& provenance() const { return provenance_; }
  /// Expression text if known, otherwise a table descriptor.
  std::string describe() const;

  std::span<const Elem> add_table() const { return add_; }
  std::span<const Elem> mul_table() const { return mul_; }

 private:
  std::size_t order_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  Elem one_;
  bool has_negatives_ = true;
  std::vector<std::string> labels_;
  Provenance provenance_;
};

enum class SetKind { idempotents, units, nilpotents, center, radical, quasi_regular, custom };

const char* to_string(SetKind kind);

/// Sorted, duplicate-free subset of a ring's elements.
struct ElementSet {
  RingPtr ring;
  std::vector<Elem> members;
  SetKind kind = SetKind::custom;

  bool contains(Elem x) const;
  std::size_t size() const { return members.size(); }
};

/// Outcome of a ring axiom scan. On failure `witness` holds the offending
/// elements (one to three of them, per law).
struct AxiomCheck {
  bool ok = true;
  std::string law;
  std::vector<Elem> witness;
};

AxiomCheck verify_ring_axioms(const FiniteRing& ring);

bool is_commutative(const FiniteRing& ring);

}  // namespace weakring
