#pragma once

#include <span>
#include <string>
#include <vector>

#include "weakring/ideal.hpp"
#include "weakring/ring.hpp"

namespace weakring {

/// Integers mod n. n = 1 gives the zero ring.
RingPtr make_zmod(std::size_t n, const Limits& limits = {});

/// Componentwise product. Element index is the mixed-radix encoding of the
/// coordinate tuple, first factor most significant.
RingPtr direct_product(std::span<const RingPtr> factors, const Limits& limits = {});

std::vector<Elem> product_coordinates(const FiniteRing& product, Elem x);
Elem product_element(const FiniteRing& product, std::span<const Elem> coords);

/// Product ideal I_1 x ... x I_k inside a ring built by direct_product.
Ideal product_ideal(const RingPtr& product, std::span<const Ideal> factors);

/// Upper-triangular n x n matrices over `base` whose diagonal entries are all equal.
///
/// Elements are encoded as (diagonal, strictly-upper entries in row-major order)
/// in mixed radix base |R|, diagonal most significant.
RingPtr const_diag_triangular(const RingPtr& base, std::size_t n, const Limits& limits = {});

/// Shared diagonal entry of a matrix in a const_diag_triangular ring.
Elem triangular_diagonal(const FiniteRing& triangular, Elem x);
/// The scalar matrix a * I_n.
Elem triangular_scalar(const FiniteRing& triangular, Elem a);
/// {A : diagonal(A) in I}.
Ideal triangular_ideal(const RingPtr& triangular, const Ideal& base_ideal);

/// A finite ring without unity carrying left and right actions of `base`.
struct BimoduleRing {
  RingPtr base;
  std::size_t order = 1;
  std::vector<Elem> add;    // order x order
  std::vector<Elem> mul;    // order x order
  std::vector<Elem> left;   // |base| x order : r . v
  std::vector<Elem> right;  // order x |base| : v . r
  /// vspec text, e.g. "zero 2".
  std::string spec;

  Elem add_at(Elem v, Elem w) const { return add[v * order + w]; }
  Elem mul_at(Elem v, Elem w) const { return mul[v * order + w]; }
  Elem act_left(Elem r, Elem v) const { return left[r * order + v]; }
  Elem act_right(Elem v, Elem r) const { return right[v * base->order() + r]; }
};

enum class VKind { zero, ann, ring };

const char* to_string(VKind kind);

/// V = R^t with |V| = m = |R|^t and componentwise actions.
///   zero: vw = 0.
///   ann:  V = xR[x]/(x^(t+1)), truncated polynomial product.
///   ring: componentwise multiplication of R.
/// Throws RingError when m is not a power of |R|.
BimoduleRing make_bimodule(const RingPtr& base, VKind kind, std::size_t m, const Limits& limits = {});

/// No nonzero v with v*v = v.
bool is_idempotent_free(const BimoduleRing& v);

/// e.v = v.e for every idempotent e of the base and every v.
bool idempotents_commute_with(const BimoduleRing& v);

/// For every v there is w with v + w + vw = 0.
bool is_quasi_regular_ring(const BimoduleRing& v);

/// Ring on R (+) V with (r,v)(s,w) = (rs, rw + vs + vw).
/// Element (r, v) has index r * |V| + v. The result is axiom-checked; a
/// failure raises AxiomViolation (inconsistent action data).
RingPtr ideal_extension(const RingPtr& base, const BimoduleRing& v, const Limits& limits = {});

struct ExtensionPair {
  Elem r;
  Elem v;
};

ExtensionPair extension_pair(const FiniteRing& extension, Elem x);
Elem extension_element(const FiniteRing& extension, Elem r, Elem v);
/// I x V inside an extension ring.
Ideal extension_ideal(const RingPtr& extension, const Ideal& base_ideal);

struct Quotient {
  RingPtr ring;
  /// Element of the parent ring -> coset index.
  std::vector<Elem> projection;
};

/// Cosets of I, indexed by smallest representative (coset of 0 is index 0).
/// `ideal_text` names the ideal in the provenance expression (defaults to I.describe()).
Quotient quotient(const RingPtr& ring, const Ideal& ideal, std::string ideal_text = {});

}  // namespace weakring
