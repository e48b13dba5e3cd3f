#pragma once

// Brute-force reference arithmetic for the tests. Nothing here touches the
// library's Cayley tables: every operation is recomputed from its formula.
// Element indices follow the library encodings so results compare directly.

#include <cstddef>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using Set = std::set<std::size_t>;

struct Ring {
  std::size_t n = 1;
  std::function<std::size_t(std::size_t, std::size_t)> add;
  std::function<std::size_t(std::size_t, std::size_t)> mul;
  std::size_t one = 0;

  std::size_t neg(std::size_t a) const {
    for (std::size_t b = 0; b < n; ++b)
      if (add(a, b) == 0) return b;
    return n;
  }
  std::size_t sub(std::size_t a, std::size_t b) const { return add(a, neg(b)); }
};

inline Ring zmod(std::size_t n) {
  Ring r;
  r.n = n;
  r.add = [n](std::size_t a, std::size_t b) { return (a + b) % n; };
  r.mul = [n](std::size_t a, std::size_t b) { return (a * b) % n; };
  r.one = 1 % n;
  return r;
}

/// Z_a x Z_b with (x, y) stored as x * b + y.
inline Ring zmod_product(std::size_t a, std::size_t b) {
  Ring r;
  r.n = a * b;
  r.add = [a, b](std::size_t s, std::size_t t) { return ((s / b + t / b) % a) * b + (s % b + t % b) % b; };
  r.mul = [a, b](std::size_t s, std::size_t t) { return ((s / b) * (t / b) % a) * b + (s % b) * (t % b) % b; };
  r.one = (1 % a) * b + 1 % b;
  return r;
}

/// Z_p with a square-zero copy of Z_p attached: (r, v)(s, w) = (rs, rw + vs).
/// Stored as r * p + v.
inline Ring zmod_dual(std::size_t p) {
  Ring r;
  r.n = p * p;
  r.add = [p](std::size_t s, std::size_t t) { return ((s / p + t / p) % p) * p + (s % p + t % p) % p; };
  r.mul = [p](std::size_t s, std::size_t t) {
    const std::size_t a = s / p, v = s % p, b = t / p, w = t % p;
    return (a * b % p) * p + (a * w + v * b) % p;
  };
  r.one = p;
  return r;
}

inline Set idempotents(const Ring& r) {
  Set out;
  for (std::size_t x = 0; x < r.n; ++x)
    if (r.mul(x, x) == x) out.insert(x);
  return out;
}

inline bool is_unit(const Ring& r, std::size_t x) {
  for (std::size_t y = 0; y < r.n; ++y)
    if (r.mul(x, y) == r.one && r.mul(y, x) == r.one) return true;
  return false;
}

inline Set units(const Ring& r) {
  Set out;
  for (std::size_t x = 0; x < r.n; ++x)
    if (is_unit(r, x)) out.insert(x);
  return out;
}

inline Set nilpotents(const Ring& r) {
  Set out;
  for (std::size_t x = 0; x < r.n; ++x) {
    std::size_t p = x;
    for (std::size_t k = 0; k <= r.n && p != 0; ++k) p = r.mul(p, x);
    if (p == 0) out.insert(x);
  }
  return out;
}

inline Set quasi_regular(const Ring& r) {
  Set out;
  for (std::size_t x = 0; x < r.n; ++x)
    if (is_unit(r, r.sub(r.one, x))) out.insert(x);
  return out;
}

inline Set radical(const Ring& r) {
  Set out;
  for (std::size_t x = 0; x < r.n; ++x) {
    bool all = true;
    for (std::size_t s = 0; s < r.n && all; ++s) all = is_unit(r, r.sub(r.one, r.mul(s, x)));
    if (all) out.insert(x);
  }
  return out;
}

/// Idempotents e with x - e in I or x + e in I.
inline Set weak_idempotents(const Ring& r, const Set& ideal, std::size_t x) {
  Set out;
  for (std::size_t e : idempotents(r))
    if (ideal.count(r.sub(x, e)) || ideal.count(r.add(x, e))) out.insert(e);
  return out;
}

inline bool i_clean(const Ring& r, const Set& ideal) {
  for (std::size_t x = 0; x < r.n; ++x) {
    bool found = false;
    for (std::size_t e : idempotents(r)) found = found || ideal.count(r.sub(x, e));
    if (!found) return false;
  }
  return true;
}

inline bool weakly_clean(const Ring& r, const Set& ideal) {
  for (std::size_t x = 0; x < r.n; ++x)
    if (weak_idempotents(r, ideal, x).empty()) return false;
  return true;
}

inline bool uniquely_weakly_clean(const Ring& r, const Set& ideal) {
  for (std::size_t x = 0; x < r.n; ++x)
    if (weak_idempotents(r, ideal, x).size() != 1) return false;
  return true;
}

/// R/I semi-boolean, tested upstairs: x^2 - x in I or x^2 + x in I.
inline bool quotient_semi_boolean(const Ring& r, const Set& ideal) {
  for (std::size_t x = 0; x < r.n; ++x) {
    const std::size_t sq = r.mul(x, x);
    if (!ideal.count(r.sub(sq, x)) && !ideal.count(r.add(sq, x))) return false;
  }
  return true;
}

inline bool semi_boolean(const Ring& r) { return quotient_semi_boolean(r, Set{0}); }

/// Every x with x^2 - x in I has exactly one idempotent e with x - e or x + e in I.
inline bool lifts_uniquely_weakly(const Ring& r, const Set& ideal) {
  for (std::size_t x = 0; x < r.n; ++x) {
    if (!ideal.count(r.sub(r.mul(x, x), x))) continue;
    if (weak_idempotents(r, ideal, x).size() != 1) return false;
  }
  return true;
}

/// A finite ring is local iff its non-units are closed under addition.
inline bool local(const Ring& r) {
  const Set u = units(r);
  for (std::size_t a = 0; a < r.n; ++a)
    for (std::size_t b = 0; b < r.n; ++b)
      if (!u.count(a) && !u.count(b) && u.count(r.add(a, b))) return false;
  return r.n > 1;
}

/// All ideals of a commutative ring whose ideals are principal.
inline std::set<Set> principal_ideals(const Ring& r) {
  std::set<Set> out;
  for (std::size_t x = 0; x < r.n; ++x) {
    Set i;
    for (std::size_t s = 0; s < r.n; ++s) i.insert(r.mul(s, x));
    out.insert(i);
  }
  return out;
}

inline Set multiples(std::size_t n, std::size_t d) {
  Set out;
  for (std::size_t x = 0; x < n; x += d) out.insert(x);
  return out;
}

}  // namespace oracle
