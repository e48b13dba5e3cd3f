#include "weakring/constructions.hpp"

#include <algorithm>

#include "weakring/structure.hpp"

namespace weakring {

namespace {

void check_cap(std::size_t order, const Limits& limits, const std::string& what) {
  if (order > limits.max_order) {
    throw CapExceeded(what + " would have " + std::to_string(order) + " elements (cap " +
                      std::to_string(limits.max_order) + ")");
  }
}

// q^k, or nullopt-like max value once it passes `cap`.
std::size_t capped_power(std::size_t q, std::size_t k, std::size_t cap) {
  std::size_t value = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (q != 0 && value > cap / q + 1) return cap + 1;
    value *= q;
    if (value > cap) return cap + 1;
  }
  return value;
}

std::string join_labels(const std::vector<std::string>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i];
  }
  return out + ")";
}

}  // namespace

RingPtr make_zmod(std::size_t n, const Limits& limits) {
  if (n == 0) throw RingError("Z_n requires n >= 1");
  check_cap(n, limits, "Z" + std::to_string(n));
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<Elem>((a + b) % n);
      mul[a * n + b] = static_cast<Elem>((a * b) % n);
    }
  }
  Provenance prov{Construction::zmod, "Z" + std::to_string(n), {}, n};
  return std::make_shared<const FiniteRing>(n, std::move(add), std::move(mul), static_cast<Elem>(1 % n),
                                            std::vector<std::string>{}, std::move(prov));
}

RingPtr direct_product(std::span<const RingPtr> factors, const Limits& limits) {
  if (factors.empty()) throw RingError("direct product needs at least one factor");
  std::size_t order = 1;
  std::string expr;
  for (const auto& f : factors) {
    if (f->order() > limits.max_order || order > limits.max_order / f->order()) {
      throw CapExceeded("direct product exceeds the element cap " + std::to_string(limits.max_order));
    }
    order *= f->order();
    if (!expr.empty()) expr += " x ";
    expr += f->describe();
  }
  check_cap(order, limits, "direct product");

  const std::size_t k = factors.size();
  std::vector<std::vector<Elem>> coords(order, std::vector<Elem>(k));
  for (std::size_t x = 0; x < order; ++x) {
    std::size_t rest = x;
    for (std::size_t i = k; i-- > 0;) {
      coords[x][i] = static_cast<Elem>(rest % factors[i]->order());
      rest /= factors[i]->order();
    }
  }
  auto encode = [&](const std::vector<Elem>& c) {
    std::size_t x = 0;
    for (std::size_t i = 0; i < k; ++i) x = x * factors[i]->order() + c[i];
    return static_cast<Elem>(x);
  };

  std::vector<Elem> add(order * order), mul(order * order);
  std::vector<Elem> tmp_add(k), tmp_mul(k);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t i = 0; i < k; ++i) {
        tmp_add[i] = factors[i]->add(coords[a][i], coords[b][i]);
        tmp_mul[i] = factors[i]->mul(coords[a][i], coords[b][i]);
      }
      add[a * order + b] = encode(tmp_add);
      mul[a * order + b] = encode(tmp_mul);
    }
  }
  std::vector<Elem> ones(k);
  for (std::size_t i = 0; i < k; ++i) ones[i] = factors[i]->one();

  std::vector<std::string> labels(order);
  for (std::size_t x = 0; x < order; ++x) {
    std::vector<std::string> parts(k);
    for (std::size_t i = 0; i < k; ++i) parts[i] = factors[i]->label(coords[x][i]);
    labels[x] = join_labels(parts);
  }
  Provenance prov{Construction::product, expr, {factors.begin(), factors.end()}, k};
  return std::make_shared<const FiniteRing>(order, std::move(add), std::move(mul), encode(ones), std::move(labels),
                                            std::move(prov));
}

std::vector<Elem> product_coordinates(const FiniteRing& product, Elem x) {
  const auto& parts = product.provenance().parts;
  if (product.provenance().kind != Construction::product) throw RingError("not a direct product");
  std::vector<Elem> coords(parts.size());
  std::size_t rest = x;
  for (std::size_t i = parts.size(); i-- > 0;) {
    coords[i] = static_cast<Elem>(rest % parts[i]->order());
    rest /= parts[i]->order();
  }
  return coords;
}

Elem product_element(const FiniteRing& product, std::span<const Elem> coords) {
  const auto& parts = product.provenance().parts;
  if (product.provenance().kind != Construction::product || coords.size() != parts.size()) {
    throw RingError("coordinate tuple does not match the product");
  }
  std::size_t x = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) x = x * parts[i]->order() + coords[i];
  return static_cast<Elem>(x);
}

Ideal product_ideal(const RingPtr& product, std::span<const Ideal> factors) {
  const auto& parts = product->provenance().parts;
  if (product->provenance().kind != Construction::product || factors.size() != parts.size()) {
    throw RingError("factor ideals do not match the product");
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (factors[i].ring() != parts[i]) throw RingError("factor ideal belongs to a different ring");
  }
  std::vector<bool> mask(product->order(), false);
  for (Elem x = 0; x < product->order(); ++x) {
    auto c = product_coordinates(*product, x);
    bool inside = true;
    for (std::size_t i = 0; i < c.size() && inside; ++i) inside = factors[i].contains(c[i]);
    mask[x] = inside;
  }
  std::vector<Elem> gens;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<Elem> local = factors[i].generators();
    if (local.empty()) local = factors[i].members();
    for (Elem g : local) {
      if (g == 0) continue;
      std::vector<Elem> c(parts.size(), 0);
      c[i] = g;
      gens.push_back(product_element(*product, c));
    }
  }
  return Ideal::from_mask(product, std::move(mask), std::move(gens));
}

namespace {

struct TriangularShape {
  std::size_t n;
  std::size_t q;      // base order
  std::size_t upper;  // n(n-1)/2
  std::size_t stride; // q^upper
};

TriangularShape triangular_shape(const FiniteRing& s) {
  if (s.provenance().kind != Construction::const_diag_triangular) throw RingError("not a constant-diagonal ring");
  const std::size_t n = s.provenance().param;
  const std::size_t q = s.provenance().parts.front()->order();
  const std::size_t upper = n * (n - 1) / 2;
  return {n, q, upper, s.order() / q};
}

}  // namespace

RingPtr const_diag_triangular(const RingPtr& base, std::size_t n, const Limits& limits) {
  if (n < 2) throw RingError("constant-diagonal triangular ring needs n >= 2");
  const std::size_t q = base->order();
  const std::size_t upper = n * (n - 1) / 2;
  const std::size_t order = capped_power(q, upper + 1, limits.max_order);
  const std::string expr = "S" + std::to_string(n) + "(" + base->describe() + ")";
  check_cap(order, limits, expr);

  // Row-major matrices of base elements, zero below the diagonal.
  std::vector<std::vector<Elem>> mats(order, std::vector<Elem>(n * n, 0));
  for (std::size_t x = 0; x < order; ++x) {
    std::size_t rest = x;
    std::vector<Elem> digits(upper + 1);
    for (std::size_t i = upper + 1; i-- > 0;) {
      digits[i] = static_cast<Elem>(rest % q);
      rest /= q;
    }
    auto& m = mats[x];
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] = digits[0];
    std::size_t k = 1;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) m[i * n + j] = digits[k++];
    }
  }
  auto encode = [&](const std::vector<Elem>& m) {
    std::size_t x = m[0];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) x = x * q + m[i * n + j];
    }
    return static_cast<Elem>(x);
  };

  std::vector<Elem> add(order * order), mul(order * order);
  std::vector<Elem> sum(n * n), prod(n * n);
  for (std::size_t a = 0; a < order; ++a) {
    const auto& ma = mats[a];
    for (std::size_t b = 0; b < order; ++b) {
      const auto& mb = mats[b];
      for (std::size_t i = 0; i < n * n; ++i) sum[i] = base->add(ma[i], mb[i]);
      std::fill(prod.begin(), prod.end(), Elem{0});
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
          Elem acc = 0;
          for (std::size_t k = i; k <= j; ++k) acc = base->add(acc, base->mul(ma[i * n + k], mb[k * n + j]));
          prod[i * n + j] = acc;
        }
      }
      add[a * order + b] = encode(sum);
      mul[a * order + b] = encode(prod);
    }
  }

  std::vector<std::string> labels(order);
  for (std::size_t x = 0; x < order; ++x) {
    const auto& m = mats[x];
    std::string label = "[" + base->label(m[0]) + ";";
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!first) label += ",";
        label += base->label(m[i * n + j]);
        first = false;
      }
    }
    labels[x] = label + "]";
  }

  std::vector<Elem> identity(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) identity[i * n + i] = base->one();
  Provenance prov{Construction::const_diag_triangular, expr, {base}, n};
  return std::make_shared<const FiniteRing>(order, std::move(add), std::move(mul), encode(identity),
                                            std::move(labels), std::move(prov));
}

Elem triangular_diagonal(const FiniteRing& triangular, Elem x) {
  return static_cast<Elem>(x / triangular_shape(triangular).stride);
}

Elem triangular_scalar(const FiniteRing& triangular, Elem a) {
  return static_cast<Elem>(a * triangular_shape(triangular).stride);
}

Ideal triangular_ideal(const RingPtr& triangular, const Ideal& base_ideal) {
  const auto shape = triangular_shape(*triangular);
  if (base_ideal.ring() != triangular->provenance().parts.front()) {
    throw RingError("ideal does not belong to the diagonal ring");
  }
  std::vector<bool> mask(triangular->order(), false);
  for (Elem x = 0; x < triangular->order(); ++x) mask[x] = base_ideal.contains(triangular_diagonal(*triangular, x));

  std::vector<Elem> gens;
  std::vector<Elem> base_gens = base_ideal.generators();
  if (base_gens.empty()) base_gens = base_ideal.members();
  for (Elem g : base_gens) {
    if (g != 0) gens.push_back(triangular_scalar(*triangular, g));
  }
  // Matrix units above the diagonal, one digit each.
  const Elem one = triangular->provenance().parts.front()->one();
  std::size_t place = 1;
  for (std::size_t k = 0; k < shape.upper; ++k, place *= shape.q) {
    if (one != 0) gens.push_back(static_cast<Elem>(one * place));
  }
  return Ideal::from_mask(triangular, std::move(mask), std::move(gens));
}

const char* to_string(VKind kind) {
  switch (kind) {
    case VKind::zero: return "zero";
    case VKind::ann: return "ann";
    case VKind::ring: return "ring";
  }
  return "zero";
}

BimoduleRing make_bimodule(const RingPtr& base, VKind kind, std::size_t m, const Limits& limits) {
  const std::size_t q = base->order();
  std::size_t t = 0;
  std::size_t size = 1;
  while (size < m && q > 1) {
    size *= q;
    ++t;
  }
  if (m == 0 || size != m) {
    throw RingError(std::string(to_string(kind)) + " " + std::to_string(m) + ": order must be a power of |R| = " +
                    std::to_string(q));
  }
  check_cap(m, limits, "bimodule");

  std::vector<std::vector<Elem>> coords(m, std::vector<Elem>(t));
  for (std::size_t v = 0; v < m; ++v) {
    std::size_t rest = v;
    for (std::size_t i = t; i-- > 0;) {
      coords[v][i] = static_cast<Elem>(rest % q);
      rest /= q;
    }
  }
  auto encode = [&](const std::vector<Elem>& c) {
    std::size_t v = 0;
    for (std::size_t i = 0; i < t; ++i) v = v * q + c[i];
    return static_cast<Elem>(v);
  };

  BimoduleRing out;
  out.base = base;
  out.order = m;
  out.spec = std::string(to_string(kind)) + " " + std::to_string(m);
  out.add.resize(m * m);
  out.mul.resize(m * m);
  out.left.resize(q * m);
  out.right.resize(m * q);

  std::vector<Elem> c(t);
  for (std::size_t v = 0; v < m; ++v) {
    for (std::size_t w = 0; w < m; ++w) {
      for (std::size_t i = 0; i < t; ++i) c[i] = base->add(coords[v][i], coords[w][i]);
      out.add[v * m + w] = encode(c);

      std::fill(c.begin(), c.end(), Elem{0});
      switch (kind) {
        case VKind::zero: break;
        case VKind::ring:
          for (std::size_t i = 0; i < t; ++i) c[i] = base->mul(coords[v][i], coords[w][i]);
          break;
        case VKind::ann:
          // Coordinate i is the coefficient of x^(i+1).
          for (std::size_t i = 0; i < t; ++i) {
            for (std::size_t j = 0; i + j + 1 < t; ++j) {
              c[i + j + 1] = base->add(c[i + j + 1], base->mul(coords[v][i], coords[w][j]));
            }
          }
          break;
      }
      out.mul[v * m + w] = encode(c);
    }
  }
  for (std::size_t r = 0; r < q; ++r) {
    for (std::size_t v = 0; v < m; ++v) {
      for (std::size_t i = 0; i < t; ++i) c[i] = base->mul(static_cast<Elem>(r), coords[v][i]);
      out.left[r * m + v] = encode(c);
      for (std::size_t i = 0; i < t; ++i) c[i] = base->mul(coords[v][i], static_cast<Elem>(r));
      out.right[v * q + r] = encode(c);
    }
  }
  return out;
}

bool is_idempotent_free(const BimoduleRing& v) {
  for (Elem x = 1; x < v.order; ++x) {
    if (v.mul_at(x, x) == x) return false;
  }
  return true;
}

bool idempotents_commute_with(const BimoduleRing& v) {
  for (Elem e : idempotents(v.base).members) {
    for (Elem x = 0; x < v.order; ++x) {
      if (v.act_left(e, x) != v.act_right(x, e)) return false;
    }
  }
  return true;
}

bool is_quasi_regular_ring(const BimoduleRing& v) {
  for (Elem x = 0; x < v.order; ++x) {
    bool found = false;
    for (Elem w = 0; w < v.order && !found; ++w) found = v.add_at(v.add_at(x, w), v.mul_at(x, w)) == 0;
    if (!found) return false;
  }
  return true;
}

RingPtr ideal_extension(const RingPtr& base, const BimoduleRing& v, const Limits& limits) {
  if (v.base != base) throw RingError("bimodule is defined over a different ring");
  const std::size_t q = base->order();
  const std::size_t m = v.order;
  if (m > limits.max_order / q) {
    throw CapExceeded("ideal extension exceeds the element cap " + std::to_string(limits.max_order));
  }
  const std::size_t order = q * m;
  check_cap(order, limits, "ideal extension");

  std::vector<Elem> add(order * order), mul(order * order);
  for (Elem r = 0; r < q; ++r) {
    for (Elem x = 0; x < m; ++x) {
      const std::size_t a = r * m + x;
      for (Elem s = 0; s < q; ++s) {
        for (Elem w = 0; w < m; ++w) {
          const std::size_t b = s * m + w;
          add[a * order + b] = static_cast<Elem>(base->add(r, s) * m + v.add_at(x, w));
          const Elem tail = v.add_at(v.add_at(v.act_left(r, w), v.act_right(x, s)), v.mul_at(x, w));
          mul[a * order + b] = static_cast<Elem>(base->mul(r, s) * m + tail);
        }
      }
    }
  }

  std::vector<std::string> labels(order);
  const auto base_labels = base->labels();
  for (std::size_t r = 0; r < q; ++r) {
    for (std::size_t x = 0; x < m; ++x) {
      std::string vlabel;
      if (m == 1) {
        vlabel = "0";
      } else if (m == q) {
        vlabel = base_labels[x];
      } else {
        // t > 1 coordinates, most significant first.
        std::vector<std::string> parts;
        std::size_t rest = x;
        for (std::size_t size = 1; size < m; size *= q) {
          parts.insert(parts.begin(), base_labels[rest % q]);
          rest /= q;
        }
        vlabel = join_labels(parts);
      }
      labels[r * m + x] = "(" + base_labels[r] + "," + vlabel + ")";
    }
  }

  Provenance prov{Construction::ideal_extension, "ext(" + base->describe() + ", " + v.spec + ")", {base}, m};
  auto ring = std::make_shared<const FiniteRing>(order, std::move(add), std::move(mul), static_cast<Elem>(base->one() * m),
                                                 std::move(labels), std::move(prov));
  if (auto check = verify_ring_axioms(*ring); !check.ok) {
    throw AxiomViolation("ideal extension " + ring->describe() + " violates " + check.law +
                         " (inconsistent bimodule data)");
  }
  return ring;
}

ExtensionPair extension_pair(const FiniteRing& extension, Elem x) {
  if (extension.provenance().kind != Construction::ideal_extension) throw RingError("not an ideal extension");
  const auto m = static_cast<Elem>(extension.provenance().param);
  return {x / m, x % m};
}

Elem extension_element(const FiniteRing& extension, Elem r, Elem v) {
  if (extension.provenance().kind != Construction::ideal_extension) throw RingError("not an ideal extension");
  return static_cast<Elem>(r * extension.provenance().param + v);
}

Ideal extension_ideal(const RingPtr& extension, const Ideal& base_ideal) {
  if (extension->provenance().kind != Construction::ideal_extension ||
      base_ideal.ring() != extension->provenance().parts.front()) {
    throw RingError("ideal does not belong to the extension's base ring");
  }
  std::vector<bool> mask(extension->order(), false);
  for (Elem x = 0; x < extension->order(); ++x) mask[x] = base_ideal.contains(extension_pair(*extension, x).r);
  std::vector<Elem> gens;
  std::vector<Elem> base_gens = base_ideal.generators();
  if (base_gens.empty()) base_gens = base_ideal.members();
  for (Elem g : base_gens) {
    if (g != 0) gens.push_back(extension_element(*extension, g, 0));
  }
  const auto m = static_cast<Elem>(extension->provenance().param);
  for (Elem v = 1; v < m; ++v) gens.push_back(extension_element(*extension, 0, v));
  return Ideal::from_mask(extension, std::move(mask), std::move(gens));
}

Quotient quotient(const RingPtr& ring, const Ideal& ideal, std::string ideal_text) {
  if (ideal.ring() != ring) throw RingError("ideal belongs to a different ring");
  if (!is_ideal(*ring, ideal.members())) throw RingError("quotient by a subset that is not an ideal");
  const auto n = static_cast<Elem>(ring->order());
  constexpr Elem unassigned = ~Elem{0};
  std::vector<Elem> projection(n, unassigned);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (projection[x] != unassigned) continue;
    const auto coset = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem i : ideal.members()) projection[ring->add(x, i)] = coset;
  }
  const std::size_t k = reps.size();
  std::vector<Elem> add(k * k), mul(k * k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      add[a * k + b] = projection[ring->add(reps[a], reps[b])];
      mul[a * k + b] = projection[ring->mul(reps[a], reps[b])];
    }
  }
  // Coset tables must not depend on the representatives.
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (projection[ring->add(x, y)] != add[projection[x] * k + projection[y]] ||
          projection[ring->mul(x, y)] != mul[projection[x] * k + projection[y]]) {
        throw AxiomViolation("coset arithmetic is not well defined");
      }
    }
  }
  std::vector<std::string> labels(k);
  for (std::size_t c = 0; c < k; ++c) labels[c] = "[" + ring->label(reps[c]) + "]";
  if (ideal_text.empty()) ideal_text = ideal.describe();
  Provenance prov{Construction::quotient, "quot(" + ring->describe() + ", " + ideal_text + ")", {ring}, k};
  auto q = std::make_shared<const FiniteRing>(k, std::move(add), std::move(mul), projection[ring->one()],
                                              std::move(labels), std::move(prov));
  return {std::move(q), std::move(projection)};
}

}  // namespace weakring
