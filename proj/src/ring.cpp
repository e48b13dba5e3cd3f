#include "weakring/ring.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string_view>

namespace weakring {

Limits Limits::from_env() {
  Limits limits;
  if (const char* raw = std::getenv("WEAKRING_SIZE_CAP")) {
    std::string_view text(raw);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
      throw RingError("WEAKRING_SIZE_CAP must be a positive integer, got '" + std::string(text) + "'");
    }
    limits.max_order = value;
  }
  return limits;
}

FiniteRing::FiniteRing(std::size_t order, std::vector<Elem> add, std::vector<Elem> mul, Elem one,
                       std::vector<std::string> labels, Provenance provenance)
    : order_(order),
      add_(std::move(add)),
      mul_(std::move(mul)),
      one_(one),
      labels_(std::move(labels)),
      provenance_(std::move(provenance)) {
  if (order_ == 0) throw RingError("ring order must be positive");
  if (add_.size() != order_ * order_ || mul_.size() != order_ * order_) {
    throw RingError("table size does not match ring order");
  }
  auto in_range = [this](Elem x) { return x < order_; };
  if (!std::all_of(add_.begin(), add_.end(), in_range) || !std::all_of(mul_.begin(), mul_.end(), in_range) ||
      !in_range(one_)) {
    throw RingError("table entry out of range");
  }
  if (labels_.empty()) {
    labels_.reserve(order_);
    for (std::size_t i = 0; i < order_; ++i) labels_.push_back(std::to_string(i));
  } else if (labels_.size() != order_) {
    throw RingError("label count does not match ring order");
  }

  neg_.assign(order_, 0);
  for (Elem x = 0; x < order_; ++x) {
    auto row = std::span<const Elem>(add_).subspan(x * order_, order_);
    auto it = std::find(row.begin(), row.end(), Elem{0});
    if (it == row.end()) {
      has_negatives_ = false;
    } else {
      neg_[x] = static_cast<Elem>(it - row.begin());
    }
  }
}

Elem FiniteRing::pow(Elem a, std::size_t k) const {
  Elem result = one_;
  Elem base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::string FiniteRing::describe() const {
  if (!provenance_.expr.empty()) return provenance_.expr;
  return "tables(" + std::to_string(order_) + ")";
}

const char* to_string(SetKind kind) {
  switch (kind) {
    case SetKind::idempotents: return "idempotents";
    case SetKind::units: return "units";
    case SetKind::nilpotents: return "nilpotents";
    case SetKind::center: return "center";
    case SetKind::radical: return "radical";
    case SetKind::quasi_regular: return "quasi-regular";
    case SetKind::custom: return "custom";
  }
  return "custom";
}

bool ElementSet::contains(Elem x) const { return std::binary_search(members.begin(), members.end(), x); }

AxiomCheck verify_ring_axioms(const FiniteRing& r) {
  const auto n = static_cast<Elem>(r.order());
  auto fail = [](std::string law, std::vector<Elem> witness) {
    return AxiomCheck{false, std::move(law), std::move(witness)};
  };

  for (Elem a = 0; a < n; ++a) {
    if (r.add(0, a) != a || r.add(a, 0) != a) return fail("additive identity", {a});
    if (!r.has_negatives()) {
      bool found = false;
      for (Elem b = 0; b < n && !found; ++b) found = r.add(a, b) == 0;
      if (!found) return fail("additive inverse", {a});
    }
    if (r.mul(r.one(), a) != a || r.mul(a, r.one()) != a) return fail("multiplicative identity", {a});
    for (Elem b = 0; b < n; ++b) {
      if (r.add(a, b) != r.add(b, a)) return fail("additive commutativity", {a, b});
    }
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem ab_sum = r.add(a, b);
      const Elem ab_prod = r.mul(a, b);
      for (Elem c = 0; c < n; ++c) {
        if (r.add(ab_sum, c) != r.add(a, r.add(b, c))) return fail("additive associativity", {a, b, c});
        if (r.mul(ab_prod, c) != r.mul(a, r.mul(b, c))) return fail("multiplicative associativity", {a, b, c});
        if (r.mul(a, r.add(b, c)) != r.add(ab_prod, r.mul(a, c))) return fail("left distributivity", {a, b, c});
        if (r.mul(ab_sum, c) != r.add(r.mul(a, c), r.mul(b, c))) return fail("right distributivity", {a, b, c});
      }
    }
  }
  return {};
}

bool is_commutative(const FiniteRing& r) {
  const auto n = static_cast<Elem>(r.order());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a + 1; b < n; ++b) {
      if (r.mul(a, b) != r.mul(b, a)) return false;
    }
  }
  return true;
}

}  // namespace weakring
