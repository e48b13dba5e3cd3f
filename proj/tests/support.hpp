#pragma once

#include <set>
#include <string>
#include <vector>

#include "weakring/expr.hpp"
#include "weakring/ideal.hpp"

namespace support {

inline std::set<std::size_t> as_set(const std::vector<weakring::Elem>& xs) { return {xs.begin(), xs.end()}; }

inline weakring::RingPtr ring(const std::string& expr) { return weakring::evaluate(weakring::parse_ring_expr(expr)); }

inline weakring::Ideal ideal(const weakring::RingPtr& r, std::vector<weakring::Elem> gens) {
  return weakring::ideal_generated_by(r, gens);
}

inline std::vector<std::string> labels_of(const weakring::RingPtr& r, const std::vector<weakring::Elem>& xs) {
  std::vector<std::string> out;
  for (auto x : xs) out.push_back(r->label(x));
  return out;
}

}  // namespace support
