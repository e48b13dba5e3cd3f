#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "weakring/constructions.hpp"
#include "weakring/ideal.hpp"

namespace weakring {

// Grammar (whitespace insignificant, "x" left-associative):
//
//   ring  := "Z" INT | ring "x" ring | "S" INT "(" ring ")"
//          | "ext(" ring "," vspec ")" | "quot(" ring "," ideal ")"
//   ideal := "0" | "J" | "nil" | "<" INT ("," INT)* ">"
//   vspec := ("zero" | "ann" | "ring") INT

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct IdealExpr {
  enum class Kind { zero, radical, nil, generators };
  Kind kind = Kind::zero;
  std::vector<std::size_t> generators;

  bool operator==(const IdealExpr&) const = default;
};

struct VSpec {
  VKind kind = VKind::zero;
  std::size_t order = 1;

  bool operator==(const VSpec&) const = default;
};

struct RingNode {
  enum class Kind { zmod, product, triangular, extension, quotient };
  Kind kind = Kind::zmod;
  /// zmod: modulus. triangular: matrix size.
  std::size_t n = 0;
  /// product: two or more factors. triangular/extension/quotient: the base ring.
  std::vector<RingNode> children;
  VSpec vspec;
  IdealExpr ideal;

  bool operator==(const RingNode&) const = default;
};

struct RingExpr {
  RingNode root;
  std::string source;
};

RingExpr parse_ring_expr(std::string_view text);
IdealExpr parse_ideal_expr(std::string_view text);

std::string to_string(const RingNode& node);
std::string to_string(const IdealExpr& ideal);
inline std::string to_string(const RingExpr& expr) { return to_string(expr.root); }

RingPtr evaluate(const RingNode& node, const Limits& limits = {});
inline RingPtr evaluate(const RingExpr& expr, const Limits& limits = {}) { return evaluate(expr.root, limits); }

/// Resolves an ideal literal in `ring`. Generator indices out of range raise RingError.
Ideal evaluate_ideal(const RingPtr& ring, const IdealExpr& ideal);

}  // namespace weakring
