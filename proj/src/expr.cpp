#include "weakring/expr.hpp"

#include <cctype>

#include "weakring/clean.hpp"
#include "weakring/structure.hpp"

namespace weakring {

namespace {

constexpr std::size_t kMaxInt = 1'000'000'000;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RingNode ring() {
    RingNode first = term();
    if (!peek('x')) return first;
    RingNode product;
    product.kind = RingNode::Kind::product;
    product.children.push_back(std::move(first));
    while (peek('x')) {
      ++pos_;
      product.children.push_back(term());
    }
    return product;
  }

  IdealExpr ideal() {
    skip();
    IdealExpr out;
    if (keyword("nil")) {
      out.kind = IdealExpr::Kind::nil;
    } else if (keyword("J")) {
      out.kind = IdealExpr::Kind::radical;
    } else if (keyword("0")) {
      out.kind = IdealExpr::Kind::zero;
    } else if (peek('<')) {
      ++pos_;
      out.kind = IdealExpr::Kind::generators;
      out.generators.push_back(integer(0));
      while (peek(',')) {
        ++pos_;
        out.generators.push_back(integer(0));
      }
      expect('>');
    } else {
      fail("expected ideal ('0', 'J', 'nil' or '<...>')");
    }
    return out;
  }

  void finish() {
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
  }

 private:
  RingNode term() {
    skip();
    RingNode node;
    if (keyword("Z")) {
      node.kind = RingNode::Kind::zmod;
      node.n = integer(1);
    } else if (keyword("S")) {
      node.kind = RingNode::Kind::triangular;
      node.n = integer(2);
      expect('(');
      node.children.push_back(ring());
      expect(')');
    } else if (keyword("ext")) {
      node.kind = RingNode::Kind::extension;
      expect('(');
      node.children.push_back(ring());
      expect(',');
      node.vspec = vspec();
      expect(')');
    } else if (keyword("quot")) {
      node.kind = RingNode::Kind::quotient;
      expect('(');
      node.children.push_back(ring());
      expect(',');
      node.ideal = ideal();
      expect(')');
    } else {
      fail(pos_ == text_.size() ? "unexpected end of input, expected ring" : "expected ring ('Z', 'S', 'ext', 'quot')");
    }
    return node;
  }

  VSpec vspec() {
    skip();
    VSpec out;
    if (keyword("zero")) {
      out.kind = VKind::zero;
    } else if (keyword("ann")) {
      out.kind = VKind::ann;
    } else if (keyword("ring")) {
      out.kind = VKind::ring;
    } else {
      fail("unknown vspec, expected 'zero', 'ann' or 'ring'");
    }
    out.order = integer(1);
    return out;
  }

  std::size_t integer(std::size_t min) {
    skip();
    const std::size_t start = pos_;
    std::size_t value = 0;
    bool overflow = false;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > kMaxInt) overflow = true;
      ++pos_;
    }
    if (start == pos_) fail("expected integer");
    if (overflow || value < min) {
      throw ParseError("integer out of range (minimum " + std::to_string(min) + ")", start);
    }
    return value;
  }

  bool keyword(std::string_view word) {
    skip();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) { throw ParseError(message, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RingExpr parse_ring_expr(std::string_view text) {
  Parser parser(text);
  RingExpr expr{parser.ring(), std::string(text)};
  parser.finish();
  return expr;
}

IdealExpr parse_ideal_expr(std::string_view text) {
  Parser parser(text);
  IdealExpr out = parser.ideal();
  parser.finish();
  return out;
}

std::string to_string(const IdealExpr& ideal) {
  switch (ideal.kind) {
    case IdealExpr::Kind::zero: return "0";
    case IdealExpr::Kind::radical: return "J";
    case IdealExpr::Kind::nil: return "nil";
    case IdealExpr::Kind::generators: {
      std::string out = "<";
      for (std::size_t i = 0; i < ideal.generators.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(ideal.generators[i]);
      }
      return out + ">";
    }
  }
  return "0";
}

std::string to_string(const RingNode& node) {
  switch (node.kind) {
    case RingNode::Kind::zmod: return "Z" + std::to_string(node.n);
    case RingNode::Kind::product: {
      std::string out;
      for (const auto& child : node.children) {
        if (!out.empty()) out += " x ";
        out += to_string(child);
      }
      return out;
    }
    case RingNode::Kind::triangular:
      return "S" + std::to_string(node.n) + "(" + to_string(node.children.front()) + ")";
    case RingNode::Kind::extension:
      return "ext(" + to_string(node.children.front()) + ", " + to_string(node.vspec.kind) + " " +
             std::to_string(node.vspec.order) + ")";
    case RingNode::Kind::quotient:
      return "quot(" + to_string(node.children.front()) + ", " + to_string(node.ideal) + ")";
  }
  return {};
}

RingPtr evaluate(const RingNode& node, const Limits& limits) {
  switch (node.kind) {
    case RingNode::Kind::zmod: return make_zmod(node.n, limits);
    case RingNode::Kind::product: {
      std::vector<RingPtr> factors;
      for (const auto& child : node.children) factors.push_back(evaluate(child, limits));
      return direct_product(factors, limits);
    }
    case RingNode::Kind::triangular: return const_diag_triangular(evaluate(node.children.front(), limits), node.n, limits);
    case RingNode::Kind::extension: {
      auto base = evaluate(node.children.front(), limits);
      return ideal_extension(base, make_bimodule(base, node.vspec.kind, node.vspec.order, limits), limits);
    }
    case RingNode::Kind::quotient: {
      auto base = evaluate(node.children.front(), limits);
      return quotient(base, evaluate_ideal(base, node.ideal), to_string(node.ideal)).ring;
    }
  }
  throw RingError("unknown ring node");
}

Ideal evaluate_ideal(const RingPtr& ring, const IdealExpr& ideal) {
  switch (ideal.kind) {
    case IdealExpr::Kind::zero: return zero_ideal(ring);
    case IdealExpr::Kind::radical: return jacobson_radical(ring);
    case IdealExpr::Kind::nil: return nil_ideal(ring);
    case IdealExpr::Kind::generators: {
      std::vector<Elem> gens;
      for (std::size_t g : ideal.generators) {
        if (g >= ring->order()) {
          throw RingError("generator " + std::to_string(g) + " out of range for " + ring->describe() + " (order " +
                          std::to_string(ring->order()) + ")");
        }
        gens.push_back(static_cast<Elem>(g));
      }
      return ideal_generated_by(ring, gens);
    }
  }
  throw RingError("unknown ideal literal");
}

}  // namespace weakring
