#include "expr.hpp"

#include <cctype>
#include <sstream>

#include "homs.hpp"

namespace affschur {

ParseError::ParseError(const std::string& message, SourcePos pos)
    : std::invalid_argument(message + " at line " + std::to_string(pos.line) + ", column " +
                            std::to_string(pos.column)),
      message_(message),
      pos_(pos) {}

namespace {

const std::vector<std::string> kUnary{"psi_a", "psi_a0", "transpose", "det_sharp", "det_star"};
const std::vector<std::string> kIndexed{"psi", "weyl"};

bool known(const std::vector<std::string>& names, const std::string& s) {
  return std::find(names.begin(), names.end(), s) != names.end();
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    skip_space();
    NodePtr out = expr();
    skip_space();
    if (!at_end()) fail("unexpected '" + std::string(1, peek()) + "'");
    return out;
  }

 private:
  std::string_view text_;
  std::size_t i_ = 0;
  SourcePos pos_;

  bool at_end() const { return i_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[i_]; }

  void advance() {
    if (text_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(at_end() ? message + " (end of input)" : message, pos_);
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    advance();
    return true;
  }

  std::string digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      out += peek();
      advance();
    }
    return out;
  }

  std::int64_t integer() {
    skip_space();
    SourcePos start = pos_;
    bool negative = accept('-');
    skip_space();
    std::string d = digits();
    if (d.empty()) fail("expected an integer");
    try {
      std::int64_t v = std::stoll(d);
      return negative ? -v : v;
    } catch (const std::out_of_range&) {
      throw ParseError("integer out of range", start);
    }
  }

  Tuple tuple() {
    expect('(');
    Tuple out{integer()};
    while (accept(',')) out.push_back(integer());
    expect(')');
    return out;
  }

  NodePtr expr() {
    skip_space();
    auto node = std::make_shared<ParseNode>();
    node->kind = ParseNode::Kind::Sum;
    node->pos = pos_;
    char sign = accept('-') ? '-' : '+';
    node->signs.push_back(sign);
    node->children.push_back(term());
    while (true) {
      skip_space();
      if (peek() != '+' && peek() != '-') break;
      node->signs.push_back(peek());
      advance();
      node->children.push_back(term());
    }
    if (node->children.size() == 1 && sign == '+') return node->children.front();
    return node;
  }

  NodePtr term() {
    skip_space();
    auto node = std::make_shared<ParseNode>();
    node->kind = ParseNode::Kind::Product;
    node->pos = pos_;
    node->children.push_back(factor());
    while (accept('*')) node->children.push_back(factor());
    if (node->children.size() == 1) return node->children.front();
    return node;
  }

  NodePtr factor() {
    skip_space();
    auto node = std::make_shared<ParseNode>();
    node->pos = pos_;
    char c = peek();
    if (c == '(') {
      advance();
      node->kind = ParseNode::Kind::Group;
      node->children.push_back(expr());
      expect(')');
      return node;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits(), den = "1";
      if (peek() == '/') {
        advance();
        den = digits();
        if (den.empty()) fail("expected a denominator");
      }
      if (den.find_first_not_of('0') == std::string::npos) throw ParseError("zero denominator", node->pos);
      node->kind = ParseNode::Kind::Scalar;
      node->scalar = Laurent(parse_rational(num + "/" + den));
      return node;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail(at_end() ? "expected a factor" : "unexpected '" + std::string(1, c) + "'");
    std::string name;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
      name += peek();
      advance();
    }
    if (name == "a") {
      std::int64_t k = 1;
      if (peek() == '^') {
        advance();
        k = integer();
      }
      node->kind = ParseNode::Kind::Scalar;
      node->scalar = Laurent::monomial(1, k);
      return node;
    }
    if (name == "xi" && peek() == '[') {
      advance();
      node->kind = ParseNode::Kind::Atom;
      node->top = tuple();
      expect('|');
      node->bottom = tuple();
      expect(']');
      if (node->top.size() != node->bottom.size())
        throw ParseError("tuples of different lengths", node->pos);
      return node;
    }
    node->kind = ParseNode::Kind::Apply;
    node->name = name;
    if (known(kIndexed, name)) {
      expect('[');
      node->params.push_back(integer());
      while (accept(',')) node->params.push_back(integer());
      expect(']');
    } else if (!known(kUnary, name)) {
      throw ParseError("unknown name '" + name + "'", node->pos);
    }
    expect('(');
    node->children.push_back(expr());
    expect(')');
    return node;
  }
};

std::string tuple_text(const Tuple& t) {
  std::string out = "(";
  for (std::size_t k = 0; k < t.size(); ++k) out += (k ? "," : "") + std::to_string(t[k]);
  return out + ")";
}

std::string scalar_text(const Laurent& c) {
  std::int64_t k = c.min_exponent();
  if (k == 0) return rational_to_string(c.coeff(0));
  return k == 1 ? "a" : "a^" + std::to_string(k);
}

void print_into(const NodePtr& node, std::string& out) {
  switch (node->kind) {
    case ParseNode::Kind::Scalar:
      out += scalar_text(node->scalar);
      break;
    case ParseNode::Kind::Atom:
      out += "xi[" + tuple_text(node->top) + "|" + tuple_text(node->bottom) + "]";
      break;
    case ParseNode::Kind::Sum:
      for (std::size_t k = 0; k < node->children.size(); ++k) {
        if (k == 0) {
          if (node->signs[k] == '-') out += "-";
        } else {
          out += node->signs[k] == '-' ? " - " : " + ";
        }
        print_into(node->children[k], out);
      }
      break;
    case ParseNode::Kind::Product:
      for (std::size_t k = 0; k < node->children.size(); ++k) {
        if (k) out += " * ";
        print_into(node->children[k], out);
      }
      break;
    case ParseNode::Kind::Group:
      out += "(";
      print_into(node->children.front(), out);
      out += ")";
      break;
    case ParseNode::Kind::Apply:
      out += node->name;
      if (!node->params.empty()) {
        out += "[";
        for (std::size_t k = 0; k < node->params.size(); ++k) out += (k ? "," : "") + std::to_string(node->params[k]);
        out += "]";
      }
      out += "(";
      print_into(node->children.front(), out);
      out += ")";
      break;
  }
}

/// Either a scalar or an element of S(n,r)~.
struct Value {
  std::optional<Element> element;
  Laurent scalar;
};

class Evaluator {
 public:
  Evaluator(std::int64_t n, std::optional<int> r, const Multiplier& mul) : n_(n), r_(r), mul_(mul) {}

  Element run(const NodePtr& node) {
    Value v = eval(node);
    if (v.element) return *v.element;
    if (!r_) throw ContextError("expression has no basis atoms; the degree r is unknown");
    return v.scalar * identity(n_, *r_);
  }

 private:
  std::int64_t n_;
  std::optional<int> r_;
  const Multiplier& mul_;

  static Element lift(const Value& v, std::int64_t n, int r) {
    return v.element ? *v.element : v.scalar * identity(n, r);
  }

  static Value add(const Value& x, const Value& y, std::int64_t n, const SourcePos& pos) {
    if (!x.element && !y.element) return {std::nullopt, x.scalar + y.scalar};
    int r = x.element ? x.element->r() : y.element->r();
    Element ex = lift(x, n, r), ey = lift(y, n, r);
    if (ex.r() != ey.r()) throw_context(pos);
    return {ex + ey, {}};
  }

  [[noreturn]] static void throw_context(const SourcePos& pos) {
    throw ContextError("terms of different degree r at line " + std::to_string(pos.line) + ", column " +
                       std::to_string(pos.column));
  }

  Value eval(const NodePtr& node) {
    switch (node->kind) {
      case ParseNode::Kind::Scalar:
        return {std::nullopt, node->scalar};
      case ParseNode::Kind::Atom:
        return {Element::basis(n_, canonicalize(node->top, node->bottom, n_)), {}};
      case ParseNode::Kind::Group:
        return eval(node->children.front());
      case ParseNode::Kind::Sum: {
        Value acc{std::nullopt, Laurent()};
        for (std::size_t k = 0; k < node->children.size(); ++k) {
          Value v = eval(node->children[k]);
          if (node->signs[k] == '-') {
            if (v.element) *v.element = -*v.element;
            v.scalar = -v.scalar;
          }
          acc = add(acc, v, n_, node->children[k]->pos);
        }
        return acc;
      }
      case ParseNode::Kind::Product: {
        Value acc{std::nullopt, Laurent(1L)};
        for (const auto& child : node->children) {
          Value v = eval(child);
          if (!v.element) {
            if (acc.element) *acc.element = v.scalar * *acc.element;
            else acc.scalar = acc.scalar * v.scalar;
          } else if (!acc.element) {
            acc.element = acc.scalar * *v.element;
          } else {
            if (acc.element->r() != v.element->r()) throw_context(child->pos);
            acc.element = mul_(*acc.element, *v.element);
          }
        }
        return acc;
      }
      case ParseNode::Kind::Apply:
        return {apply(node), {}};
    }
    return {};
  }

  Element apply(const NodePtr& node) {
    Value v = eval(node->children.front());
    if (!v.element)
      throw ContextError("argument of " + node->name + " has no basis atoms at line " + std::to_string(node->pos.line) +
                         ", column " + std::to_string(node->pos.column));
    const Element& x = *v.element;
    const std::string& f = node->name;
    if (f == "psi_a") return psi_a(x);
    if (f == "psi_a0") return psi_a0(x);
    if (f == "transpose") return transpose(x);
    if (f == "det_sharp") return det_tilde_sharp(x);
    if (f == "det_star") return det_star(x);
    if (f == "psi") {
      if (node->params.size() != 1) throw ParseError("psi takes one parameter", node->pos);
      return psi_as(node->params.front(), x);
    }
    if (static_cast<std::int64_t>(node->params.size()) != n_)
      throw ParseError("weyl needs a window of length n", node->pos);
    return weyl_act(WeylSymmetry(node->params), x);
  }
};

}  // namespace

NodePtr parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string print_expression(const NodePtr& node) {
  std::string out;
  print_into(node, out);
  return out;
}

bool same_tree(const NodePtr& x, const NodePtr& y) {
  if (x->kind != y->kind || !(x->scalar == y->scalar) || x->top != y->top || x->bottom != y->bottom ||
      x->signs != y->signs || x->name != y->name || x->params != y->params || x->children.size() != y->children.size())
    return false;
  for (std::size_t k = 0; k < x->children.size(); ++k)
    if (!same_tree(x->children[k], y->children[k])) return false;
  return true;
}

Element evaluate(const NodePtr& node, std::int64_t n, std::optional<int> r, const Multiplier& mul) {
  if (n < 1) throw ContextError("n must be positive");
  return Evaluator(n, r, mul).run(node);
}

}  // namespace affschur
