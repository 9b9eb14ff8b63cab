#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "schur.hpp"

namespace affschur {

struct SourcePos {
  int line = 1;
  int column = 1;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, SourcePos pos);
  SourcePos pos() const { return pos_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  SourcePos pos_;
};

struct ParseNode;
using NodePtr = std::shared_ptr<const ParseNode>;

/// Parse tree of the calculator language.
///
///   expr   := ["-"] term (("+"|"-") term)*
///   term   := factor ("*" factor)*
///   factor := scalar | atom | "(" expr ")" | name ["[" int ("," int)* "]"] "(" expr ")"
///   atom   := "xi[" tuple "|" tuple "]"
///   tuple  := "(" int ("," int)* ")"
///   scalar := integer | integer "/" integer | "a" | "a^" int
///
/// Function names: psi_a, psi_a0, transpose, det_sharp, det_star, psi[s],
/// weyl[w(1),...,w(n)].
struct ParseNode {
  enum class Kind { Scalar, Atom, Sum, Product, Group, Apply };
  Kind kind = Kind::Scalar;
  SourcePos pos;
  Laurent scalar;
  Tuple top, bottom;
  std::vector<char> signs;  // Sum: '+' or '-' per child
  std::string name;         // Apply
  Tuple params;             // Apply
  std::vector<NodePtr> children;
};

NodePtr parse_expression(std::string_view text);
std::string print_expression(const NodePtr& node);
/// Structural equality, source positions ignored.
bool same_tree(const NodePtr& x, const NodePtr& y);

using Multiplier = std::function<Element(const Element&, const Element&)>;

/// Evaluates in S(n,r)~; r comes from the atoms, or from `r` when the
/// expression is a pure scalar. Scalars added to elements stand for
/// multiples of the identity.
Element evaluate(const NodePtr& node, std::int64_t n, std::optional<int> r = std::nullopt,
                 const Multiplier& mul = multiply);

}  // namespace affschur
