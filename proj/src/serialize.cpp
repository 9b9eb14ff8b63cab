#include "serialize.hpp"

namespace affschur {

namespace {

[[noreturn]] void bad(const std::string& what) { throw FormatError(what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::int64_t as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

Rational as_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
      bad(std::string("bad rational: ") + e.what());
    }
  }
  bad("rational must be a string or an integer");
}

std::int64_t context_n(const json& j) {
  std::int64_t n = as_int(field(j, "n"), "n");
  if (n < 1) bad("n must be positive");
  return n;
}

int context_r(const json& j) {
  std::int64_t r = as_int(field(j, "r"), "r");
  if (r < 0 || r > 64) bad("r out of range");
  return static_cast<int>(r);
}

Tuple as_tuple(const json& j) {
  if (!j.is_array()) bad("tuple must be an array");
  Tuple out;
  for (const auto& v : j) out.push_back(as_int(v, "tuple entry"));
  return out;
}

}  // namespace

json laurent_to_json(const Laurent& c) {
  json out = json::array();
  for (const auto& [k, q] : c.terms()) out.push_back({k, rational_to_string(q)});
  return out;
}

Laurent laurent_from_json(const json& j) {
  if (j.is_string()) {
    try {
      return Laurent::parse(j.get<std::string>());
    } catch (const std::exception& e) {
      bad(std::string("bad Laurent polynomial: ") + e.what());
    }
  }
  if (j.is_number_integer()) return Laurent(j.get<long>());
  if (!j.is_array()) bad("coefficient must be a list of [exponent, rational]");
  Laurent out;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) bad("coefficient term must be [exponent, rational]");
    out += Laurent::monomial(as_rational(t[1]), as_int(t[0], "exponent"));
  }
  return out;
}

json index_to_json(const BasisIndex& x) {
  json out = json::array();
  for (const auto& [i, j] : x.pairs) out.push_back({i, j});
  return out;
}

BasisIndex index_from_json(const json& j, std::int64_t n) {
  if (!j.is_array()) bad("pairs must be an array");
  std::vector<Pair> pairs;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) bad("pair must be [top, bottom]");
    pairs.emplace_back(as_int(p[0], "top"), as_int(p[1], "bottom"));
  }
  return canonicalize(pairs, n);
}

json element_to_json(const Element& x) {
  json terms = json::array();
  for (const auto& [idx, c] : x.terms()) terms.push_back({{"coeff", laurent_to_json(c)}, {"pairs", index_to_json(idx)}});
  return {{"n", x.n()}, {"r", x.r()}, {"terms", terms}};
}

Element element_from_json(const json& j) {
  std::int64_t n = context_n(j);
  Element out(n, context_r(j));
  const json& terms = field(j, "terms");
  if (!terms.is_array()) bad("terms must be an array");
  for (const auto& t : terms) {
    BasisIndex x = index_from_json(field(t, "pairs"), n);
    if (x.r() != out.r()) bad("term of degree " + std::to_string(x.r()) + " in an element of degree " + std::to_string(out.r()));
    out.add(x, laurent_from_json(field(t, "coeff")));
  }
  return out;
}

json tensor_to_json(const TensorVector& v) {
  json terms = json::array();
  for (const auto& [t, c] : v.terms) terms.push_back({{"coeff", laurent_to_json(c)}, {"tuple", t}});
  return {{"n", v.n}, {"r", v.r}, {"terms", terms}};
}

TensorVector tensor_from_json(const json& j) {
  TensorVector out;
  out.n = context_n(j);
  out.r = context_r(j);
  const json& terms = field(j, "terms");
  if (!terms.is_array()) bad("terms must be an array");
  for (const auto& t : terms) {
    Tuple tuple = as_tuple(field(t, "tuple"));
    if (static_cast<int>(tuple.size()) != out.r) bad("tuple of the wrong length");
    out.add(tuple, laurent_from_json(field(t, "coeff")));
  }
  return out;
}

json matrix_to_json(const PeriodicMatrix& g) {
  json entries = json::array();
  for (const auto& [key, c] : g.entries()) {
    json value = c.is_constant() ? json(rational_to_string(c.coeff(0))) : laurent_to_json(c);
    entries.push_back({key.first, key.second, value});
  }
  return {{"n", g.n()}, {"entries", entries}};
}

PeriodicMatrix matrix_from_json(const json& j) {
  PeriodicMatrix out(context_n(j));
  const json& entries = field(j, "entries");
  if (!entries.is_array()) bad("entries must be an array");
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 3) bad("entry must be [row, column, value]");
    Laurent c = e[2].is_array() ? laurent_from_json(e[2]) : Laurent(as_rational(e[2]));
    out.add(as_int(e[0], "row"), as_int(e[1], "column"), c);
  }
  return out;
}

json polynomial_to_json(const CoordPolynomial& p) {
  json terms = json::array();
  for (const auto& [idx, c] : p.terms) terms.push_back({{"coeff", rational_to_string(c)}, {"pairs", index_to_json(idx)}});
  return {{"n", p.n}, {"r", p.r}, {"terms", terms}};
}

CoordPolynomial polynomial_from_json(const json& j) {
  CoordPolynomial out;
  out.n = context_n(j);
  out.r = context_r(j);
  const json& terms = field(j, "terms");
  if (!terms.is_array()) bad("terms must be an array");
  for (const auto& t : terms) {
    BasisIndex x = index_from_json(field(t, "pairs"), out.n);
    if (x.r() != out.r) bad("monomial of the wrong degree");
    Rational& slot = out.terms[x];
    slot += as_rational(field(t, "coeff"));
    if (slot == 0) out.terms.erase(x);
  }
  return out;
}

json expr_to_json(const ExprPtr& e) {
  switch (e->op) {
    case Expr::Op::Gen:
      return {{"op", "gen"}, {"index", index_to_string(e->gen)}, {"pairs", index_to_json(e->gen)}};
    case Expr::Op::One:
      return {{"op", "one"}};
    case Expr::Op::Scale:
      return {{"op", "scale"}, {"scalar", rational_to_string(e->scalar)}, {"arg", expr_to_json(e->args.front())}};
    case Expr::Op::Mul:
    case Expr::Op::Add: {
      json args = json::array();
      for (const auto& a : e->args) args.push_back(expr_to_json(a));
      return {{"op", e->op == Expr::Op::Mul ? "mul" : "add"}, {"args", args}};
    }
  }
  return {};
}

ExprPtr expr_from_json(const json& j, std::int64_t n) {
  const json& op = field(j, "op");
  if (!op.is_string()) bad("op must be a string");
  std::string name = op.get<std::string>();
  if (name == "gen") return expr_gen(index_from_json(field(j, "pairs"), n));
  if (name == "one") return expr_one();
  if (name == "scale") return expr_scale(as_rational(field(j, "scalar")), expr_from_json(field(j, "arg"), n));
  if (name != "mul" && name != "add") bad("unknown op '" + name + "'");
  const json& args = field(j, "args");
  if (!args.is_array() || args.empty()) bad("args must be a nonempty array");
  std::vector<ExprPtr> parts;
  for (const auto& a : args) parts.push_back(expr_from_json(a, n));
  if (name == "add") return expr_add(std::move(parts));
  ExprPtr out = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) out = expr_mul(out, parts[k]);
  return out;
}

json structure_to_json(const Structure& s) {
  json out = json::array();
  for (const auto& [idx, k] : s) out.push_back({index_to_json(idx), k});
  return out;
}

Structure structure_from_json(const json& j, std::int64_t n) {
  if (!j.is_array()) bad("structure constants must be an array");
  Structure out;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) bad("structure constant must be [pairs, integer]");
    out[index_from_json(t[0], n)] += as_int(t[1], "structure constant");
  }
  return out;
}

json witness_to_json(const Witness& w) {
  return {{"matrix", matrix_to_json(w.g)},
          {"value", rational_to_string(w.value)},
          {"determinant", laurent_to_json(w.determinant)},
          {"determinant_text", w.determinant.to_string()},
          {"a0", rational_to_string(w.a0)},
          {"degrees", w.degrees}};
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace affschur
