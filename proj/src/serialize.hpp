#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "loop_lie.hpp"
#include "semigroup.hpp"
#include "tensor_rep.hpp"

namespace affschur {

using json = nlohmann::json;

class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// [[exponent, "p/q"], ...]; a bare string is read in text form.
json laurent_to_json(const Laurent& c);
Laurent laurent_from_json(const json& j);

/// [[top, bottom], ...]; any representative is accepted and canonicalized.
json index_to_json(const BasisIndex& x);
BasisIndex index_from_json(const json& j, std::int64_t n);

/// {"n":2,"r":2,"terms":[{"coeff":[[0,"1"]],"pairs":[[1,3],[2,0]]}]}
json element_to_json(const Element& x);
Element element_from_json(const json& j);

/// {"n":2,"r":2,"terms":[{"coeff":[[0,"1"]],"tuple":[1,2]}]}
json tensor_to_json(const TensorVector& v);
TensorVector tensor_from_json(const json& j);

/// {"n":2,"entries":[[1,3,"1"],[2,2,"1/2"]]}; an entry value may also be a
/// Laurent polynomial in a.
json matrix_to_json(const PeriodicMatrix& g);
PeriodicMatrix matrix_from_json(const json& j);

/// {"n":2,"r":2,"terms":[{"coeff":"3","pairs":[[1,1],[2,2]]}]}
json polynomial_to_json(const CoordPolynomial& p);
CoordPolynomial polynomial_from_json(const json& j);

/// {"op":"gen","index":"xi[...]","pairs":[...]}, {"op":"one"},
/// {"op":"mul","args":[...]}, {"op":"add","args":[...]},
/// {"op":"scale","scalar":"p/q","arg":{...}}
json expr_to_json(const ExprPtr& e);
ExprPtr expr_from_json(const json& j, std::int64_t n);

json structure_to_json(const Structure& s);
Structure structure_from_json(const json& j, std::int64_t n);

json witness_to_json(const Witness& w);

/// Parses text, turning syntax errors into FormatError.
json parse_json(const std::string& text);

}  // namespace affschur
