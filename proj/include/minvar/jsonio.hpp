#ifndef MINVAR_JSONIO_HPP
#define MINVAR_JSONIO_HPP

#include <json.hpp>

#include "minvar/exactlat.hpp"
#include "minvar/laurent.hpp"
#include "minvar/matgroup.hpp"

namespace minvar {

using Json = nlohmann::json;

/// Integers are written as JSON numbers when they fit in 64 bits and as
/// decimal strings otherwise.
Json to_json(const Integer& x);
Json to_json(const IntVector& v);
Json to_json(const IntMatrix& m);  // list of rows
Json to_json(const LaurentPoly& f);  // [{exponents, coeff}, ...]

Integer integer_from_json(const Json& j);
IntVector vector_from_json(const Json& j);
IntMatrix matrix_from_json(const Json& j);

Json generators_json(const MatGroup& g);
std::vector<IntMatrix> matrices_from_json(const Json& j);

}  // namespace minvar

#endif
