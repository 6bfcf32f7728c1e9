#ifndef LSK_JSON_IO_HPP
#define LSK_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "lsk/dgl.hpp"
#include "lsk/element.hpp"
#include "lsk/groupoid.hpp"

namespace lsk {

// Interchange format, bit-exact both ways:
//   element:    {"truncation": N, "terms": [{"word": ["x","b"], "coeff": "1/2"}, ...]}
//   context:    {"truncation": N, "generators": [{"name": "a", "degree": -1}, ...],
//                "differential": [<terms array per generator>]}
//   descriptor: {"family": "I", "param": "5/2", "element": <element>,
//                "decomposable_part": <element>}
// Terms are required to appear in canonical order with reduced nonzero
// coefficients, so serialize and deserialize are mutually inverse on the
// nose. Violations raise SchemaError (shape/order), NonReducedCoefficient or
// DuplicateWord; unknown generator names raise UnknownSymbol.

nlohmann::json element_to_json(const Element& e);
Element element_from_json(const nlohmann::json& j, const GenSetPtr& generators);

nlohmann::json context_to_json(const DglContext& ctx);
DglContext context_from_json(const nlohmann::json& j);

nlohmann::json descriptor_to_json(const McDescriptor& descriptor);
McDescriptor descriptor_from_json(const nlohmann::json& j, const LsInterval& interval);

}  // namespace lsk

#endif  // LSK_JSON_IO_HPP
