#pragma once

#include "picard/extensions.hpp"

#include "json.hpp"

#include <stdexcept>

namespace picard::io {

using Json = nlohmann::json;

/// Malformed JSON or a document of the wrong shape.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const Integer& x);
Json to_json(const IntMatrix& m);
Json to_json(const Invariants& inv);
Json to_json(const FgAbGroup& g);
Json to_json(const GroupHom& f);
Json to_json(const BoundedComplex& k);
/// With endpoints unless `bare`, in which case only f_minus1 and f0.
Json to_json(const ChainMap& f, bool bare = false);
Json to_json(const DerivedHomGroup& g);
Json to_json(const Extension& e);
Json to_json(const ExtClass& x);

/// Accepts decimal strings or JSON integers.
Integer integer_from_json(const Json& j);
IntMatrix matrix_from_json(const Json& j);
/// {"rank", "relations"} or the shorthand {"orders": [...]} with 0 meaning Z.
FgAbGroup group_from_json(const Json& j);
GroupHom hom_from_json(const Json& j);
TwoTermComplex complex_from_json(const Json& j);
ChainMap chain_map_from_json(const Json& j);
ChainMap chain_map_from_json(const Json& j, const TwoTermComplex& source, const TwoTermComplex& target);
/// Validates; throws NotAnExtension for data that is not an extension.
Extension extension_from_json(const Json& j);
/// Recomputes the ambient and throws AmbientMismatch if the stored presentation differs.
ExtClass ext_class_from_json(const Json& j);

Json parse(const std::string& text);

}  // namespace picard::io
