#pragma once

#include "ztame/automorphism.hpp"
#include "ztame/jacobian.hpp"
#include "ztame/normal_form.hpp"
#include "ztame/recognize.hpp"

#include <json.hpp>

namespace ztame {

using Json = nlohmann::ordered_json;

// Polynomials and scalars are embedded as text; readers throw
// std::invalid_argument or SyntaxError on malformed input.

Json to_json(const TameGenerator& gen);
Json to_json(const TameWord& w);
Json to_json(const ZEndomorphism& e);
Json to_json(const NormalForm& nf);
Json to_json(const Matrix2& m);
Json to_json(const Ge2Result& r);
Json to_json(const TraceStep& s);
Json to_json(const Decision& d, bool with_trace);

TameGenerator generator_from_json(const Json& j);
/// Accepts a bare array or an object with a "word" array.
TameWord word_from_json(const Json& j);
/// Accepts [[a, b], [c, d]] or an object with a "matrix" entry; entries are zb1/zb2 text.
Matrix2 matrix_from_json(const Json& j);

}  // namespace ztame
