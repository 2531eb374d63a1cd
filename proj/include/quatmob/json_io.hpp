#pragma once

#include <json.hpp>

#include "quatmob/crossratio.hpp"

namespace quatmob::json {

using Json = nlohmann::ordered_json;

/// [w, x, y, z]
Json encode(const Quaternion& q);
/// [w, x, y, z], or the string "inf"
Json encode(const ExtQuaternion& q);
/// [[a], [b], [c], [d]] row-major
Json encode(const Mat2H& m);
/// {"type": "translation" | "rotation" | "dilation" | "inversion", ...}
Json encode(const Generator& g);
/// {"alpha": number, "beta": [4 numbers], "gamma": number}
Json encode(const QuadricF3& q);
/// {"alpha": [..], "beta": [..], "q0": [..]}
Json encode(const MobiusCanonical& g);

// Decoders throw Error(ParseError) on malformed or non-finite input.
Quaternion decode_quaternion(const Json& j);
ExtQuaternion decode_ext_quaternion(const Json& j);
Mat2H decode_mat2h(const Json& j);
Generator decode_generator(const Json& j);
QuadricF3 decode_quadric(const Json& j);

/// Parses text first as JSON; throws ParseError on syntax errors.
Json parse(const std::string& text);

/// Rounds to the given number of significant digits. Integral results become
/// JSON integers and -0 becomes 0, so the printed text is stable.
Json round_number(double value, int digits = 7);
/// Applies round_number to every floating-point value in the document.
Json round_all(const Json& doc, int digits = 7);

/// Same rounding, as text, for CSV output.
std::string format_number(double value, int digits = 7);

}  // namespace quatmob::json
