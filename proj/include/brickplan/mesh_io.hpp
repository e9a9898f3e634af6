#pragma once

#include <string_view>

#include "brickplan/geometry.hpp"

namespace brickplan {

// Parses the v/f subset of Wavefront OBJ. Faces with more than three
// vertices are fan-triangulated. Indices are 1-based; negative (relative)
// indices are rejected. Unknown record types are ignored.
//
// Throws ParseError (with line number) on malformed records and
// ValidationError when the file contains no usable geometry.
TriangleMesh parse_obj(std::string_view text);

}  // namespace brickplan
