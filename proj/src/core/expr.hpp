#pragma once

#include <string>

#include "core/map_zoo.hpp"

namespace hopfroots::maps {

/// Parses the plain-text composition language into a descriptor. Grammar:
///
///   expr    := atom | "compose" "(" expr ("," expr)+ ")"
///   atom    := name | name "(" number ("," number)* ")"
///
/// compose(f, g) means f o g: the rightmost argument is applied first.
/// Generator names: hopf, hprime, power(k), power_rp(k), cover3, cover2,
/// collapse3, const(x,y,z), antipodal, reflect, qsquare, identity,
/// identity_rp, rot_s3(i,j,angle), rot_s2(i,j,angle).
///
/// Throws ParseError on malformed input and the generator constructors'
/// errors (e.g. ParityError for power_rp with an even exponent).
MapDescriptor parse_map(const std::string& text);

/// Canonical textual form; parse_map(format_map(f)) == f.
std::string format_map(const MapDescriptor& f);

}  // namespace hopfroots::maps
