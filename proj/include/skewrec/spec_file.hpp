#pragma once

#include <string>
#include <string_view>

#include "skewrec/solver.hpp"

namespace skewrec {

/// Line-oriented recurrence file:
///
///   algebra field | field_sqrt D | quaternion A B | octonion A B G
///   order N
///   rhs E0 ... E{N-1}
///   init E0 ... E{N-1}
///   roots E [(M)] ...      optional, M is a multiplicity
///   height H               optional, default 20
///
/// '#' starts a comment. Element literals may contain spaces inside brackets.
/// Throws ParseError (with line and column) or ValidationError.
RecurrenceSpec parse_spec_file(std::string_view text);

/// Canonical text; parse_spec_file(render_spec_file(s)) == s.
std::string render_spec_file(const RecurrenceSpec& spec);

bool operator==(const RecurrenceSpec& x, const RecurrenceSpec& y);

}  // namespace skewrec
