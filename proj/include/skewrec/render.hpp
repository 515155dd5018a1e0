#pragma once

#include <string>

#include "skewrec/solver.hpp"

namespace skewrec {

/// Scalars as "u", "u+v*rt"; quaternions and octonions as bracketed tuples.
std::string render_element(const Element& x);

/// One header line naming the algebra, for octonions a frame line, then
/// "a_k = ..." with terms "(poly in k) * base^k * coeff".
std::string render_closed_form(const ClosedForm& cf);

std::string render_report(const VerifyReport& report);

}  // namespace skewrec
