#pragma once

#include "geometry.hpp"
#include "sign_system.hpp"

#include <string>
#include <string_view>

namespace svcalc {

// Sign system files: an `elements:` header naming the coordinates, then one
// row per vector over {+, -, 0}. `#` starts a comment, blank lines are
// skipped, duplicate rows are errors. A system over no elements writes its
// only possible vector as `()`.
SignSystem parse_sign_system(std::string_view text);
std::string format_sign_system(const SignSystem& s);

// Arrangement files: `dim:` and `kind: central|affine` first, then one
// hyperplane per line as `label : c1 ... cd : offset` with rational entries.
Arrangement parse_arrangement(std::string_view text);
std::string format_arrangement(const Arrangement& arr);

} // namespace svcalc
