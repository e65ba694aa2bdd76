#pragma once

#include <string>

namespace msm {

// Fixed 12-significant-digit rendering with trailing zeros kept, e.g. 3 ->
// "3.00000000000".  Used for all printed distances so golden outputs are
// byte-stable.
std::string format_distance(double value);

// Round-trip-exact rendering (17 significant digits); used for tables whose
// entries are checked at bit level.
std::string format_exact(double value);

}  // namespace msm
