#pragma once

#include <string>
#include <vector>

#include "tmsv/matroid.hpp"

namespace tmsv {

Matroid uniform(int r, int n);
Matroid boolean_matroid(int n);
Matroid vamos();

// Built-in matroid by name: U(r,n), boolean(n), parallel(k), or one of the
// named entries listed by catalog_names(). Throws ParseError when the name is
// unknown or the parameters are out of range.
Matroid catalog_matroid(const std::string& name);

// Named entries plus the parameterized name patterns.
std::vector<std::string> catalog_names();

// Default matroid list for verify-everything runs: small enough for the full
// geometric pipeline.
std::vector<std::string> verification_names();

}  // namespace tmsv
