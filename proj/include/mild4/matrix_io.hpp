#pragma once

#include <string>

#include "mild4/lie_oracle.hpp"

namespace mild4 {

// Text format: first data line "p <modulus>", then exactly four lines of six
// integers (relator coefficients in the column order 12 13 14 23 24 34).
// '#' comments and blank lines are ignored; entries are reduced mod p.
QuadraticPresentation load_matrix_file(const std::string& path);

}  // namespace mild4
