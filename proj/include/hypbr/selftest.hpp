#pragma once

#include <ostream>

namespace hypbr {

/// Run the acceptance suite, one PASS/FAIL line per criterion on `out`.
/// Returns the number of failed criteria.
int run_acceptance(std::ostream& out);

}  // namespace hypbr
