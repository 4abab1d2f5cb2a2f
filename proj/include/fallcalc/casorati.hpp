#pragma once

#include <vector>

#include "fallcalc/ratfun.hpp"

namespace fallcalc {

// det [ f_j(z + i) ]_{i,j = 0..m-1}, computed exactly. Entries are lifted to a
// polynomial matrix by clearing column denominators; elimination is
// fraction-free so intermediate divisions stay exact.
RationalFunction casorati(const std::vector<RationalFunction>& fs);

// Nonvanishing Casoratian, the difference analogue of Wronskian independence.
bool linearlyIndependent(const std::vector<RationalFunction>& fs);

}  // namespace fallcalc
