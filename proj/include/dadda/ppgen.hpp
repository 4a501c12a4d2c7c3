#pragma once

#include <vector>

#include "dadda/netlist.hpp"

namespace dadda {

// Weight-indexed net columns. Column w collects everything worth 2^(base+w)
// for whatever base weight the caller tracks.
using Columns = std::vector<std::vector<NetId>>;

// Unsigned AND-array partial products for an n x n multiply: 2n-1 columns,
// column w holding the a_i AND b_j terms with i + j == w. Generation order is
// b-digit major so column contents are age-ordered for the reduction.
Columns partial_product_columns(Netlist& nl, const std::vector<NetId>& a,
                                const std::vector<NetId>& b);

}  // namespace dadda
