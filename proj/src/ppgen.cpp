#include "dadda/ppgen.hpp"

#include <stdexcept>

namespace dadda {

Columns partial_product_columns(Netlist& nl, const std::vector<NetId>& a,
                                const std::vector<NetId>& b) {
  std::size_t n = a.size();
  if (n == 0 || b.size() != n)
    throw std::invalid_argument("partial products need equal non-empty operand widths");
  Columns cols(2 * n - 1);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      cols[i + j].push_back(nl.g(Gate::And2, a[i], b[j]));
  return cols;
}

}  // namespace dadda
