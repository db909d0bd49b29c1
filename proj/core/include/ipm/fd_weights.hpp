#pragma once

#include <vector>

namespace ipm {

// Fornberg weights for the m-th derivative at x=0 from nodes {-k..k} (unit
// spacing). Divide by h^m for spacing h.
std::vector<double> fd_central_weights(int m, int k);

// Smallest symmetric half-width producing >= 4th order accuracy for the m-th
// derivative on a centered stencil.
int fd_halfwidth_order4(int m);

}  // namespace ipm
