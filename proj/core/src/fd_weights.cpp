#include "ipm/fd_weights.hpp"

#include <cstddef>
#include <stdexcept>

namespace ipm {

// Fornberg's recursion (SIAM Rev. 40(3)) for weights of derivatives 0..m at
// x0=0 on arbitrary nodes; we use symmetric integer nodes.
std::vector<double> fd_central_weights(int m, int k) {
    if (m < 0 || k < 1) throw std::invalid_argument("fd_central_weights: bad order");
    const int n = 2 * k;  // highest node index
    std::vector<double> x;
    x.reserve((std::size_t)n + 1);
    for (int i = -k; i <= k; ++i) x.push_back((double)i);
    if (m > n) throw std::invalid_argument("fd_central_weights: stencil too small");

    // c[j][nu] holds weights for derivative j at node nu.
    std::vector<std::vector<double>> c((std::size_t)m + 1,
                                       std::vector<double>((std::size_t)n + 1, 0.0));
    double c1 = 1.0;
    c[0][0] = 1.0;
    for (int nn = 1; nn <= n; ++nn) {
        double c2 = 1.0;
        const int mn = std::min(nn, m);
        for (int nu = 0; nu < nn; ++nu) {
            const double c3 = x[(std::size_t)nn] - x[(std::size_t)nu];
            c2 *= c3;
            if (nu == nn - 1) {
                for (int j = mn; j >= 1; --j)
                    c[(std::size_t)j][(std::size_t)nn] =
                        c1 * (j * c[(std::size_t)j - 1][(std::size_t)nn - 1] -
                              x[(std::size_t)nn - 1] * c[(std::size_t)j][(std::size_t)nn - 1]) / c2;
                c[0][(std::size_t)nn] = -c1 * x[(std::size_t)nn - 1] * c[0][(std::size_t)nn - 1] / c2;
            }
            for (int j = mn; j >= 1; --j)
                c[(std::size_t)j][(std::size_t)nu] =
                    (x[(std::size_t)nn] * c[(std::size_t)j][(std::size_t)nu] -
                     j * c[(std::size_t)j - 1][(std::size_t)nu]) / c3;
            c[0][(std::size_t)nu] = x[(std::size_t)nn] * c[0][(std::size_t)nu] / c3;
        }
        c1 = c2;
    }
    return c[(std::size_t)m];
}

int fd_halfwidth_order4(int m) {
    // Symmetric stencils gain one order for even-error cancellation:
    // accuracy = 2k + 1 - m, +1 when (2k+1-m) is odd.
    for (int k = 1; k <= 16; ++k) {
        int acc = 2 * k + 1 - m;
        if (acc <= 0) continue;
        if (acc % 2 == 1) acc += 1;
        if (acc >= 4) return k;
    }
    throw std::invalid_argument("fd_halfwidth_order4: order too large");
}

}  // namespace ipm
