#pragma once

#include <string>
#include <vector>

#include "ipm/oscillatory.hpp"

namespace ipm {

struct ConstantEntry {
    int i = 0;
    int j = 0;
    char kind = 's';
    double a = 0.0;
    double b = 1.0;
    double value = 0.0;
    double error = 0.0;
};

// Limits c^{s,c}_{i,j} for 0 <= j <= i <= K_max at the sampled directions.
struct ConstantTable {
    int K_max = 0;
    std::vector<ConstantEntry> entries;

    const ConstantEntry* find(int i, int j, char kind, double a, double b) const;
    // Parity-mandated entries: c^s with even i, c^c with odd i.
    static bool parity_zero(int i, char kind) {
        return (kind == 's') ? (i % 2 == 0) : (i % 2 == 1);
    }
};

struct C0Report {
    double value = 0.0;          // polar-quadrature limit at direction (0,1)
    double error = 0.0;
    double cartesian_value = 0.0;  // independent scheme at the final sweep N
    double cartesian_gap = 0.0;
    // value/b at b = 1, sqrt(1/2), 1/2 (linearity in b check)
    std::vector<double> ratio_values;
    double max_ratio_spread = 0.0;
};

// C0 = lim T^{0,0,c}(a=0,b=1); asserts positivity and linearity in b, and
// cross-checks polar Gauss-Legendre against Cartesian adaptive Simpson.
double compute_C0(const CutoffG& g, C0Report* report = nullptr);

ConstantTable build_table(int K_max, const std::vector<std::pair<double, double>>& directions,
                          const CutoffG& g, int k0 = 4, int k_max = 9, double stop_tol = 1e-9,
                          double quad_tol = 1e-8);

// CSV with header i,j,kind,a,b,value,error (stable order, fixed formatting).
void save_constants_csv(const ConstantTable& t, const std::string& path);
ConstantTable load_constants_csv(const std::string& path);

// Parity, boundedness and C0-positivity checks; returns a list of violation
// descriptions (empty when the table is consistent).
std::vector<std::string> validate_constants_table(const ConstantTable& t);

}  // namespace ipm
