#include "ipm/kernel_constants.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ipm {

const ConstantEntry* ConstantTable::find(int i, int j, char kind, double a, double b) const {
    for (const auto& e : entries)
        if (e.i == i && e.j == j && e.kind == kind && std::fabs(e.a - a) < 1e-12 &&
            std::fabs(e.b - b) < 1e-12)
            return &e;
    return nullptr;
}

double compute_C0(const CutoffG& g, C0Report* report) {
    C0Report rep;
    LimitResult base = limit_constant(0, 0, 'c', 0.0, 1.0, g, 4, 10, 1e-9, 1e-8,
                                      QuadScheme::kPolarTensor);
    rep.value = base.value;
    rep.error = base.error;

    // Linearity in b: value(a,b)/b constant across directions.
    const double bs[3] = {1.0, std::sqrt(0.5), 0.5};
    for (double b : bs) {
        const double a = std::sqrt(std::max(0.0, 1.0 - b * b));
        LimitResult r = limit_constant(0, 0, 'c', a, b, g);
        rep.ratio_values.push_back(r.value / b);
    }
    for (double v : rep.ratio_values)
        rep.max_ratio_spread = std::max(rep.max_ratio_spread, std::fabs(v - rep.value));
    if (rep.max_ratio_spread > 2.0 * (rep.error + 1e-8))
        throw QuadratureError("compute_C0: c^c_{0,0}(a,b)/b is not constant across directions");

    // Independent scheme at the largest swept N.
    MonomialIntegral mi;
    mi.p = 1;
    mi.q = 0;
    mi.kind = 'c';
    mi.a = 0.0;
    mi.b = 1.0;
    const double N_big = base.Ns.back();
    rep.cartesian_value = oscillatory_monomial_cartesian(mi, N_big, g, 1e-8);
    rep.cartesian_gap = std::fabs(rep.cartesian_value - rep.value);

    if (!(rep.value > 0.0)) throw QuadratureError("compute_C0: C0 must be positive");
    if (report) *report = rep;
    return rep.value;
}

ConstantTable build_table(int K_max, const std::vector<std::pair<double, double>>& directions,
                          const CutoffG& g, int k0, int k_max, double stop_tol, double quad_tol) {
    if (K_max < 0 || K_max > 8) throw std::invalid_argument("build_table: K_max must be in 0..8");
    ConstantTable t;
    t.K_max = K_max;
    for (const auto& [a, b] : directions)
        for (int i = 0; i <= K_max; ++i)
            for (int j = 0; j <= i; ++j)
                for (char kind : {'s', 'c'}) {
                    LimitResult r = limit_constant(i, j, kind, a, b, g, k0, k_max, stop_tol, quad_tol);
                    ConstantEntry e;
                    e.i = i;
                    e.j = j;
                    e.kind = kind;
                    e.a = a;
                    e.b = b;
                    e.value = r.value;
                    e.error = r.error;
                    t.entries.push_back(e);
                }
    return t;
}

void save_constants_csv(const ConstantTable& t, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("save_constants_csv: cannot open " + path);
    os << "i,j,kind,a,b,value,error\n";
    char buf[256];
    for (const auto& e : t.entries) {
        std::snprintf(buf, sizeof(buf), "%d,%d,%c,%.17g,%.17g,%.17g,%.17g\n", e.i, e.j, e.kind,
                      e.a, e.b, e.value, e.error);
        os << buf;
    }
}

ConstantTable load_constants_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("load_constants_csv: cannot open " + path);
    std::string line;
    if (!std::getline(is, line) || line.rfind("i,j,kind", 0) != 0)
        throw std::runtime_error("load_constants_csv: missing header");
    ConstantTable t;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string tok;
        ConstantEntry e;
        std::getline(ss, tok, ',');
        e.i = std::stoi(tok);
        std::getline(ss, tok, ',');
        e.j = std::stoi(tok);
        std::getline(ss, tok, ',');
        e.kind = tok.empty() ? '?' : tok[0];
        std::getline(ss, tok, ',');
        e.a = std::stod(tok);
        std::getline(ss, tok, ',');
        e.b = std::stod(tok);
        std::getline(ss, tok, ',');
        e.value = std::stod(tok);
        std::getline(ss, tok, ',');
        e.error = std::stod(tok);
        t.K_max = std::max(t.K_max, e.i);
        t.entries.push_back(e);
    }
    return t;
}

std::vector<std::string> validate_constants_table(const ConstantTable& t) {
    std::vector<std::string> problems;
    double c0 = 0.0;
    bool have_c0 = false;
    for (const auto& e : t.entries) {
        if (ConstantTable::parity_zero(e.i, e.kind) &&
            std::fabs(e.value) > std::max(1e-6, 3.0 * e.error)) {
            std::ostringstream os;
            os << "parity violation at (i=" << e.i << ", j=" << e.j << ", kind=" << e.kind
               << ", a=" << e.a << ", b=" << e.b << "): value " << e.value;
            problems.push_back(os.str());
        }
        if (e.i == 0 && e.j == 0 && e.kind == 'c' && std::fabs(e.b - 1.0) < 1e-12) {
            c0 = e.value;
            have_c0 = true;
        }
        if (!std::isfinite(e.value) || !std::isfinite(e.error))
            problems.push_back("non-finite table entry");
    }
    if (have_c0 && !(c0 > 0.0)) problems.push_back("reference C0 is not positive");
    return problems;
}

}  // namespace ipm
