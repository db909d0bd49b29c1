#pragma once

#include <stdexcept>
#include <vector>

#include "ipm/cutoff.hpp"

namespace ipm {

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Monomial oscillatory integrals over the cutoff disk |h| <= N^{1-eps}:
//   M^{p,q,kind}_N(a,b) = int (h1^p h2^q / |h|^2) trig(a h2 + b h1) g(N^{eps-1}|h|) dh
// with trig = cos for kind 's' and sin for kind 'c' (the coefficients of the
// sin resp. cos channel of the local velocity expansion). Requires p+q >= 1.
struct MonomialIntegral {
    int p = 1;
    int q = 0;
    char kind = 's';  // 's' -> cos integrand, 'c' -> sin integrand
    double a = 0.0;
    double b = 1.0;
    double eps = 0.05;
};

// Polar tensor Gauss-Legendre with panel widths tied to the unit oscillation
// scale; refines until two successive levels agree to tol.
double oscillatory_monomial(const MonomialIntegral& mi, double N, const CutoffG& g,
                            double tol = 1e-8, int max_refine = 6);

// Jacobi-Anger reduction: angular integral in closed Bessel form, 1-D radial
// quadrature. Well conditioned at large N (no 2-D cancellation).
double oscillatory_monomial_bessel(const MonomialIntegral& mi, double N, const CutoffG& g);

// Independent scheme: nested 1-D adaptive Simpson on the bounding square.
double oscillatory_monomial_cartesian(const MonomialIntegral& mi, double N, const CutoffG& g,
                                      double tol = 1e-7);

// T^{i,j,s/c}_N(a,b) of the velocity expansion: the (p,q) = (i-j+1, j)
// monomial divided by (i-j)! j!.
double oscillatory_T(int i, int j, char kind, double a, double b, double N, const CutoffG& g,
                     double eps = 0.05, double tol = 1e-8);

enum class QuadScheme { kPolarTensor, kBesselRadial };

struct LimitResult {
    double value = 0.0;
    double error = 0.0;  // last Cauchy difference (or quadrature tol floor)
    std::vector<double> Ns;
    std::vector<double> T;
    // Fitted decay exponent of |T_{2N}-T_N| over the last three doublings
    // above the rounding floor; +inf when everything sits at the floor.
    double decay_exponent = 0.0;
};

// Evaluates T along N = 2^k, k = k0.., until the Cauchy difference falls
// under stop_tol or k reaches k_max; verifies super-polynomial decay.
LimitResult limit_monomial(const MonomialIntegral& mi, const CutoffG& g, int k0 = 4,
                           int k_max = 10, double stop_tol = 1e-9, double quad_tol = 1e-8,
                           bool require_decay = true,
                           QuadScheme scheme = QuadScheme::kBesselRadial);

LimitResult limit_constant(int i, int j, char kind, double a, double b, const CutoffG& g,
                           int k0 = 4, int k_max = 10, double stop_tol = 1e-9,
                           double quad_tol = 1e-8,
                           QuadScheme scheme = QuadScheme::kBesselRadial);

// Least-squares slope of log|d| vs log N (helper shared by studies).
double fit_loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace ipm
