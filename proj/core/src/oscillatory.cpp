#include "ipm/oscillatory.hpp"

#include <cmath>
#include <functional>
#include <limits>

namespace ipm {

namespace {

// 12-point Gauss-Legendre nodes/weights on [-1,1].
constexpr int kGL = 12;
const double kGLx[kGL] = {
    -0.9815606342467192, -0.9041172563704749, -0.7699026741943047,
    -0.5873179542866175, -0.3678314989981802, -0.1252334085114689,
    0.1252334085114689,  0.3678314989981802,  0.5873179542866175,
    0.7699026741943047,  0.9041172563704749,  0.9815606342467192};
const double kGLw[kGL] = {
    0.0471753363865118, 0.1069393259953184, 0.1600783285433462,
    0.2031674267230659, 0.2334925365383548, 0.2491470458134028,
    0.2491470458134028, 0.2334925365383548, 0.2031674267230659,
    0.1600783285433462, 0.1069393259953184, 0.0471753363865118};

double polar_level(const MonomialIntegral& mi, double R, const CutoffG& g, int level) {
    // Panel widths tied to the oscillation scale: the radial phase advances at
    // unit rate, the angular phase at rate up to R, so half-wavelength panels
    // need width pi (radial) and pi/R (angular). Each refinement doubles both.
    const int n_theta = std::max(16, (int)std::ceil(2.0 * M_PI / std::min(M_PI / 8.0, M_PI / R))) << level;
    const int n_rad = std::max(8, (int)std::ceil(R / M_PI)) << level;
    const double dtheta = 2.0 * M_PI / n_theta;
    const double dr = R / n_rad;
    const int pq = mi.p + mi.q;

    double total = 0.0;
    for (int tp = 0; tp < n_theta; ++tp) {
        const double t0 = tp * dtheta;
        for (int tn = 0; tn < kGL; ++tn) {
            const double theta = t0 + 0.5 * dtheta * (1.0 + kGLx[tn]);
            const double wt = 0.5 * dtheta * kGLw[tn];
            const double ct = std::cos(theta), st = std::sin(theta);
            double ang = 1.0;
            for (int k = 0; k < mi.p; ++k) ang *= ct;
            for (int k = 0; k < mi.q; ++k) ang *= st;
            if (ang == 0.0) continue;
            const double c = mi.a * st + mi.b * ct;  // radial oscillation rate
            double radial = 0.0;
            for (int rp = 0; rp < n_rad; ++rp) {
                const double r0 = rp * dr;
                for (int rn = 0; rn < kGL; ++rn) {
                    const double r = r0 + 0.5 * dr * (1.0 + kGLx[rn]);
                    const double wr = 0.5 * dr * kGLw[rn];
                    const double gv = g(r / R);
                    if (gv == 0.0) continue;
                    // integrand r^{p+q-2} * trig(c r) * g, times Jacobian r
                    double rad = gv;
                    for (int k = 0; k < pq - 1; ++k) rad *= r;
                    const double phase = c * r;
                    rad *= (mi.kind == 's') ? std::cos(phase) : std::sin(phase);
                    radial += wr * rad;
                }
            }
            total += wt * ang * radial;
        }
    }
    return total;
}

}  // namespace

double oscillatory_monomial(const MonomialIntegral& mi, double N, const CutoffG& g, double tol,
                            int max_refine) {
    if (mi.p + mi.q < 1) throw std::invalid_argument("oscillatory_monomial: p+q must be >= 1");
    if (std::fabs(mi.a * mi.a + mi.b * mi.b - 1.0) > 1e-12)
        throw std::invalid_argument("oscillatory_monomial: direction must be a unit vector");
    if (!(N >= 1.0)) throw std::invalid_argument("oscillatory_monomial: N must be >= 1");
    if (!(mi.eps > 0.0 && mi.eps < 1.0))
        throw std::invalid_argument("oscillatory_monomial: eps must lie in (0,1)");
    const double R = std::pow(N, 1.0 - mi.eps);
    double prev = polar_level(mi, R, g, 0);
    for (int lvl = 1; lvl <= max_refine; ++lvl) {
        const double cur = polar_level(mi, R, g, lvl);
        // Tolerance is relative to the integrand scale: pre-cancellation
        // magnitudes grow like R^{p+q}, which bounds attainable precision.
        const double scale = std::max(1.0, std::pow(R, (double)(mi.p + mi.q)) * 1e-4);
        if (std::fabs(cur - prev) < tol * scale) return cur;
        prev = cur;
    }
    throw QuadratureError("oscillatory_monomial: tolerance not met at max refinement");
}

namespace {

// Fourier coefficients of W(psi) = (a cos + b sin)^p (a sin - b cos)^q by
// discrete projection (exact for trigonometric polynomials of this degree).
void angular_fourier(int p, int q, double a, double b, std::vector<double>& alpha,
                     std::vector<double>& beta) {
    const int deg = p + q;
    const int M = 4 * (deg + 2);
    alpha.assign((std::size_t)deg + 1, 0.0);
    beta.assign((std::size_t)deg + 1, 0.0);
    for (int m = 0; m < M; ++m) {
        const double psi = 2.0 * M_PI * m / M;
        const double c = std::cos(psi), s = std::sin(psi);
        double w = 1.0;
        for (int k = 0; k < p; ++k) w *= (a * c + b * s);
        for (int k = 0; k < q; ++k) w *= (a * s - b * c);
        for (int k = 0; k <= deg; ++k) {
            alpha[(std::size_t)k] += w * std::cos(k * psi);
            beta[(std::size_t)k] += w * std::sin(k * psi);
        }
    }
    for (int k = 0; k <= deg; ++k) {
        const double f = (k == 0) ? 1.0 / M : 2.0 / M;
        alpha[(std::size_t)k] *= f;
        beta[(std::size_t)k] *= f;
    }
}

}  // namespace

double oscillatory_monomial_bessel(const MonomialIntegral& mi, double N, const CutoffG& g) {
    // Angular integral done exactly by Jacobi-Anger:
    //   int W(psi) cos(r sin psi) dpsi = 2 pi sum_{k even} alpha_k J_k(r)
    //   int W(psi) sin(r sin psi) dpsi = 2 pi sum_{k odd}  beta_k  J_k(r)
    // leaving 1-D radial integrals of r^{p+q-1} g(r/R) J_k(r).
    const double R = std::pow(N, 1.0 - mi.eps);
    std::vector<double> alpha, beta;
    angular_fourier(mi.p, mi.q, mi.a, mi.b, alpha, beta);
    const int deg = mi.p + mi.q;
    const bool cos_phase = (mi.kind == 's');
    long double total = 0.0L;
    for (int k = 0; k <= deg; ++k) {
        const bool even = (k % 2 == 0);
        const double coef = cos_phase ? (even ? alpha[(std::size_t)k] : 0.0)
                                      : (even ? 0.0 : beta[(std::size_t)k]);
        if (coef == 0.0) continue;
        // panels of half a radial wavelength
        const int n_rad = std::max(8, (int)std::ceil(R / M_PI));
        const double dr = R / n_rad;
        long double acc = 0.0L;
        for (int rp = 0; rp < n_rad; ++rp) {
            const double r0 = rp * dr;
            for (int rn = 0; rn < kGL; ++rn) {
                const double r = r0 + 0.5 * dr * (1.0 + kGLx[rn]);
                const double wr = 0.5 * dr * kGLw[rn];
                const double gv = g(r / R);
                if (gv == 0.0) continue;
                double rad = gv;
                for (int m = 0; m < deg - 1; ++m) rad *= r;
                acc += (long double)(wr * rad * std::cyl_bessel_j((double)k, r));
            }
        }
        total += (long double)(2.0 * M_PI * coef) * acc;
    }
    return (double)total;
}

double oscillatory_T(int i, int j, char kind, double a, double b, double N, const CutoffG& g,
                     double eps, double tol) {
    if (j < 0 || j > i || i > 8) throw std::invalid_argument("oscillatory_T: need 0 <= j <= i <= 8");
    MonomialIntegral mi;
    mi.p = i - j + 1;
    mi.q = j;
    mi.kind = kind;
    mi.a = a;
    mi.b = b;
    mi.eps = eps;
    double fact = 1.0;
    for (int k = 2; k <= i - j; ++k) fact *= (double)k;
    for (int k = 2; k <= j; ++k) fact *= (double)k;
    return oscillatory_monomial(mi, N, g, tol) / fact;
}

double oscillatory_monomial_cartesian(const MonomialIntegral& mi, double N, const CutoffG& g,
                                      double tol) {
    // Tensor panel Gauss-Legendre on the bounding square, panel width half an
    // oscillation wavelength per axis, refined until two levels agree.
    const double R = std::pow(N, 1.0 - mi.eps);
    auto integrand = [&](double h1, double h2) {
        const double r2 = h1 * h1 + h2 * h2;
        if (r2 == 0.0) return 0.0;
        const double gv = g(std::sqrt(r2) / R);
        if (gv == 0.0) return 0.0;
        double v = gv / r2;
        for (int k = 0; k < mi.p; ++k) v *= h1;
        for (int k = 0; k < mi.q; ++k) v *= h2;
        const double phase = mi.a * h2 + mi.b * h1;
        return v * ((mi.kind == 's') ? std::cos(phase) : std::sin(phase));
    };
    auto level_value = [&](int level) {
        const int np = std::max(8, (int)std::ceil(2.0 * R / M_PI)) << level;
        const double d = 2.0 * R / np;
        long double acc = 0.0L;
        for (int pi = 0; pi < np; ++pi) {
            const double x0 = -R + pi * d;
            for (int pj = 0; pj < np; ++pj) {
                const double y0 = -R + pj * d;
                long double cell = 0.0L;
                for (int a = 0; a < kGL; ++a) {
                    const double h1 = x0 + 0.5 * d * (1.0 + kGLx[a]);
                    for (int b = 0; b < kGL; ++b) {
                        const double h2 = y0 + 0.5 * d * (1.0 + kGLx[b]);
                        cell += (long double)(kGLw[a] * kGLw[b] * integrand(h1, h2));
                    }
                }
                acc += cell * (long double)(0.25 * d * d);
            }
        }
        return (double)acc;
    };
    double prev = level_value(0);
    for (int lvl = 1; lvl <= 3; ++lvl) {
        const double cur = level_value(lvl);
        if (std::fabs(cur - prev) < tol) return cur;
        prev = cur;
    }
    throw QuadratureError("oscillatory_monomial_cartesian: tolerance not met");
}

double fit_loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t n = xs.size();
    if (n < 2 || ys.size() != n) throw std::invalid_argument("fit_loglog_slope: need >= 2 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const double lx = std::log(xs[k]), ly = std::log(ys[k]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double d = (double)n * sxx - sx * sx;
    return ((double)n * sxy - sx * sy) / d;
}

LimitResult limit_monomial(const MonomialIntegral& mi, const CutoffG& g, int k0, int k_max,
                           double stop_tol, double quad_tol, bool require_decay,
                           QuadScheme scheme) {
    LimitResult res;
    double scale = 1.0;
    // Differences below the scheme's accuracy are numerical noise, not decay.
    const double scheme_floor = (scheme == QuadScheme::kPolarTensor) ? quad_tol : 1e-12;
    for (int k = k0; k <= k_max; ++k) {
        const double N = std::pow(2.0, k);
        const double T = (scheme == QuadScheme::kPolarTensor)
                             ? oscillatory_monomial(mi, N, g, quad_tol)
                             : oscillatory_monomial_bessel(mi, N, g);
        res.Ns.push_back(N);
        res.T.push_back(T);
        scale = std::max({scale, std::fabs(T)});
        if (res.T.size() >= 2) {
            const double diff = std::fabs(res.T.back() - res.T[res.T.size() - 2]);
            if (diff < std::max(stop_tol, scheme_floor) && res.T.size() >= 3) break;
        }
    }
    res.value = res.T.back();
    const double floor = std::max(1e-13 * scale, scheme_floor);
    std::vector<double> dn, dv;
    for (std::size_t k = 0; k + 1 < res.T.size(); ++k) {
        const double d = std::fabs(res.T[k + 1] - res.T[k]);
        if (d > floor) {
            dn.push_back(res.Ns[k]);
            dv.push_back(d);
        }
    }
    res.error = std::max(res.T.size() >= 2 ? std::fabs(res.T.back() - res.T[res.T.size() - 2]) : 0.0,
                         floor);
    if (dv.size() < 2) {
        res.decay_exponent = std::numeric_limits<double>::infinity();
    } else {
        // last three doublings that sit above the floor
        const std::size_t take = std::min<std::size_t>(3, dv.size());
        std::vector<double> xs(dn.end() - (long)take, dn.end());
        std::vector<double> ys(dv.end() - (long)take, dv.end());
        res.decay_exponent = -fit_loglog_slope(xs, ys);
    }
    if (require_decay && res.decay_exponent < 3.0)
        throw QuadratureError("limit_monomial: Cauchy differences do not decay super-polynomially (exponent " +
                              std::to_string(res.decay_exponent) + ")");
    return res;
}

LimitResult limit_constant(int i, int j, char kind, double a, double b, const CutoffG& g, int k0,
                           int k_max, double stop_tol, double quad_tol, QuadScheme scheme) {
    if (j < 0 || j > i || i > 8) throw std::invalid_argument("limit_constant: need 0 <= j <= i <= 8");
    MonomialIntegral mi;
    mi.p = i - j + 1;
    mi.q = j;
    mi.kind = kind;
    mi.a = a;
    mi.b = b;
    LimitResult res = limit_monomial(mi, g, k0, k_max, stop_tol, quad_tol, true, scheme);
    double fact = 1.0;
    for (int k = 2; k <= i - j; ++k) fact *= (double)k;
    for (int k = 2; k <= j; ++k) fact *= (double)k;
    res.value /= fact;
    res.error /= fact;
    for (double& t : res.T) t /= fact;
    return res;
}

}  // namespace ipm
