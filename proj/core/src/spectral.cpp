#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "ipm/grid_field.hpp"

namespace ipm::spectral {

namespace {

// Plans are cached per grid size and reused through the new-array interface.
// FFTW_ESTIMATE keeps planning deterministic (no runtime measurement).
struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

std::mutex g_plan_mutex;
std::map<int, PlanPair>& plan_cache() {
    static std::map<int, PlanPair> cache;
    return cache;
}

PlanPair get_plans(int n) {
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    auto& cache = plan_cache();
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    double* rbuf = fftw_alloc_real((std::size_t)n * (std::size_t)n);
    fftw_complex* cbuf = fftw_alloc_complex((std::size_t)n * (std::size_t)(n / 2 + 1));
    PlanPair p;
    p.fwd = fftw_plan_dft_r2c_2d(n, n, rbuf, cbuf, FFTW_ESTIMATE);
    p.bwd = fftw_plan_dft_c2r_2d(n, n, cbuf, rbuf, FFTW_ESTIMATE);
    fftw_free(rbuf);
    fftw_free(cbuf);
    cache[n] = p;
    return p;
}

struct RealBuf {
    double* p;
    explicit RealBuf(std::size_t n) : p(fftw_alloc_real(n)) {}
    ~RealBuf() { fftw_free(p); }
};
struct ComplexBuf {
    fftw_complex* p;
    explicit ComplexBuf(std::size_t n) : p(fftw_alloc_complex(n)) {}
    ~ComplexBuf() { fftw_free(p); }
};

}  // namespace

Spectrum forward(const GridField& f) {
    const int n = f.n();
    const std::size_t nc = (std::size_t)n * (std::size_t)(n / 2 + 1);
    RealBuf rb((std::size_t)n * (std::size_t)n);
    ComplexBuf cb(nc);
    for (std::size_t k = 0; k < f.data().size(); ++k) rb.p[k] = f.data()[k];
    PlanPair plans = get_plans(n);
    fftw_execute_dft_r2c(plans.fwd, rb.p, cb.p);
    Spectrum s(nc);
    const double scale = 1.0 / ((double)n * (double)n);
    for (std::size_t k = 0; k < nc; ++k) s[k] = std::complex<double>(cb.p[k][0], cb.p[k][1]) * scale;
    return s;
}

GridField inverse(const Spectrum& s, int n, double L, bool odd) {
    const std::size_t nc = (std::size_t)n * (std::size_t)(n / 2 + 1);
    if (s.size() != nc) throw std::invalid_argument("spectral::inverse: size mismatch");
    RealBuf rb((std::size_t)n * (std::size_t)n);
    ComplexBuf cb(nc);
    for (std::size_t k = 0; k < nc; ++k) {
        cb.p[k][0] = s[k].real();
        cb.p[k][1] = s[k].imag();
    }
    PlanPair plans = get_plans(n);
    fftw_execute_dft_c2r(plans.bwd, cb.p, rb.p);
    GridField g(n, L, odd);
    for (std::size_t k = 0; k < g.data().size(); ++k) g.data()[k] = rb.p[k];
    return g;
}

GridField apply_multiplier(const GridField& f, const std::function<double(double, double)>& m) {
    const int n = f.n();
    const double k0 = M_PI / f.L();  // xi = k0 * integer wavenumber
    Spectrum s = forward(f);
    for (int i = 0; i < n; ++i) {
        const double xi1 = k0 * wavenumber(i, n);
        for (int j = 0; j <= n / 2; ++j) {
            const double xi2 = k0 * j;
            s[(std::size_t)i * (std::size_t)(n / 2 + 1) + (std::size_t)j] *= m(xi1, xi2);
        }
    }
    return inverse(s, n, f.L(), f.odd_flag());
}

GridField derivative(const GridField& f, int a, int b) {
    const int n = f.n();
    const double k0 = M_PI / f.L();
    Spectrum s = forward(f);
    for (int i = 0; i < n; ++i) {
        const double xi1 = k0 * wavenumber(i, n);
        for (int j = 0; j <= n / 2; ++j) {
            const double xi2 = k0 * j;
            std::complex<double> mult(1.0, 0.0);
            for (int q = 0; q < a; ++q) mult *= std::complex<double>(0.0, xi1);
            for (int q = 0; q < b; ++q) mult *= std::complex<double>(0.0, xi2);
            // Kill the unpaired Nyquist mode when taking odd derivatives.
            if ((a % 2 == 1 && i == n / 2) || (b % 2 == 1 && j == n / 2)) mult = 0.0;
            s[(std::size_t)i * (std::size_t)(n / 2 + 1) + (std::size_t)j] *= mult;
        }
    }
    return inverse(s, n, f.L(), false);
}

double derivative_at_origin(const Spectrum& s, int n, double L, int a, int b) {
    // f(x) = sum_k s_k e^{i xi·x}; derivative at the grid origin x=0 uses the
    // full spectrum; the r2c half gets doubled except for self-conjugate rows.
    const double k0 = M_PI / L;
    std::complex<double> acc(0.0, 0.0);
    for (int i = 0; i < n; ++i) {
        const double xi1 = k0 * wavenumber(i, n);
        for (int j = 0; j <= n / 2; ++j) {
            const double xi2 = k0 * j;
            std::complex<double> mult(1.0, 0.0);
            for (int q = 0; q < a; ++q) mult *= std::complex<double>(0.0, xi1);
            for (int q = 0; q < b; ++q) mult *= std::complex<double>(0.0, xi2);
            std::complex<double> term = s[(std::size_t)i * (std::size_t)(n / 2 + 1) + (std::size_t)j] * mult;
            if (j != 0 && j != n / 2) {
                // Conjugate partner (-k1, -k2): for real fields its
                // contribution to the derivative is the conjugate term.
                acc += term + std::conj(term);
            } else {
                acc += term;
            }
        }
    }
    // Note: the grid origin x=0 sits at index (n/2? no: x=-L+i dx = 0 at i=n/2).
    // e^{i xi·0} = 1 for every mode, so no phase factors are needed.
    return acc.real();
}

}  // namespace ipm::spectral

namespace ipm {

double GridField::unresolved_energy_fraction() const {
    spectral::Spectrum s = spectral::forward(*this);
    const double k0 = M_PI / L_;
    const double cutoff = M_PI * (double)n_ / (8.0 * L_);  // 8 points per wavelength
    double total = 0.0, tail = 0.0;
    for (int i = 0; i < n_; ++i) {
        const double xi1 = k0 * spectral::wavenumber(i, n_);
        for (int j = 0; j <= n_ / 2; ++j) {
            const double xi2 = k0 * j;
            const double w = (j == 0 || j == n_ / 2) ? 1.0 : 2.0;
            const double e = w * std::norm(s[(std::size_t)i * (std::size_t)(n_ / 2 + 1) + (std::size_t)j]);
            total += e;
            if (std::hypot(xi1, xi2) > cutoff) tail += e;
        }
    }
    return total > 0.0 ? tail / total : 0.0;
}

}  // namespace ipm
