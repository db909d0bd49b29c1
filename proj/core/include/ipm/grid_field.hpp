#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "ipm/vec2.hpp"

namespace ipm {

struct ResolutionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Scalar samples on the uniform periodic grid [-L,L)^2, n points per axis,
// x(i,j) = (-L + i*dx, -L + j*dx), dx = 2L/n, stored row-major in i.
class GridField {
public:
    GridField() = default;
    GridField(int n, double L, bool odd = false);

    static GridField sample_function(int n, double L, const std::function<double(Vec2)>& f,
                                     bool odd = false);

    int n() const { return n_; }
    double L() const { return L_; }
    double dx() const { return 2.0 * L_ / (double)n_; }
    bool odd_flag() const { return odd_; }
    void set_odd_flag(bool v) { odd_ = v; }

    double& at(int i, int j) { return v_[(std::size_t)wrap(i) * (std::size_t)n_ + (std::size_t)wrap(j)]; }
    double at(int i, int j) const { return v_[(std::size_t)wrap(i) * (std::size_t)n_ + (std::size_t)wrap(j)]; }
    const std::vector<double>& data() const { return v_; }
    std::vector<double>& data() { return v_; }

    Vec2 point(int i, int j) const { return {-L_ + i * dx(), -L_ + j * dx()}; }

    bool all_finite() const;
    double max_abs() const;
    double mean() const;
    double integrate() const;  // sum * dx^2

    GridField operator+(const GridField& o) const;
    GridField operator-(const GridField& o) const;
    GridField operator*(double s) const;
    GridField pointwise_mul(const GridField& o) const;

    // max |v(x) + v(-x)| over the grid (0 means odd).
    double check_odd() const;

    // Max over the grid of all centered 4th-order finite-difference
    // derivatives of total order <= j. Raises ResolutionError when the
    // spectral tail indicates fewer than eight points per wavelength.
    double holder_norm(int j) const;
    // Same without the resolution check (for fields built from data known to
    // be resolved, or when probing deliberately rough data).
    double holder_norm_unchecked(int j) const;

    // d^{a+b}/dx1^a dx2^b by centered 4th-order stencils.
    GridField fd_derivative(int a, int b) const;

    // Fraction of spectral energy carried by modes with fewer than eight
    // points per wavelength.
    double unresolved_energy_fraction() const;

    void save(const std::string& path) const;
    static GridField load(const std::string& path);

private:
    int n_ = 0;
    double L_ = 0.0;
    bool odd_ = false;
    std::vector<double> v_;

    int wrap(int i) const {
        i %= n_;
        return i < 0 ? i + n_ : i;
    }
    void check_compatible(const GridField& o) const;
};

// FFT utilities for GridField (FFTW-backed). Forward returns the half-complex
// spectrum (n x (n/2+1)), normalized so that inverse(forward(f)) = f.
namespace spectral {

using Spectrum = std::vector<std::complex<double>>;

Spectrum forward(const GridField& f);
GridField inverse(const Spectrum& s, int n, double L, bool odd = false);

// Integer wavenumber of row index i (first axis).
inline int wavenumber(int i, int n) { return i <= n / 2 ? i : i - n; }

// Apply a multiplier m(xi1, xi2) in Fourier space (xi = (pi/L)*k).
GridField apply_multiplier(const GridField& f,
                           const std::function<double(double, double)>& m);

// Exact spectral derivative d^{a+b}/dx1^a dx2^b.
GridField derivative(const GridField& f, int a, int b);

// Value of d^{a+b} f / dx1^a dx2^b at the origin, summed over the spectrum.
double derivative_at_origin(const Spectrum& s, int n, double L, int a, int b);

}  // namespace spectral

}  // namespace ipm
