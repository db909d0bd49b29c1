#include "ipm/grid_field.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "ipm/fd_weights.hpp"

namespace ipm {

namespace {
bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }
}

GridField::GridField(int n, double L, bool odd) : n_(n), L_(L), odd_(odd) {
    if (n < 16 || !is_pow2(n)) throw std::invalid_argument("GridField: n must be a power of two >= 16");
    if (!(L > 0.0)) throw std::invalid_argument("GridField: box half-width must be positive");
    v_.assign((std::size_t)n * (std::size_t)n, 0.0);
}

GridField GridField::sample_function(int n, double L, const std::function<double(Vec2)>& f,
                                     bool odd) {
    GridField g(n, L, odd);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.at(i, j) = f(g.point(i, j));
    if (!g.all_finite()) throw std::runtime_error("GridField: non-finite sample");
    return g;
}

bool GridField::all_finite() const {
    for (double x : v_)
        if (!std::isfinite(x)) return false;
    return true;
}

double GridField::max_abs() const {
    double m = 0.0;
    for (double x : v_) m = std::max(m, std::fabs(x));
    return m;
}

double GridField::mean() const {
    double s = 0.0;
    for (double x : v_) s += x;
    return s / (double)v_.size();
}

double GridField::integrate() const {
    double s = 0.0;
    for (double x : v_) s += x;
    return s * dx() * dx();
}

void GridField::check_compatible(const GridField& o) const {
    if (o.n_ != n_ || o.L_ != L_) throw std::invalid_argument("GridField: incompatible grids");
}

GridField GridField::operator+(const GridField& o) const {
    check_compatible(o);
    GridField r = *this;
    for (std::size_t k = 0; k < v_.size(); ++k) r.v_[k] += o.v_[k];
    r.odd_ = odd_ && o.odd_;
    return r;
}

GridField GridField::operator-(const GridField& o) const {
    check_compatible(o);
    GridField r = *this;
    for (std::size_t k = 0; k < v_.size(); ++k) r.v_[k] -= o.v_[k];
    r.odd_ = odd_ && o.odd_;
    return r;
}

GridField GridField::operator*(double s) const {
    GridField r = *this;
    for (double& x : r.v_) x *= s;
    return r;
}

GridField GridField::pointwise_mul(const GridField& o) const {
    check_compatible(o);
    GridField r = *this;
    for (std::size_t k = 0; k < v_.size(); ++k) r.v_[k] *= o.v_[k];
    r.odd_ = false;
    return r;
}

double GridField::check_odd() const {
    double m = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            m = std::max(m, std::fabs(at(i, j) + at((n_ - i) % n_, (n_ - j) % n_)));
    return m;
}

GridField GridField::fd_derivative(int a, int b) const {
    GridField r = *this;
    r.odd_ = false;
    const double h = dx();
    auto apply_axis = [&](const GridField& src, int order, int axis) {
        const int k = fd_halfwidth_order4(order);
        std::vector<double> w = fd_central_weights(order, k);
        double hp = 1.0;
        for (int q = 0; q < order; ++q) hp *= h;
        GridField out(n_, L_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                double acc = 0.0;
                for (int s = -k; s <= k; ++s) {
                    const double ws = w[(std::size_t)(s + k)];
                    if (ws == 0.0) continue;
                    acc += ws * (axis == 0 ? src.at(i + s, j) : src.at(i, j + s));
                }
                out.at(i, j) = acc / hp;
            }
        return out;
    };
    if (a > 0) r = apply_axis(r, a, 0);
    if (b > 0) r = apply_axis(r, b, 1);
    return r;
}

double GridField::holder_norm_unchecked(int j) const {
    if (j < 0 || j > 6) throw std::invalid_argument("holder_norm: order must be in 0..6");
    double m = max_abs();
    for (int total = 1; total <= j; ++total)
        for (int a = 0; a <= total; ++a) m = std::max(m, fd_derivative(a, total - a).max_abs());
    return m;
}

double GridField::holder_norm(int j) const {
    if (max_abs() > 0.0) {
        const double frac = unresolved_energy_fraction();
        if (frac > 1e-10)
            throw ResolutionError("holder_norm: field has spectral content under 8 points per wavelength (fraction " +
                                  std::to_string(frac) + ")");
    }
    return holder_norm_unchecked(j);
}

void GridField::save(const std::string& path) const {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("GridField::save: cannot open " + path);
    os.write("IPMF", 4);
    const std::uint32_t n32 = (std::uint32_t)n_;
    os.write(reinterpret_cast<const char*>(&n32), 4);
    os.write(reinterpret_cast<const char*>(&L_), 8);
    const std::uint8_t odd8 = odd_ ? 1 : 0;
    os.write(reinterpret_cast<const char*>(&odd8), 1);
    os.write(reinterpret_cast<const char*>(v_.data()), (std::streamsize)(v_.size() * 8));
    if (!os) throw std::runtime_error("GridField::save: write failed");
}

GridField GridField::load(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("GridField::load: cannot open " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "IPMF", 4) != 0)
        throw std::runtime_error("GridField::load: bad magic");
    std::uint32_t n32 = 0;
    double L = 0.0;
    std::uint8_t odd8 = 0;
    is.read(reinterpret_cast<char*>(&n32), 4);
    is.read(reinterpret_cast<char*>(&L), 8);
    is.read(reinterpret_cast<char*>(&odd8), 1);
    GridField g((int)n32, L, odd8 != 0);
    is.read(reinterpret_cast<char*>(g.v_.data()), (std::streamsize)(g.v_.size() * 8));
    if (!is) throw std::runtime_error("GridField::load: truncated file");
    if (!g.all_finite()) throw std::runtime_error("GridField::load: non-finite values");
    return g;
}

}  // namespace ipm
