#include "ipm/bivariate_poly.hpp"

#include <cmath>
#include <stdexcept>

namespace ipm {

BivariatePoly::BivariatePoly(int degree)
    : degree_(degree),
      c_((std::size_t)(degree + 1) * (std::size_t)(degree + 2) / 2, 0.0) {
    if (degree < 0) throw std::invalid_argument("BivariatePoly: negative degree");
}

BivariatePoly BivariatePoly::linear(double c10, double c01, int degree) {
    BivariatePoly p(std::max(1, degree));
    p.set_coeff(1, 0, c10);
    p.set_coeff(0, 1, c01);
    return p;
}

std::size_t BivariatePoly::idx(int i, int j) const {
    const int n = i + j;
    if (i < 0 || j < 0 || n > degree_) throw std::out_of_range("BivariatePoly index");
    return (std::size_t)n * (std::size_t)(n + 1) / 2 + (std::size_t)j;
}

double BivariatePoly::eval(Vec2 x) const {
    // Evaluate by total degree blocks with Horner in x2 inside each block.
    double result = 0.0;
    std::vector<double> p1(1 + (std::size_t)degree_);  // powers of x1
    p1[0] = 1.0;
    for (int i = 1; i <= degree_; ++i) p1[(std::size_t)i] = p1[(std::size_t)i - 1] * x.x;
    double p2 = 1.0;
    std::vector<double> p2s(1 + (std::size_t)degree_);
    p2s[0] = 1.0;
    for (int j = 1; j <= degree_; ++j) p2s[(std::size_t)j] = p2s[(std::size_t)j - 1] * x.y;
    (void)p2;
    for (int n = 0; n <= degree_; ++n)
        for (int j = 0; j <= n; ++j) {
            const double cij = c_[(std::size_t)n * (std::size_t)(n + 1) / 2 + (std::size_t)j];
            if (cij != 0.0) result += cij * p1[(std::size_t)(n - j)] * p2s[(std::size_t)j];
        }
    return result;
}

Vec2 BivariatePoly::gradient(Vec2 x) const {
    return {derivative(1, 0).eval(x), derivative(0, 1).eval(x)};
}

BivariatePoly BivariatePoly::derivative(int a, int b) const {
    const int nd = std::max(0, degree_ - a - b);
    BivariatePoly r(nd);
    for (int n = a + b; n <= degree_; ++n)
        for (int j = 0; j <= n; ++j) {
            const int i = n - j;
            if (i < a || j < b) continue;
            double f = c_[idx(i, j)];
            if (f == 0.0) continue;
            for (int k = 0; k < a; ++k) f *= (double)(i - k);
            for (int k = 0; k < b; ++k) f *= (double)(j - k);
            r.set_coeff(i - a, j - b, f);
        }
    return r;
}

BivariatePoly BivariatePoly::truncate(int k) const {
    BivariatePoly r(std::min(k, degree_));
    for (int n = 0; n <= r.degree(); ++n)
        for (int j = 0; j <= n; ++j) r.set_coeff(n - j, j, coeff(n - j, j));
    return r;
}

BivariatePoly BivariatePoly::compose_linear(const Mat2& A) const {
    // x1 -> a x1 + b x2, x2 -> c x1 + d x2. Build via power tables of the two
    // linear forms, exact for polynomials.
    BivariatePoly r(degree_);
    std::vector<BivariatePoly> pow1, pow2;
    pow1.reserve((std::size_t)degree_ + 1);
    pow2.reserve((std::size_t)degree_ + 1);
    BivariatePoly one(0);
    one.set_coeff(0, 0, 1.0);
    pow1.push_back(one);
    pow2.push_back(one);
    const BivariatePoly l1 = BivariatePoly::linear(A.a, A.b);
    const BivariatePoly l2 = BivariatePoly::linear(A.c, A.d);
    for (int k = 1; k <= degree_; ++k) {
        pow1.push_back(pow1.back().mul(l1, degree_));
        pow2.push_back(pow2.back().mul(l2, degree_));
    }
    for (int n = 0; n <= degree_; ++n)
        for (int j = 0; j <= n; ++j) {
            const double cij = coeff(n - j, j);
            if (cij == 0.0) continue;
            r = r + pow1[(std::size_t)(n - j)].mul(pow2[(std::size_t)j], degree_) * cij;
        }
    return r;
}

BivariatePoly BivariatePoly::operator+(const BivariatePoly& o) const {
    const int d = std::max(degree_, o.degree_);
    BivariatePoly r(d);
    for (int n = 0; n <= d; ++n)
        for (int j = 0; j <= n; ++j) {
            double v = 0.0;
            if (n <= degree_) v += coeff(n - j, j);
            if (n <= o.degree_) v += o.coeff(n - j, j);
            r.set_coeff(n - j, j, v);
        }
    return r;
}

BivariatePoly BivariatePoly::operator-(const BivariatePoly& o) const {
    return *this + o * (-1.0);
}

BivariatePoly BivariatePoly::operator*(double s) const {
    BivariatePoly r(degree_);
    for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k] * s;
    return r;
}

BivariatePoly BivariatePoly::mul(const BivariatePoly& o, int max_degree) const {
    const int d = (max_degree < 0) ? degree_ + o.degree_ : std::min(max_degree, degree_ + o.degree_);
    BivariatePoly r(d);
    for (int n1 = 0; n1 <= degree_; ++n1)
        for (int j1 = 0; j1 <= n1; ++j1) {
            const double a = coeff(n1 - j1, j1);
            if (a == 0.0) continue;
            for (int n2 = 0; n2 <= o.degree_ && n1 + n2 <= d; ++n2)
                for (int j2 = 0; j2 <= n2; ++j2) {
                    const double b = o.coeff(n2 - j2, j2);
                    if (b == 0.0) continue;
                    const int i = n1 - j1 + n2 - j2, j = j1 + j2;
                    r.set_coeff(i, j, r.coeff(i, j) + a * b);
                }
        }
    return r;
}

double BivariatePoly::max_abs_coeff_above(int k) const {
    double m = 0.0;
    for (int n = k + 1; n <= degree_; ++n)
        for (int j = 0; j <= n; ++j) m = std::max(m, std::fabs(coeff(n - j, j)));
    return m;
}

double BivariatePoly::max_abs_coeff() const {
    double m = 0.0;
    for (double v : c_) m = std::max(m, std::fabs(v));
    return m;
}

bool BivariatePoly::is_odd(double tol) const {
    for (int n = 0; n <= degree_; n += 2)
        for (int j = 0; j <= n; ++j)
            if (std::fabs(coeff(n - j, j)) > tol) return false;
    return true;
}

Jet2 BivariatePoly::jet(Vec2 x, int order) const {
    Jet2 x1 = Jet2::var(x.x, 0, order);
    Jet2 x2 = Jet2::var(x.y, 1, order);
    Jet2 r = Jet2::constant(0.0, order);
    std::vector<Jet2> p1{Jet2::constant(1.0, order)}, p2{Jet2::constant(1.0, order)};
    for (int k = 1; k <= degree_; ++k) {
        p1.push_back(p1.back() * x1);
        p2.push_back(p2.back() * x2);
    }
    for (int n = 0; n <= degree_; ++n)
        for (int j = 0; j <= n; ++j) {
            const double cij = coeff(n - j, j);
            if (cij != 0.0) r = r + p1[(std::size_t)(n - j)] * p2[(std::size_t)j] * cij;
        }
    return r;
}

}  // namespace ipm
