#pragma once

#include <vector>

#include "ipm/jet2.hpp"
#include "ipm/vec2.hpp"

namespace ipm {

// Real polynomial in (x1,x2) of bounded total degree, dense triangular
// storage of monomial coefficients c_{i,j} x1^i x2^j, i+j <= degree.
class BivariatePoly {
public:
    BivariatePoly() : degree_(0), c_(1, 0.0) {}
    explicit BivariatePoly(int degree);

    static BivariatePoly linear(double c10, double c01, int degree = 1);

    int degree() const { return degree_; }
    std::size_t coeff_count() const { return c_.size(); }

    double coeff(int i, int j) const { return c_[idx(i, j)]; }
    void set_coeff(int i, int j, double v) { c_[idx(i, j)] = v; }

    double eval(Vec2 x) const;
    Vec2 gradient(Vec2 x) const;
    Vec2 linear_part() const { return degree_ >= 1 ? Vec2{coeff(1, 0), coeff(0, 1)} : Vec2{0, 0}; }

    // d^{a+b} / dx1^a dx2^b as a polynomial.
    BivariatePoly derivative(int a, int b) const;

    // Degree-k truncation (drop monomials of total degree > k).
    BivariatePoly truncate(int k) const;

    // p(A x) with A linear; exact, result degree = this degree.
    BivariatePoly compose_linear(const Mat2& A) const;

    BivariatePoly operator+(const BivariatePoly& o) const;
    BivariatePoly operator-(const BivariatePoly& o) const;
    BivariatePoly operator*(double s) const;
    // Product truncated to max_degree (pass -1 for full degree sum).
    BivariatePoly mul(const BivariatePoly& o, int max_degree = -1) const;

    // Max |c_{i,j}| over monomials of total degree > k (used for nonlinearity
    // diagnostics), and over all.
    double max_abs_coeff_above(int k) const;
    double max_abs_coeff() const;

    // True when c_{i,j} = 0 for all even i+j within tol (odd function).
    bool is_odd(double tol = 0.0) const;

    Jet2 jet(Vec2 x, int order) const;

private:
    int degree_;
    std::vector<double> c_;

    std::size_t idx(int i, int j) const;
};

}  // namespace ipm
