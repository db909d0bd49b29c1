#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ipm/vec2.hpp"

namespace ipm {

// Truncated bivariate Taylor jet: coefficients c[a][b] of dx1^a dx2^b / (a! b!)
// ... stored as raw Taylor coefficients t[a][b] so that
//     f(x0 + d) = sum t[a][b] d1^a d2^b  (total degree <= order).
// Multiplication and composition are exact order-by-order, which is what makes
// jets usable as derivative oracles for closed-form envelopes.
class Jet2 {
public:
    Jet2() : order_(0), c_(1, 0.0) {}
    explicit Jet2(int order) : order_(order), c_(count(order), 0.0) {}

    static Jet2 constant(double v, int order) {
        Jet2 j(order);
        j.set(0, 0, v);
        return j;
    }
    // Jet of the coordinate function x1 (or x2) around a point.
    static Jet2 var(double value, int which, int order) {
        Jet2 j(order);
        j.set(0, 0, value);
        if (order >= 1) {
            if (which == 0) j.set(1, 0, 1.0);
            else j.set(0, 1, 1.0);
        }
        return j;
    }

    int order() const { return order_; }
    double get(int a, int b) const { return c_[idx(a, b)]; }
    void set(int a, int b, double v) { c_[idx(a, b)] = v; }

    // Raw Taylor coefficient -> partial derivative value: d^{a+b} f = t[a][b]·a!·b!
    double derivative(int a, int b) const {
        return get(a, b) * factorial(a) * factorial(b);
    }
    double value() const { return c_[0]; }

    Jet2 operator+(const Jet2& o) const {
        check(o);
        Jet2 r(order_);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
        return r;
    }
    Jet2 operator-(const Jet2& o) const {
        check(o);
        Jet2 r(order_);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
        return r;
    }
    Jet2 operator*(double s) const {
        Jet2 r(order_);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * s;
        return r;
    }
    Jet2 operator*(const Jet2& o) const {
        check(o);
        Jet2 r(order_);
        for (int n = 0; n <= order_; ++n)
            for (int a = 0; a <= n; ++a) {
                const int b = n - a;
                double acc = 0.0;
                for (int p = 0; p <= a; ++p)
                    for (int q = 0; q <= b; ++q)
                        acc += get(p, q) * o.get(a - p, b - q);
                r.set(a, b, acc);
            }
        return r;
    }

    // Composition with a univariate series g(u) = sum g_k u^k applied to this
    // jet's zero-mean part; used for exp/sin/cos/inverse of jets.
    Jet2 compose_univariate(const std::vector<double>& g) const {
        Jet2 u = *this;
        const double u0 = u.value();
        u.set(0, 0, 0.0);
        Jet2 r = Jet2::constant(g.empty() ? 0.0 : g[0], order_);
        Jet2 upow = Jet2::constant(1.0, order_);
        for (std::size_t k = 1; k < g.size(); ++k) {
            upow = upow * u;
            r = r + upow * g[k];
        }
        (void)u0;
        return r;
    }

    static double factorial(int n) {
        double f = 1.0;
        for (int i = 2; i <= n; ++i) f *= (double)i;
        return f;
    }

private:
    int order_;
    std::vector<double> c_;

    static std::size_t count(int order) {
        return (std::size_t)(order + 1) * (std::size_t)(order + 2) / 2;
    }
    std::size_t idx(int a, int b) const {
        const int n = a + b;
        if (a < 0 || b < 0 || n > order_) throw std::out_of_range("Jet2 index");
        return (std::size_t)n * (std::size_t)(n + 1) / 2 + (std::size_t)b;
    }
    void check(const Jet2& o) const {
        if (o.order_ != order_) throw std::invalid_argument("Jet2 order mismatch");
    }
};

// Analytic lifts. Each expands around the jet's value, so they are exact
// through the truncation order.
inline Jet2 jet_exp(const Jet2& u) {
    const int n = u.order();
    const double e0 = std::exp(u.value());
    std::vector<double> g((std::size_t)n + 1);
    double f = 1.0;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) f *= (double)k;
        g[(std::size_t)k] = e0 / f;
    }
    return u.compose_univariate(g);
}

inline Jet2 jet_recip(const Jet2& u) {
    const int n = u.order();
    const double v = u.value();
    if (v == 0.0) throw std::domain_error("jet_recip at zero");
    std::vector<double> g((std::size_t)n + 1);
    double p = 1.0 / v;
    for (int k = 0; k <= n; ++k) {
        g[(std::size_t)k] = (k % 2 == 0 ? p : -p);
        p /= v;
    }
    return u.compose_univariate(g);
}

inline void jet_sincos(const Jet2& u, Jet2& s, Jet2& c) {
    const int n = u.order();
    const double s0 = std::sin(u.value()), c0 = std::cos(u.value());
    std::vector<double> gs((std::size_t)n + 1), gc((std::size_t)n + 1);
    double f = 1.0;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) f *= (double)k;
        const int m = k % 4;
        const double ds = (m == 0) ? s0 : (m == 1) ? c0 : (m == 2) ? -s0 : -c0;
        const double dc = (m == 0) ? c0 : (m == 1) ? -s0 : (m == 2) ? -c0 : s0;
        gs[(std::size_t)k] = ds / f;
        gc[(std::size_t)k] = dc / f;
    }
    s = u.compose_univariate(gs);
    c = u.compose_univariate(gc);
}

}  // namespace ipm
