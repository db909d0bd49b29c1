#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ipm {

// Classical RK4 with fixed step. State must support s + s, s * double.
// Steps may be negative (backward-in-time integration).
template <typename State, typename Rhs>
State rk4_step(const Rhs& rhs, double t, const State& y, double h) {
    State k1 = rhs(t, y);
    State k2 = rhs(t + 0.5 * h, y + k1 * (0.5 * h));
    State k3 = rhs(t + 0.5 * h, y + k2 * (0.5 * h));
    State k4 = rhs(t + h, y + k3 * h);
    return y + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
}

// Integrate from t0 to t1 with |step| <= max_step, recording every node.
// Returns the node times and states, t0 first. Handles t1 < t0.
template <typename State, typename Rhs>
void rk4_integrate(const Rhs& rhs, double t0, double t1, const State& y0,
                   double max_step, std::vector<double>& ts, std::vector<State>& ys) {
    if (!(max_step > 0.0)) throw std::invalid_argument("rk4: step must be positive");
    const double span = t1 - t0;
    const std::size_t n = std::max<std::size_t>(1, (std::size_t)std::ceil(std::fabs(span) / max_step));
    const double h = span / (double)n;
    if (std::fabs(h) < 1e-300) throw std::runtime_error("rk4: step size underflow");
    ts.clear();
    ys.clear();
    ts.reserve(n + 1);
    ys.reserve(n + 1);
    ts.push_back(t0);
    ys.push_back(y0);
    State y = y0;
    for (std::size_t k = 0; k < n; ++k) {
        const double t = t0 + (double)k * h;
        y = rk4_step(rhs, t, y, h);
        ts.push_back(k + 1 == n ? t1 : t + h);
        ys.push_back(y);
    }
}

// Dense trajectory with uniform nodes; cubic (Catmull-Rom style) interpolation
// between nodes. Good to O(h^4), matching the integrator order.
template <typename State>
class Trajectory {
public:
    Trajectory() = default;
    Trajectory(std::vector<double> ts, std::vector<State> ys)
        : ts_(std::move(ts)), ys_(std::move(ys)) {}

    double t_front() const { return ts_.front(); }
    double t_back() const { return ts_.back(); }
    std::size_t size() const { return ts_.size(); }
    const std::vector<double>& times() const { return ts_; }
    const std::vector<State>& states() const { return ys_; }
    const State& state(std::size_t i) const { return ys_[i]; }

    State eval(double t) const {
        if (ts_.size() == 1) return ys_[0];
        const double ta = ts_.front(), tb = ts_.back();
        const double lo = std::min(ta, tb), hi = std::max(ta, tb);
        if (t < lo - 1e-9 || t > hi + 1e-9)
            throw std::out_of_range("Trajectory::eval outside time window");
        const double h = (tb - ta) / (double)(ts_.size() - 1);
        double u = (t - ta) / h;
        std::ptrdiff_t i = (std::ptrdiff_t)std::floor(u);
        i = std::max<std::ptrdiff_t>(0, std::min<std::ptrdiff_t>((std::ptrdiff_t)ts_.size() - 2, i));
        const double s = u - (double)i;
        // Catmull-Rom with clamped ends.
        const State& p1 = ys_[(std::size_t)i];
        const State& p2 = ys_[(std::size_t)i + 1];
        const State& p0 = ys_[(std::size_t)std::max<std::ptrdiff_t>(0, i - 1)];
        const State& p3 = ys_[std::min(ys_.size() - 1, (std::size_t)i + 2)];
        const double s2 = s * s, s3 = s2 * s;
        return p0 * (-0.5 * s3 + s2 - 0.5 * s) + p1 * (1.5 * s3 - 2.5 * s2 + 1.0) +
               p2 * (-1.5 * s3 + 2.0 * s2 + 0.5 * s) + p3 * (0.5 * s3 - 0.5 * s2);
    }

private:
    std::vector<double> ts_;
    std::vector<State> ys_;
};

}  // namespace ipm
