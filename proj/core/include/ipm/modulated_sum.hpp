#pragma once

#include <vector>

#include "ipm/envelope.hpp"
#include "ipm/fields.hpp"
#include "ipm/grid_field.hpp"

namespace ipm {

// One frequency line of a modulated sum: g1 sin(N l X) + g2 cos(N l X).
struct ModTerm {
    int l = 0;
    EnvelopePtr g1;  // sin coefficient
    EnvelopePtr g2;  // cos coefficient
};

// sum_l g1_l(x) sin(N l X(x)) + g2_l(x) cos(N l X(x)) at a fixed time.
class ModulatedSum {
public:
    ModulatedSum() = default;
    ModulatedSum(double N, BivariatePoly X) : N_(N), X_(std::move(X)) {}

    double N() const { return N_; }
    const BivariatePoly& X() const { return X_; }
    void set_X(const BivariatePoly& X) { X_ = X; }

    const std::vector<ModTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    int max_l() const { return terms_.empty() ? 0 : terms_.back().l; }

    // Accumulates env into the sin (channel 0) or cos (channel 1) coefficient
    // of frequency l. Terms stay sorted by l; l >= 1.
    void add(int l, int channel, EnvelopePtr env);

    double eval(Vec2 x) const;
    double support_radius() const;
    Parity parity() const;

    // Max |grad X| over the common support (sampled estimate).
    double phase_gradient_bound() const;

    ModulatedSum operator+(const ModulatedSum& o) const;
    ModulatedSum operator*(double s) const;

    // Drop frequency lines whose envelopes both have zero support.
    void prune();

private:
    double N_ = 0.0;
    BivariatePoly X_;
    std::vector<ModTerm> terms_;
};

GridField sample(const ModulatedSum& m, int n, double L);

}  // namespace ipm
