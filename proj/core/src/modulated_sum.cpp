#include "ipm/modulated_sum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ipm {

void ModulatedSum::add(int l, int channel, EnvelopePtr env) {
    if (l < 1) throw std::invalid_argument("ModulatedSum::add: l must be >= 1");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), l,
                               [](const ModTerm& t, int key) { return t.l < key; });
    if (it == terms_.end() || it->l != l) it = terms_.insert(it, ModTerm{l, nullptr, nullptr});
    EnvelopePtr& slot = (channel == 0) ? it->g1 : it->g2;
    slot = slot ? env_sum(slot, std::move(env)) : std::move(env);
}

double ModulatedSum::eval(Vec2 x) const {
    double acc = 0.0;
    for (const auto& t : terms_) {
        const double phase = N_ * (double)t.l * X_.eval(x);
        if (t.g1) acc += t.g1->eval(x) * std::sin(phase);
        if (t.g2) acc += t.g2->eval(x) * std::cos(phase);
    }
    return acc;
}

double ModulatedSum::support_radius() const {
    double r = 0.0;
    for (const auto& t : terms_) {
        if (t.g1) r = std::max(r, t.g1->support_radius());
        if (t.g2) r = std::max(r, t.g2->support_radius());
    }
    return r;
}

Parity ModulatedSum::parity() const {
    if (!X_.is_odd()) return Parity::kNone;
    Parity p = Parity::kOdd;
    for (const auto& t : terms_) {
        if (t.g1) p = parity_sum(p, parity_product(t.g1->parity(), Parity::kOdd));
        if (t.g2) p = parity_sum(p, parity_product(t.g2->parity(), Parity::kEven));
        if (p == Parity::kNone) break;
    }
    return p;
}

double ModulatedSum::phase_gradient_bound() const {
    const double r = support_radius();
    if (r == 0.0) return 0.0;
    double m = 0.0;
    const int samples = 24;
    for (int i = 0; i <= samples; ++i)
        for (int j = 0; j <= samples; ++j) {
            const Vec2 x{-r + 2.0 * r * i / samples, -r + 2.0 * r * j / samples};
            m = std::max(m, X_.gradient(x).norm());
        }
    return 1.05 * m;
}

ModulatedSum ModulatedSum::operator+(const ModulatedSum& o) const {
    if (o.empty()) return *this;
    if (empty()) return o;
    if (N_ != o.N_) throw std::invalid_argument("ModulatedSum: frequency mismatch");
    ModulatedSum r = *this;
    for (const auto& t : o.terms_) {
        if (t.g1) r.add(t.l, 0, t.g1);
        if (t.g2) r.add(t.l, 1, t.g2);
    }
    return r;
}

ModulatedSum ModulatedSum::operator*(double s) const {
    ModulatedSum r(N_, X_);
    for (const auto& t : terms_) {
        if (t.g1) r.add(t.l, 0, env_scale(t.g1, s));
        if (t.g2) r.add(t.l, 1, env_scale(t.g2, s));
    }
    return r;
}

void ModulatedSum::prune() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                [](const ModTerm& t) {
                                    const bool has1 = t.g1 && t.g1->support_radius() > 0.0;
                                    const bool has2 = t.g2 && t.g2->support_radius() > 0.0;
                                    return !has1 && !has2;
                                }),
                 terms_.end());
}

GridField sample(const ModulatedSum& m, int n, double L) {
    const double limit = M_PI * (double)n / (8.0 * L);
    const double freq = m.N() * (double)m.max_l() * m.phase_gradient_bound();
    if (freq > limit)
        throw ResolutionError("sample(ModulatedSum): frequency " + std::to_string(freq) +
                              " exceeds 8-points-per-wavelength limit " + std::to_string(limit));
    GridField g = GridField::sample_function(n, L, [&](Vec2 x) { return m.eval(x); });
    g.set_odd_flag(m.parity() == Parity::kOdd);
    return g;
}

}  // namespace ipm
