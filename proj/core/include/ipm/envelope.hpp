#pragma once

#include <limits>
#include <memory>
#include <vector>

#include "ipm/bivariate_poly.hpp"
#include "ipm/jet2.hpp"
#include "ipm/vec2.hpp"

namespace ipm {

enum class Parity { kEven, kOdd, kNone };

inline Parity parity_product(Parity a, Parity b) {
    if (a == Parity::kNone || b == Parity::kNone) return Parity::kNone;
    return (a == b) ? Parity::kEven : Parity::kOdd;
}
inline Parity parity_sum(Parity a, Parity b) {
    return (a == b) ? a : Parity::kNone;
}

// Smooth transition profiles on [0,1], value 1 at 0 and 0 at 1.
enum class TransitionProfile {
    kExpSmoothstep,  // exp(1 - 1/(1-s^2)); C^1 at s=0, C^inf at s=1
    kExpRatio,       // e^{-1/(1-s)} / (e^{-1/(1-s)} + e^{-1/s}); C^inf
    kErfc            // erfc(alpha(2s-1))/2; 0/1 at the ends to double precision
};

double transition01(TransitionProfile p, double s);
Jet2 transition01_jet(TransitionProfile p, const Jet2& s);

// Scalar envelope usable in closed form: pointwise values and exact Taylor
// jets (for derivatives of any order the construction needs).
class Envelope {
public:
    virtual ~Envelope() = default;
    virtual double eval(Vec2 x) const = 0;
    virtual Jet2 jet(Vec2 x, int order) const = 0;
    virtual double support_radius() const = 0;
    virtual Parity parity() const { return Parity::kNone; }
};

using EnvelopePtr = std::shared_ptr<const Envelope>;

// Radial bump: 1 on |x| <= R/2, smooth fall to 0 at |x| = R.
class BumpEnvelope final : public Envelope {
public:
    BumpEnvelope(double radius, TransitionProfile profile = TransitionProfile::kExpSmoothstep)
        : radius_(radius), profile_(profile) {}
    double eval(Vec2 x) const override;
    Jet2 jet(Vec2 x, int order) const override;
    double support_radius() const override { return radius_; }
    Parity parity() const override { return Parity::kEven; }

private:
    double radius_;
    TransitionProfile profile_;
};

class ConstEnvelope final : public Envelope {
public:
    explicit ConstEnvelope(double v, double support = std::numeric_limits<double>::infinity())
        : v_(v), support_(support) {}
    double eval(Vec2) const override { return v_; }
    Jet2 jet(Vec2, int order) const override { return Jet2::constant(v_, order); }
    double support_radius() const override { return v_ == 0.0 ? 0.0 : support_; }
    Parity parity() const override { return Parity::kEven; }

private:
    double v_;
    double support_;
};

// env(A x); support radius grows by 1/smin(A).
class AffineEnvelope final : public Envelope {
public:
    AffineEnvelope(EnvelopePtr base, const Mat2& A);
    double eval(Vec2 x) const override { return base_->eval(A_.apply(x)); }
    Jet2 jet(Vec2 x, int order) const override;
    double support_radius() const override { return support_; }
    Parity parity() const override { return base_->parity(); }

private:
    EnvelopePtr base_;
    Mat2 A_;
    double support_;
};

class SumEnvelope final : public Envelope {
public:
    SumEnvelope(std::vector<EnvelopePtr> terms) : terms_(std::move(terms)) {}
    double eval(Vec2 x) const override;
    Jet2 jet(Vec2 x, int order) const override;
    double support_radius() const override;
    Parity parity() const override;

private:
    std::vector<EnvelopePtr> terms_;
};

class ProductEnvelope final : public Envelope {
public:
    ProductEnvelope(EnvelopePtr a, EnvelopePtr b) : a_(std::move(a)), b_(std::move(b)) {}
    double eval(Vec2 x) const override { return a_->eval(x) * b_->eval(x); }
    Jet2 jet(Vec2 x, int order) const override { return a_->jet(x, order) * b_->jet(x, order); }
    double support_radius() const override {
        return std::min(a_->support_radius(), b_->support_radius());
    }
    Parity parity() const override { return parity_product(a_->parity(), b_->parity()); }

private:
    EnvelopePtr a_, b_;
};

class ScaledEnvelope final : public Envelope {
public:
    ScaledEnvelope(EnvelopePtr base, double s) : base_(std::move(base)), s_(s) {}
    double eval(Vec2 x) const override { return s_ * base_->eval(x); }
    Jet2 jet(Vec2 x, int order) const override { return base_->jet(x, order) * s_; }
    double support_radius() const override { return s_ == 0.0 ? 0.0 : base_->support_radius(); }
    Parity parity() const override { return base_->parity(); }

private:
    EnvelopePtr base_;
    double s_;
};

class PolyEnvelope final : public Envelope {
public:
    explicit PolyEnvelope(BivariatePoly p) : p_(std::move(p)) {}
    double eval(Vec2 x) const override { return p_.eval(x); }
    Jet2 jet(Vec2 x, int order) const override { return p_.jet(x, order); }
    double support_radius() const override { return std::numeric_limits<double>::infinity(); }
    Parity parity() const override;
    const BivariatePoly& poly() const { return p_; }

private:
    BivariatePoly p_;
};

// sin(P(x)) or cos(P(x)) for polynomial P — the phase-difference factors.
class TrigPolyEnvelope final : public Envelope {
public:
    TrigPolyEnvelope(BivariatePoly p, bool is_sin) : p_(std::move(p)), sin_(is_sin) {}
    double eval(Vec2 x) const override;
    Jet2 jet(Vec2 x, int order) const override;
    double support_radius() const override { return std::numeric_limits<double>::infinity(); }
    Parity parity() const override;

private:
    BivariatePoly p_;
    bool sin_;
};

// d^{a+b} env / dx1^a dx2^b realized through jets of the base envelope.
class DerivativeEnvelope final : public Envelope {
public:
    DerivativeEnvelope(EnvelopePtr base, int a, int b) : base_(std::move(base)), a_(a), b_(b) {}
    double eval(Vec2 x) const override { return base_->jet(x, a_ + b_).derivative(a_, b_); }
    Jet2 jet(Vec2 x, int order) const override;
    double support_radius() const override { return base_->support_radius(); }
    Parity parity() const override {
        Parity p = base_->parity();
        if (p == Parity::kNone) return p;
        return ((a_ + b_) % 2 == 0) ? p : (p == Parity::kEven ? Parity::kOdd : Parity::kEven);
    }

private:
    EnvelopePtr base_;
    int a_, b_;
};

EnvelopePtr make_bump(double radius, TransitionProfile profile = TransitionProfile::kExpSmoothstep);
EnvelopePtr make_const(double v);
EnvelopePtr env_sum(EnvelopePtr a, EnvelopePtr b);
EnvelopePtr env_product(EnvelopePtr a, EnvelopePtr b);
EnvelopePtr env_scale(EnvelopePtr a, double s);
EnvelopePtr env_affine(EnvelopePtr a, const Mat2& A);
EnvelopePtr env_poly(const BivariatePoly& p);
EnvelopePtr env_trig(const BivariatePoly& p, bool is_sin);
EnvelopePtr env_derivative(EnvelopePtr a, int dx1, int dx2);

}  // namespace ipm
