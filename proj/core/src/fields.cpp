#include <cmath>
#include <stdexcept>

#include "ipm/envelope.hpp"
#include "ipm/fields.hpp"

namespace ipm {

// ---------- transition profiles ----------

// Steepness of the erfc transition; erfc(+-alpha) differs from 0/2 by ~5e-20,
// below double rounding, so the cutoff is exactly 1 and 0 at the junctions.
static constexpr double kErfcAlpha = 6.5;

namespace {
// Jet of erfc(t): erfc'(t) = -2/sqrt(pi) e^{-t^2}; higher derivatives via the
// Hermite recurrence H_{k+1} = 2 t H_k - 2 k H_{k-1}.
Jet2 jet_erfc(const Jet2& t) {
    const int n = t.order();
    const double t0 = t.value();
    std::vector<double> g((std::size_t)n + 1);
    g[0] = std::erfc(t0);
    const double gauss = -2.0 / std::sqrt(M_PI) * std::exp(-t0 * t0);
    double Hprev = 0.0, H = 1.0;  // H_{-1}, H_0 at t0
    double fact = 1.0;
    for (int k = 1; k <= n; ++k) {
        fact *= (double)k;
        // erfc^{(k)}(t0) = gauss * (-1)^{k-1} H_{k-1}(t0)
        g[(std::size_t)k] = gauss * ((k - 1) % 2 == 0 ? 1.0 : -1.0) * H / fact;
        const double Hnext = 2.0 * t0 * H - 2.0 * (double)(k - 1) * Hprev;
        Hprev = H;
        H = Hnext;
    }
    return t.compose_univariate(g);
}
}  // namespace

double transition01(TransitionProfile p, double s) {
    if (s <= 0.0) return 1.0;
    if (s >= 1.0) return 0.0;
    switch (p) {
        case TransitionProfile::kExpSmoothstep:
            return std::exp(1.0 - 1.0 / (1.0 - s * s));
        case TransitionProfile::kExpRatio: {
            const double a = std::exp(-1.0 / (1.0 - s));
            const double b = std::exp(-1.0 / s);
            return a / (a + b);
        }
        case TransitionProfile::kErfc:
            return 0.5 * std::erfc(kErfcAlpha * (2.0 * s - 1.0));
    }
    return 0.0;
}

Jet2 transition01_jet(TransitionProfile p, const Jet2& s) {
    const double s0 = s.value();
    if (s0 <= 0.0) return Jet2::constant(1.0, s.order());
    if (s0 >= 1.0) return Jet2::constant(0.0, s.order());
    const Jet2 one = Jet2::constant(1.0, s.order());
    switch (p) {
        case TransitionProfile::kExpSmoothstep:
            return jet_exp(one - jet_recip(one - s * s));
        case TransitionProfile::kExpRatio: {
            Jet2 a = jet_exp(jet_recip(one - s) * -1.0);
            Jet2 b = jet_exp(jet_recip(s) * -1.0);
            return a * jet_recip(a + b);
        }
        case TransitionProfile::kErfc:
            return jet_erfc((s * 2.0 - one) * kErfcAlpha) * 0.5;
    }
    return Jet2::constant(0.0, s.order());
}

// ---------- envelopes ----------

double BumpEnvelope::eval(Vec2 x) const {
    const double r = x.norm() / radius_;
    if (r <= 0.5) return 1.0;
    if (r >= 1.0) return 0.0;
    return transition01(profile_, 2.0 * r - 1.0);
}

Jet2 BumpEnvelope::jet(Vec2 x, int order) const {
    const double r = x.norm() / radius_;
    if (r < 0.5) return Jet2::constant(1.0, order);
    if (r > 1.0) return Jet2::constant(0.0, order);
    // s = 2 sqrt(u)/R - 1 with u = |x|^2; u > 0 on this branch.
    Jet2 u = Jet2::var(x.x, 0, order) * Jet2::var(x.x, 0, order) +
             Jet2::var(x.y, 1, order) * Jet2::var(x.y, 1, order);
    // sqrt(u) series at u0 > 1/4 R^2: g_k = g_{k-1} (1/2-(k-1)) / (k u0).
    const double u0 = u.value();
    std::vector<double> g((std::size_t)order + 1);
    double coef = std::sqrt(u0);
    g[0] = coef;
    for (int k = 1; k <= order; ++k) {
        coef *= (0.5 - (double)(k - 1)) / (u0 * (double)k);
        g[(std::size_t)k] = coef;
    }
    Jet2 rj = u.compose_univariate(g) * (2.0 / radius_);
    Jet2 s = rj - Jet2::constant(1.0, order);
    return transition01_jet(profile_, s);
}

AffineEnvelope::AffineEnvelope(EnvelopePtr base, const Mat2& A) : base_(std::move(base)), A_(A) {
    // Smallest singular value of A bounds how far the support stretches.
    const double t = A.a * A.a + A.b * A.b + A.c * A.c + A.d * A.d;
    const double dt = A.det();
    const double disc = std::sqrt(std::max(0.0, t * t / 4.0 - dt * dt));
    const double smin2 = std::max(1e-300, t / 2.0 - disc);
    support_ = base_->support_radius() / std::sqrt(smin2);
}

Jet2 AffineEnvelope::jet(Vec2 x, int order) const {
    // Compose base jet at Ax with the linear map: substitute
    // d1 -> a d1 + b d2, d2 -> c d1 + d d2 in the Taylor expansion.
    Jet2 inner = base_->jet(A_.apply(x), order);
    Jet2 u = Jet2::var(0.0, 0, order) * A_.a + Jet2::var(0.0, 1, order) * A_.b;
    Jet2 v = Jet2::var(0.0, 0, order) * A_.c + Jet2::var(0.0, 1, order) * A_.d;
    // Horner-style reconstruction over total degree.
    Jet2 r = Jet2::constant(0.0, order);
    std::vector<Jet2> pu{Jet2::constant(1.0, order)}, pv{Jet2::constant(1.0, order)};
    for (int k = 1; k <= order; ++k) {
        pu.push_back(pu.back() * u);
        pv.push_back(pv.back() * v);
    }
    for (int n = 0; n <= order; ++n)
        for (int b = 0; b <= n; ++b) {
            const double c = inner.get(n - b, b);
            if (c != 0.0) r = r + pu[(std::size_t)(n - b)] * pv[(std::size_t)b] * c;
        }
    return r;
}

double SumEnvelope::eval(Vec2 x) const {
    double s = 0.0;
    for (const auto& t : terms_) s += t->eval(x);
    return s;
}
Jet2 SumEnvelope::jet(Vec2 x, int order) const {
    Jet2 r = Jet2::constant(0.0, order);
    for (const auto& t : terms_) r = r + t->jet(x, order);
    return r;
}
double SumEnvelope::support_radius() const {
    double r = 0.0;
    for (const auto& t : terms_) r = std::max(r, t->support_radius());
    return r;
}
Parity SumEnvelope::parity() const {
    if (terms_.empty()) return Parity::kEven;
    Parity p = terms_[0]->parity();
    for (const auto& t : terms_) p = parity_sum(p, t->parity());
    return p;
}

Parity PolyEnvelope::parity() const {
    const bool odd = p_.is_odd();
    if (odd) return Parity::kOdd;
    bool even = true;
    for (int n = 1; n <= p_.degree(); n += 2)
        for (int j = 0; j <= n; ++j)
            if (p_.coeff(n - j, j) != 0.0) even = false;
    return even ? Parity::kEven : Parity::kNone;
}

double TrigPolyEnvelope::eval(Vec2 x) const {
    const double v = p_.eval(x);
    return sin_ ? std::sin(v) : std::cos(v);
}
Jet2 TrigPolyEnvelope::jet(Vec2 x, int order) const {
    Jet2 pj = p_.jet(x, order);
    Jet2 s(order), c(order);
    jet_sincos(pj, s, c);
    return sin_ ? s : c;
}
Parity TrigPolyEnvelope::parity() const {
    if (!p_.is_odd()) return Parity::kNone;
    return sin_ ? Parity::kOdd : Parity::kEven;
}

Jet2 DerivativeEnvelope::jet(Vec2 x, int order) const {
    // Jet of the derivative from a deeper jet of the base.
    Jet2 deep = base_->jet(x, order + a_ + b_);
    Jet2 r(order);
    for (int n = 0; n <= order; ++n)
        for (int b = 0; b <= n; ++b) {
            const int a = n - b;
            // Taylor coefficient of d^{a_,b_}f at offset (a,b):
            // t'_{a,b} = t_{a+a_, b+b_} * C(a+a_, a_) ... expressed through raw
            // coefficients: t'_{a,b} = t_{a+a_,b+b_} * (a+a_)!/(a!) * (b+b_)!/(b!) / (a_! b_!)
            double f = deep.get(a + a_, b + b_);
            if (f == 0.0) {
                r.set(a, b, 0.0);
                continue;
            }
            for (int q = 1; q <= a_; ++q) f *= (double)(a + q);
            for (int q = 1; q <= b_; ++q) f *= (double)(b + q);
            r.set(a, b, f);
        }
    return r;
}

EnvelopePtr make_bump(double radius, TransitionProfile profile) {
    return std::make_shared<BumpEnvelope>(radius, profile);
}
EnvelopePtr make_const(double v) { return std::make_shared<ConstEnvelope>(v); }
EnvelopePtr env_sum(EnvelopePtr a, EnvelopePtr b) {
    return std::make_shared<SumEnvelope>(std::vector<EnvelopePtr>{std::move(a), std::move(b)});
}
EnvelopePtr env_product(EnvelopePtr a, EnvelopePtr b) {
    return std::make_shared<ProductEnvelope>(std::move(a), std::move(b));
}
EnvelopePtr env_scale(EnvelopePtr a, double s) {
    return std::make_shared<ScaledEnvelope>(std::move(a), s);
}
EnvelopePtr env_affine(EnvelopePtr a, const Mat2& A) {
    return std::make_shared<AffineEnvelope>(std::move(a), A);
}
EnvelopePtr env_poly(const BivariatePoly& p) { return std::make_shared<PolyEnvelope>(p); }
EnvelopePtr env_trig(const BivariatePoly& p, bool is_sin) {
    return std::make_shared<TrigPolyEnvelope>(p, is_sin);
}
EnvelopePtr env_derivative(EnvelopePtr a, int dx1, int dx2) {
    return std::make_shared<DerivativeEnvelope>(std::move(a), dx1, dx2);
}

// ---------- plane waves & sampling ----------

PlaneWave::PlaneWave(EnvelopePtr envelope, double N, double a, double b, double theta0)
    : envelope(std::move(envelope)), N(N), a(a), b(b), theta0(theta0) {
    if (std::fabs(a * a + b * b - 1.0) > 1e-12)
        throw std::invalid_argument("PlaneWave: direction must be a unit vector");
    if (!(N > 0.0)) throw std::invalid_argument("PlaneWave: frequency must be positive");
    if (this->envelope->support_radius() > 1.0 + 1e-12)
        throw std::invalid_argument("PlaneWave: envelope support must fit in the unit ball");
}

double PlaneWave::eval(Vec2 x) const {
    return envelope->eval(x) * std::sin(N * (b * x.x + a * x.y) + theta0);
}

Parity PlaneWave::parity() const {
    // f(x) sin(N z + theta0): odd when f is even and theta0 = 0 mod pi.
    if (envelope->parity() == Parity::kEven && std::fabs(std::remainder(theta0, M_PI)) < 1e-14)
        return Parity::kOdd;
    if (envelope->parity() == Parity::kOdd && std::fabs(std::remainder(theta0 - M_PI / 2, M_PI)) < 1e-14)
        return Parity::kOdd;
    return Parity::kNone;
}

static void check_sampling(double max_freq, int n, double L, const char* what) {
    const double limit = M_PI * (double)n / (8.0 * L);
    if (max_freq > limit)
        throw ResolutionError(std::string(what) +
                              ": frequency " + std::to_string(max_freq) +
                              " exceeds 8-points-per-wavelength limit " + std::to_string(limit));
}

GridField sample(const PlaneWave& w, int n, double L) {
    check_sampling(w.N, n, L, "sample(PlaneWave)");
    GridField g = GridField::sample_function(n, L, [&](Vec2 x) { return w.eval(x); });
    g.set_odd_flag(w.parity() == Parity::kOdd);
    return g;
}

GridField sample(const BivariatePoly& p, int n, double L) {
    GridField g = GridField::sample_function(n, L, [&](Vec2 x) { return p.eval(x); });
    g.set_odd_flag(p.is_odd());
    return g;
}

BivariatePoly fit_poly(const GridField& g, int M) {
    // Least-squares fit of a degree-M polynomial on the full grid; monomials
    // scaled by L so the normal equations stay well conditioned.
    const int n = g.n();
    const double L = g.L();
    const int nb = (M + 1) * (M + 2) / 2;
    std::vector<double> ata((std::size_t)nb * (std::size_t)nb, 0.0), atb((std::size_t)nb, 0.0);
    std::vector<double> basis((std::size_t)nb);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Vec2 x = g.point(i, j);
            const double u = x.x / L, v = x.y / L;
            int k = 0;
            for (int tot = 0; tot <= M; ++tot)
                for (int jj = 0; jj <= tot; ++jj) {
                    basis[(std::size_t)k++] = std::pow(u, tot - jj) * std::pow(v, jj);
                }
            const double y = g.at(i, j);
            for (int r = 0; r < nb; ++r) {
                atb[(std::size_t)r] += basis[(std::size_t)r] * y;
                for (int c = r; c < nb; ++c)
                    ata[(std::size_t)r * (std::size_t)nb + (std::size_t)c] +=
                        basis[(std::size_t)r] * basis[(std::size_t)c];
            }
        }
    for (int r = 0; r < nb; ++r)
        for (int c = 0; c < r; ++c)
            ata[(std::size_t)r * (std::size_t)nb + (std::size_t)c] =
                ata[(std::size_t)c * (std::size_t)nb + (std::size_t)r];
    // Gaussian elimination with partial pivoting.
    for (int col = 0; col < nb; ++col) {
        int piv = col;
        for (int r = col + 1; r < nb; ++r)
            if (std::fabs(ata[(std::size_t)r * (std::size_t)nb + (std::size_t)col]) >
                std::fabs(ata[(std::size_t)piv * (std::size_t)nb + (std::size_t)col]))
                piv = r;
        if (piv != col) {
            for (int c = 0; c < nb; ++c)
                std::swap(ata[(std::size_t)piv * (std::size_t)nb + (std::size_t)c],
                          ata[(std::size_t)col * (std::size_t)nb + (std::size_t)c]);
            std::swap(atb[(std::size_t)piv], atb[(std::size_t)col]);
        }
        const double d = ata[(std::size_t)col * (std::size_t)nb + (std::size_t)col];
        if (std::fabs(d) < 1e-300) throw std::runtime_error("fit_poly: singular normal equations");
        for (int r = col + 1; r < nb; ++r) {
            const double f = ata[(std::size_t)r * (std::size_t)nb + (std::size_t)col] / d;
            if (f == 0.0) continue;
            for (int c = col; c < nb; ++c)
                ata[(std::size_t)r * (std::size_t)nb + (std::size_t)c] -=
                    f * ata[(std::size_t)col * (std::size_t)nb + (std::size_t)c];
            atb[(std::size_t)r] -= f * atb[(std::size_t)col];
        }
    }
    std::vector<double> sol((std::size_t)nb, 0.0);
    for (int r = nb - 1; r >= 0; --r) {
        double s = atb[(std::size_t)r];
        for (int c = r + 1; c < nb; ++c)
            s -= ata[(std::size_t)r * (std::size_t)nb + (std::size_t)c] * sol[(std::size_t)c];
        sol[(std::size_t)r] = s / ata[(std::size_t)r * (std::size_t)nb + (std::size_t)r];
    }
    BivariatePoly p(M);
    int k = 0;
    for (int tot = 0; tot <= M; ++tot)
        for (int jj = 0; jj <= tot; ++jj) {
            // undo the L-scaling of the basis
            p.set_coeff(tot - jj, jj, sol[(std::size_t)k++] / std::pow(L, tot));
        }
    return p;
}

}  // namespace ipm
