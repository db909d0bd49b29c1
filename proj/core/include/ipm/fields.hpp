#pragma once

#include "ipm/envelope.hpp"
#include "ipm/grid_field.hpp"

namespace ipm {

// w(x) = f(x) sin(N (b x1 + a x2) + theta0), (a,b) a unit vector, f supported
// in the unit ball.
struct PlaneWave {
    EnvelopePtr envelope;
    double N;
    double a, b;
    double theta0;

    PlaneWave(EnvelopePtr envelope, double N, double a, double b, double theta0 = 0.0);

    double eval(Vec2 x) const;
    double phase(Vec2 x) const { return N * (b * x.x + a * x.y) + theta0; }
    Parity parity() const;
};

GridField sample(const PlaneWave& w, int n, double L);
GridField sample(const BivariatePoly& p, int n, double L);

// Least-squares polynomial fit on the grid (degree M).
BivariatePoly fit_poly(const GridField& g, int M);

}  // namespace ipm
