#pragma once

#include <string>

#include "ipm/envelope.hpp"

namespace ipm {

// Smooth monotone radial cutoff: 1 on [0,1/2], 0 on [1,inf).
class CutoffG {
public:
    explicit CutoffG(TransitionProfile profile = TransitionProfile::kErfc)
        : profile_(profile) {}

    double operator()(double r) const {
        if (r <= 0.5) return 1.0;
        if (r >= 1.0) return 0.0;
        return transition01(profile_, 2.0 * r - 1.0);
    }

    TransitionProfile profile() const { return profile_; }
    std::string name() const {
        switch (profile_) {
            case TransitionProfile::kExpRatio: return "exp-ratio";
            case TransitionProfile::kExpSmoothstep: return "exp-smoothstep";
            case TransitionProfile::kErfc: return "erfc";
        }
        return "?";
    }

private:
    TransitionProfile profile_;
};

}  // namespace ipm
