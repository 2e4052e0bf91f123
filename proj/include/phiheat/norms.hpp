#pragma once

#include <string>
#include <vector>

#include "phiheat/field.hpp"
#include "phiheat/geometry.hpp"

namespace phiheat {

struct NormSpec {
    double alpha = 0.5;
    int k = 0;
    double gamma = 0.0;
    int pair_budget = 4000;

    void validate() const {
        if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("norm spec: alpha in (0,1)");
        if (pair_budget < 1000) throw std::invalid_argument("norm spec: pair_budget >= 1000");
        if (k < 0 || k > 2) throw std::invalid_argument("norm spec: k in {0,1,2}");
    }
};

struct PairRef {
    int s = 0, n = 0;   // (point, time slice)
    int s2 = 0, n2 = 0;
};

struct HolderReport {
    double sup_norm = 0.0;
    double alpha_seminorm = 0.0;
    double total = 0.0;
    PairRef argmax_pair;
};

double sup_norm(const SpaceTimeField& u);

// Sampled parabolic alpha-seminorm: sup over pairs of
// |u(p,t)-u(p',t')| / (d_{2,Phi}(p,p')^alpha + |t-t'|^{alpha/2}).
// Stratified pair stream (near-diagonal / uniform interleaved) plus
// deterministic same-point time-endpoint pairs; a lower bound estimator,
// monotone in pair_budget. The pair stream is independent of field values.
double alpha_seminorm(const Grid& g, const SpaceTimeField& u, const NormSpec& spec,
                      PairRef* argmax = nullptr);

// Finite-difference derivative along frame direction `dir`
// (0 = x^2 d_x, 1..b = x d_y, b+1..b+f = d_z), second order.
SpaceTimeField phi_derivative(const Grid& g, const SpaceTimeField& u, int dir);

SpaceTimeField time_derivative(const SpaceTimeField& u);

// Weighted parabolic Hoelder norm ||x^{-gamma} u||_{k,alpha}: sum of
// sup + seminorm over all frame words l1 and time derivatives l2, l1+2l2 <= k.
HolderReport k_alpha_norm(const Grid& g, const SpaceTimeField& u, const NormSpec& spec);

}  // namespace phiheat
