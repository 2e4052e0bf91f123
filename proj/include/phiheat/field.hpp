#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "phiheat/geometry.hpp"

namespace phiheat {

using Field = std::vector<double>;  // one time slice on a Grid

// Sampled u(p, t) on grid x uniform time axis t_n = t0 + n*ht, n = 0..nt-1.
struct SpaceTimeField {
    int nt = 0;
    int nsp = 0;
    double t0 = 0.0;
    double ht = 0.0;
    double gamma = 0.0;
    std::vector<double> v;

    SpaceTimeField() = default;
    SpaceTimeField(int nt_, int nsp_, double t0_, double ht_)
        : nt(nt_), nsp(nsp_), t0(t0_), ht(ht_), v(size_t(nt_) * nsp_, 0.0) {}

    double t(int n) const { return t0 + n * ht; }
    double T() const { return t(nt - 1); }
    double& at(int n, int s) { return v[size_t(n) * nsp + s]; }
    double at(int n, int s) const { return v[size_t(n) * nsp + s]; }
    std::span<double> slice(int n) { return {v.data() + size_t(n) * nsp, size_t(nsp)}; }
    std::span<const double> slice(int n) const { return {v.data() + size_t(n) * nsp, size_t(nsp)}; }

    bool same_layout(const SpaceTimeField& o) const {
        return nt == o.nt && nsp == o.nsp && t0 == o.t0 && ht == o.ht;
    }
};

inline SpaceTimeField make_field(const Grid& g, int nt, double ht, double t0 = 0.0) {
    return SpaceTimeField(nt, g.n_space(), t0, ht);
}

inline SpaceTimeField sample_field(const Grid& g, int nt, double ht,
                                   const std::function<double(const Point&, double)>& fn,
                                   double t0 = 0.0) {
    SpaceTimeField u = make_field(g, nt, ht, t0);
    for (int n = 0; n < nt; ++n) {
        double t = u.t(n);
        for (int s = 0; s < g.n_space(); ++s) u.at(n, s) = fn(g.point(s), t);
    }
    return u;
}

inline void axpy(SpaceTimeField& y, double a, const SpaceTimeField& x) {
    if (!y.same_layout(x)) throw std::invalid_argument("axpy: layout mismatch");
    for (size_t i = 0; i < y.v.size(); ++i) y.v[i] += a * x.v[i];
}

inline void scale(SpaceTimeField& y, double a) {
    for (double& w : y.v) w *= a;
}

inline double sup_abs(const SpaceTimeField& u) {
    double m = 0.0;
    for (double w : u.v) m = std::max(m, std::abs(w));
    return m;
}

inline double sup_abs(std::span<const double> u) {
    double m = 0.0;
    for (double w : u) m = std::max(m, std::abs(w));
    return m;
}

// dvol-weighted integral of one slice.
inline double integrate(const Grid& g, std::span<const double> u) {
    double acc = 0.0;
    for (int i = 0; i < g.nx; ++i) {
        double w = g.cell_volume(i);
        double row = 0.0;
        for (int j = 0; j < g.ny; ++j)
            for (int k = 0; k < g.nz; ++k) row += u[g.idx(i, j, k)];
        acc += w * row;
    }
    return acc;
}

}  // namespace phiheat
