#include "phiheat/norms.hpp"

#include <algorithm>
#include <cmath>

#include "phiheat/util.hpp"

namespace phiheat {

double sup_norm(const SpaceTimeField& u) {
    if (u.v.empty()) throw std::invalid_argument("sup_norm: empty field");
    return sup_abs(u);
}

namespace {

int wrap(int j, int n) { return ((j % n) + n) % n; }

struct PairSampler {
    const Grid& g;
    int nt;
    Rng rng;
    long counter = 0;

    PairSampler(const Grid& g_, int nt_) : g(g_), nt(nt_), rng(stream_seed(0x70616972ULL, uint64_t(g_.n_space()) * 31 + nt_)) {}

    PairRef next() {
        PairRef p;
        bool near = (counter++ % 2) == 0;
        std::uniform_int_distribution<int> ds(0, g.n_space() - 1);
        std::uniform_int_distribution<int> dn(0, nt - 1);
        p.s = ds(rng);
        p.n = dn(rng);
        if (near) {
            std::uniform_int_distribution<int> off(-4, 4);
            int k = p.s % g.nz, j = (p.s / g.nz) % g.ny, i = p.s / (g.ny * g.nz);
            int i2 = std::clamp(i + off(rng), 0, g.nx - 1);
            int j2 = wrap(j + off(rng), g.ny);
            int k2 = g.nz > 1 ? wrap(k + off(rng), g.nz) : 0;
            p.s2 = g.idx(i2, j2, k2);
            p.n2 = std::clamp(p.n + off(rng), 0, nt - 1);
        } else {
            p.s2 = ds(rng);
            p.n2 = dn(rng);
        }
        return p;
    }
};

double pair_quotient(const Grid& g, const SpaceTimeField& u, const NormSpec& spec, const PairRef& p) {
    if (p.s == p.s2 && p.n == p.n2) return 0.0;
    double num = std::abs(u.at(p.n, p.s) - u.at(p.n2, p.s2));
    double dsp = (p.s == p.s2) ? 0.0 : phi_distance(g.model, g.point(p.s), g.point(p.s2), 2.0);
    double dt = std::abs(u.t(p.n) - u.t(p.n2));
    double den = std::pow(dsp, spec.alpha) + std::pow(dt, spec.alpha * 0.5);
    if (den == 0.0) return 0.0;
    return num / den;
}

}  // namespace

double alpha_seminorm(const Grid& g, const SpaceTimeField& u, const NormSpec& spec, PairRef* argmax) {
    spec.validate();
    if (u.v.empty()) return 0.0;
    double best = 0.0;
    PairRef best_pair;
    auto consider = [&](const PairRef& p) {
        double q = pair_quotient(g, u, spec, p);
        if (q > best) { best = q; best_pair = p; }
    };
    // Deterministic same-point pairs at the time endpoints; these attain the
    // closed-form suprema for purely temporal fields.
    if (u.nt >= 2) {
        int stride = std::max(1, u.nsp / 256);
        for (int s = 0; s < u.nsp; s += stride) consider(PairRef{s, 0, s, u.nt - 1});
    }
    PairSampler sampler(g, u.nt);
    for (int i = 0; i < spec.pair_budget; ++i) consider(sampler.next());
    if (argmax) *argmax = best_pair;
    return best;
}

SpaceTimeField phi_derivative(const Grid& g, const SpaceTimeField& u, int dir) {
    int m = g.model.chart.dim();
    if (dir < 0 || dir >= m) throw std::invalid_argument("phi_derivative: bad direction");
    SpaceTimeField out = u;
    bool is_x = dir == 0;
    bool is_y = !is_x && dir <= g.model.chart.b;
    for (int n = 0; n < u.nt; ++n) {
        auto src = u.slice(n);
        auto dst = out.slice(n);
        for (int i = 0; i < g.nx; ++i) {
            double x = g.xc[i];
            double w = is_x ? x * x : (is_y ? x : 1.0);
            for (int j = 0; j < g.ny; ++j) {
                for (int k = 0; k < g.nz; ++k) {
                    int s = g.idx(i, j, k);
                    double d;
                    if (is_x) {
                        if (i == 0)
                            d = (-3.0 * src[s] + 4.0 * src[g.idx(1, j, k)] - src[g.idx(2, j, k)]) / (2.0 * g.hx);
                        else if (i == g.nx - 1)
                            d = (3.0 * src[s] - 4.0 * src[g.idx(i - 1, j, k)] + src[g.idx(i - 2, j, k)]) / (2.0 * g.hx);
                        else
                            d = (src[g.idx(i + 1, j, k)] - src[g.idx(i - 1, j, k)]) / (2.0 * g.hx);
                    } else if (is_y) {
                        d = (src[g.idx(i, wrap(j + 1, g.ny), k)] - src[g.idx(i, wrap(j - 1, g.ny), k)]) / (2.0 * g.hy);
                    } else {
                        d = (src[g.idx(i, j, wrap(k + 1, g.nz))] - src[g.idx(i, j, wrap(k - 1, g.nz))]) / (2.0 * g.hz);
                    }
                    dst[s] = w * d;
                }
            }
        }
    }
    return out;
}

SpaceTimeField time_derivative(const SpaceTimeField& u) {
    if (u.nt < 3) throw std::invalid_argument("time_derivative: need >= 3 slices");
    SpaceTimeField out = u;
    for (int s = 0; s < u.nsp; ++s) {
        out.at(0, s) = (-3.0 * u.at(0, s) + 4.0 * u.at(1, s) - u.at(2, s)) / (2.0 * u.ht);
        out.at(u.nt - 1, s) =
            (3.0 * u.at(u.nt - 1, s) - 4.0 * u.at(u.nt - 2, s) + u.at(u.nt - 3, s)) / (2.0 * u.ht);
        for (int n = 1; n < u.nt - 1; ++n)
            out.at(n, s) = (u.at(n + 1, s) - u.at(n - 1, s)) / (2.0 * u.ht);
    }
    return out;
}

HolderReport k_alpha_norm(const Grid& g, const SpaceTimeField& u, const NormSpec& spec) {
    spec.validate();
    SpaceTimeField w = u;
    if (spec.gamma != 0.0) {
        for (int n = 0; n < w.nt; ++n) {
            auto sl = w.slice(n);
            for (int s = 0; s < w.nsp; ++s) sl[s] /= std::pow(g.point(s).x, spec.gamma);
        }
    }
    HolderReport rep;
    rep.sup_norm = sup_norm(w);
    rep.alpha_seminorm = alpha_seminorm(g, w, spec, &rep.argmax_pair);
    rep.total = rep.sup_norm + rep.alpha_seminorm;

    int m = g.model.chart.dim();
    std::vector<SpaceTimeField> first;
    if (spec.k >= 1) {
        for (int d = 0; d < m; ++d) {
            first.push_back(phi_derivative(g, w, d));
            rep.total += sup_norm(first.back()) + alpha_seminorm(g, first.back(), spec);
        }
    }
    if (spec.k >= 2) {
        for (int d1 = 0; d1 < m; ++d1) {
            for (int d2 = 0; d2 < m; ++d2) {
                SpaceTimeField dd = phi_derivative(g, first[d1], d2);
                rep.total += sup_norm(dd) + alpha_seminorm(g, dd, spec);
            }
        }
        SpaceTimeField dt = time_derivative(w);
        rep.total += sup_norm(dt) + alpha_seminorm(g, dt, spec);
    }
    return rep;
}

}  // namespace phiheat
