#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phiheat/field.hpp"
#include "phiheat/geometry.hpp"
#include "phiheat/norms.hpp"

namespace phiheat {

// C^2 cutoff profile: 1 on [0,1/2], quintic transition, 0 on [1,inf).
double sigma(double s);
double sigma_prime(double s);

// Coordinate half-widths of the anchor chart windows. The paper defines each
// bump inside a boundary chart and extends by zero; on the periodic model
// chart the window is realized as a smooth factor so supports keep the
// half-cube diameter bound while staying C^2.
inline constexpr double kChartHalfWidthY = 0.75;
inline constexpr double kChartHalfWidthZ = 0.5;

struct PartitionConfig {
    double eps = 0.125;
    double vartheta = 0.0625;  // anchor lattice spacing; default eps/2

    void validate() const {
        if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("partition: eps in (0,1)");
        if (!(vartheta > 0.0 && vartheta < 1.0))
            throw std::invalid_argument("partition: vartheta in (0,1)");
    }
};

struct Anchor {
    double ybar = 0.0;
    double zbar = 0.0;
};

// Raw bump pair at one anchor, the sigma products of Prop 4.4 restricted to
// the anchor chart; psi-hat halves every argument so psi-hat = 1 on supp(phi-hat).
double raw_phi_at(const ManifoldModel& m, const Anchor& a, double eps, const Point& p);
double raw_psi_at(const ManifoldModel& m, const Anchor& a, double eps, const Point& p);

struct BumpFamily {
    const Grid* grid = nullptr;
    PartitionConfig config;
    std::vector<Anchor> anchors;

    Field sum_raw_phi;  // Sum phi-hat over anchors
    Field sum_raw_psi;
    Field denom;        // max(Sum phi-hat, 1): keeps the normalized family C^2 at the outer fringe
    Field denom_psi;
    Field phi_total;    // Sum of normalized phi; 1 on the sub-collar, smooth decay to 0

    // Support index box of one anchor (x cells below eps, periodic windows in y, z).
    struct Box {
        int i_end = 0;
        int j0 = 0, jn = 0;
        int k0 = 0, kn = 0;
    };
    std::vector<Box> boxes;

    double raw_phi(int a, const Point& p) const { return raw_phi_at(grid->model, anchors[a], config.eps, p); }
    double raw_psi(int a, const Point& p) const { return raw_psi_at(grid->model, anchors[a], config.eps, p); }
    double normalized_phi(int a, int s) const {
        double d = denom[s];
        return d > 0.0 ? raw_phi(a, grid->point(s)) / d : 0.0;
    }
    double normalized_psi(int a, int s) const {
        double d = denom_psi[s];
        return d > 0.0 ? raw_psi(a, grid->point(s)) / d : 0.0;
    }

    // Visit the support box of anchor a; fn(s, i) with s the flat index.
    template <typename Fn>
    void for_each_support(int a, Fn&& fn) const {
        const Box& b = boxes[a];
        for (int i = 0; i < b.i_end; ++i)
            for (int jj = 0; jj < b.jn; ++jj) {
                int j = (b.j0 + jj) % grid->ny;
                for (int kk = 0; kk < b.kn; ++kk) {
                    int k = (b.k0 + kk) % grid->nz;
                    fn(grid->idx(i, j, k), i);
                }
            }
    }
};

// Anchor lattice phi_i(0, vartheta * Lambda) on the periodic boundary.
std::vector<Anchor> anchor_lattice(const ManifoldModel& m, double vartheta);

// Builds raw sums, checks Sum phi-hat > 0 on the sub-collar {x <= eps/2}
// (configuration error naming the uncovered point otherwise), normalizes.
BumpFamily build_bump_family(const Grid& g, const PartitionConfig& cfg);

struct PartitionAuditRow {
    double eps = 0.0;
    int anchor_count = 0;
    int max_overlap = 0;
    double diam_max = 0.0;
    double diam_bound = 0.0;  // C-bar * eps with C-bar = max{1, 4 sqrt(b), 4 sqrt(f)}
    double seminorm = 0.0;
    double seminorm_times_eps_alpha = 0.0;
    bool property_I_ok = false;
    double sum_to_one_max_err = 0.0;
    bool k2_norm_finite = false;
    std::string witness;  // set when a check fails
};

PartitionAuditRow audit(const BumpFamily& fam, const NormSpec& spec);

}  // namespace phiheat
