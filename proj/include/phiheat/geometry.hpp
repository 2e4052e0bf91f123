#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace phiheat {

// Point in collar coordinates (x, y, z). Unused slots are 0.
struct Point {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

struct FiberedBoundaryChart {
    int b = 1;            // dim of the base Y
    int f = 0;            // dim of the fiber Z
    double x_min = 1.0 / 64.0;
    double x_max = 1.0;

    int dim() const { return b + f + 1; }
    void validate() const {
        if (b < 0 || f < 0) throw std::invalid_argument("chart: b, f must be >= 0");
        if (!(0.0 < x_min && x_min < x_max && x_max <= 1.0))
            throw std::invalid_argument("chart: need 0 < x_min < x_max <= 1");
    }
};

enum class ModelKind { A, B };

// Built-in model metrics are diagonal: g = diag(1/x^4, 1/x^2 (base), 1 (fiber)).
struct PhiMetric {
    bool h_is_zero = true;
    static double g_xx(double x) { return 1.0 / (x * x * x * x); }
    static double g_yy(double x) { return 1.0 / (x * x); }
    static double g_zz(double) { return 1.0; }
    static double inv_xx(double x) { return x * x * x * x; }
    static double inv_yy(double x) { return x * x; }
    static double inv_zz(double) { return 1.0; }
};

struct ManifoldModel {
    ModelKind kind = ModelKind::A;
    FiberedBoundaryChart chart;
    PhiMetric metric;
    bool has_oracle = true;

    std::string name() const { return kind == ModelKind::A ? "A" : "B"; }
};

ManifoldModel make_model(ModelKind kind, double x_min = 1.0 / 64.0, double x_max = 1.0);

// Shortest-arc difference on [0, 2pi).
inline double periodic_diff(double a, double b) {
    double d = std::fmod(a - b, 2.0 * M_PI);
    if (d < -M_PI) d += 2.0 * M_PI;
    if (d > M_PI) d -= 2.0 * M_PI;
    return d;
}

void check_in_chart(const ManifoldModel& m, const Point& p);

// Coordinate components of g_Phi at p, as the diagonal (built-in models have h = 0).
std::vector<double> metric_tensor_at(const ManifoldModel& m, const Point& p);

// Phi-frame x^2 d_x, x d_y, d_z as coordinate coefficient vectors; unit g_Phi-norm.
std::vector<std::array<double, 3>> phi_frame_at(const ManifoldModel& m, const Point& p);

// Quasi-distance d_{q,Phi}; q in [1, inf], pass q = infinity() for the max form.
double phi_distance(const ManifoldModel& m, const Point& p, const Point& q, double q_exp);

double volume_density(const ManifoldModel& m, const Point& p);

Point to_inverted_coords(const Point& p);
Point from_inverted_coords(const Point& p);

// Tensor grid over the truncated collar chart. Cell-centered in x, uniform
// periodic nodes in y and z. x-major layout so per-x metric arrays broadcast.
struct Grid {
    ManifoldModel model;
    int nx = 0, ny = 0, nz = 0;
    double hx = 0, hy = 0, hz = 0;
    std::vector<double> xc;  // cell centers
    std::vector<double> yc;
    std::vector<double> zc;

    Grid() = default;
    Grid(const ManifoldModel& m, int nx_, int ny_, int nz_);

    int n_space() const { return nx * ny * nz; }
    int idx(int i, int j, int k) const { return (i * ny + j) * nz + k; }
    Point point(int s) const {
        int k = s % nz, j = (s / nz) % ny, i = s / (ny * nz);
        return Point{xc[i], yc[j], zc[k]};
    }
    int xindex(int s) const { return s / (ny * nz); }
    // dvol_Phi of one cell: rho(x) * hx * hy * hz.
    double cell_volume(int i) const;
};

}  // namespace phiheat
