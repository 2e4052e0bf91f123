#include "phiheat/geometry.hpp"

#include <algorithm>

namespace phiheat {

ManifoldModel make_model(ModelKind kind, double x_min, double x_max) {
    ManifoldModel m;
    m.kind = kind;
    m.chart.b = 1;
    m.chart.f = (kind == ModelKind::B) ? 1 : 0;
    m.chart.x_min = x_min;
    m.chart.x_max = x_max;
    m.chart.validate();
    return m;
}

void check_in_chart(const ManifoldModel& m, const Point& p) {
    if (!(p.x >= m.chart.x_min && p.x <= m.chart.x_max))
        throw std::domain_error("point outside chart: x=" + std::to_string(p.x));
}

std::vector<double> metric_tensor_at(const ManifoldModel& m, const Point& p) {
    check_in_chart(m, p);
    std::vector<double> d;
    d.push_back(PhiMetric::g_xx(p.x));
    for (int i = 0; i < m.chart.b; ++i) d.push_back(PhiMetric::g_yy(p.x));
    for (int i = 0; i < m.chart.f; ++i) d.push_back(PhiMetric::g_zz(p.x));
    return d;
}

std::vector<std::array<double, 3>> phi_frame_at(const ManifoldModel& m, const Point& p) {
    check_in_chart(m, p);
    std::vector<std::array<double, 3>> frame;
    frame.push_back({p.x * p.x, 0.0, 0.0});
    for (int i = 0; i < m.chart.b; ++i) frame.push_back({0.0, p.x, 0.0});
    for (int i = 0; i < m.chart.f; ++i) frame.push_back({0.0, 0.0, 1.0});
    return frame;
}

double phi_distance(const ManifoldModel& m, const Point& p, const Point& q, double q_exp) {
    if (q_exp < 1.0) throw std::invalid_argument("phi_distance: q must be >= 1");
    check_in_chart(m, p);
    check_in_chart(m, q);
    double tx = std::abs(p.x - q.x);
    double s = p.x + q.x;
    double dy = (m.chart.b > 0) ? std::abs(periodic_diff(p.y, q.y)) : 0.0;
    double dz = (m.chart.f > 0) ? std::abs(periodic_diff(p.z, q.z)) : 0.0;
    double ty = s * dy;
    double tz = s * s * dz;
    if (std::isinf(q_exp)) return std::max({tx, ty, tz});
    if (q_exp == 2.0) return std::hypot(tx, ty, tz);
    if (q_exp == 1.0) return tx + ty + tz;
    double acc = std::pow(tx, q_exp) + std::pow(ty, q_exp) + std::pow(tz, q_exp);
    return std::pow(acc, 1.0 / q_exp);
}

double volume_density(const ManifoldModel& m, const Point& p) {
    check_in_chart(m, p);
    double det = PhiMetric::g_xx(p.x);
    for (int i = 0; i < m.chart.b; ++i) det *= PhiMetric::g_yy(p.x);
    for (int i = 0; i < m.chart.f; ++i) det *= PhiMetric::g_zz(p.x);
    return std::sqrt(det);
}

Point to_inverted_coords(const Point& p) {
    if (!(p.x > 0.0)) throw std::domain_error("to_inverted_coords: x must be positive");
    return Point{1.0 / p.x, p.y, p.z};
}

Point from_inverted_coords(const Point& p) {
    if (!(p.x > 0.0)) throw std::domain_error("from_inverted_coords: r must be positive");
    return Point{1.0 / p.x, p.y, p.z};
}

Grid::Grid(const ManifoldModel& m, int nx_, int ny_, int nz_) : model(m), nx(nx_), ny(ny_), nz(nz_) {
    if (nx < 2 || ny < 1 || nz < 1) throw std::invalid_argument("grid: bad resolution");
    if (m.chart.f == 0 && nz != 1) throw std::invalid_argument("grid: nz must be 1 when f = 0");
    hx = (m.chart.x_max - m.chart.x_min) / nx;
    hy = 2.0 * M_PI / ny;
    hz = (m.chart.f > 0) ? 2.0 * M_PI / nz : 1.0;
    xc.resize(nx);
    for (int i = 0; i < nx; ++i) xc[i] = m.chart.x_min + (i + 0.5) * hx;
    yc.resize(ny);
    for (int j = 0; j < ny; ++j) yc[j] = j * hy;
    zc.resize(nz);
    for (int k = 0; k < nz; ++k) zc[k] = (m.chart.f > 0) ? k * hz : 0.0;
}

double Grid::cell_volume(int i) const {
    return volume_density(model, Point{xc[i], 0.0, 0.0}) * hx * hy * hz;
}

}  // namespace phiheat
