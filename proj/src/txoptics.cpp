#include "cloakforge/txoptics.hpp"

#include <cmath>

namespace cloakforge::txoptics {

double Vec2::norm() const { return std::hypot(x, y); }

RadialMap::RadialMap(double rho) : rho_(rho) {
    if (!(rho > 0.0) || rho > 0.5 || !std::isfinite(rho))
        throw std::invalid_argument("RadialMap: rho must lie in (0, 1/2]");
}

double RadialMap::forward_radius(double r) const {
    if (!(r >= 0.0)) throw std::invalid_argument("forward_radius: negative radius");
    if (r >= 2.0) return r;
    if (r >= 2.0 * rho_)
        return (3.0 - 4.0 * rho_) / (2.0 * (1.0 - rho_)) + r / (4.0 * (1.0 - rho_));
    if (r >= rho_) return 0.5 + r / (2.0 * rho_);
    return r / rho_;
}

double RadialMap::inverse_radius(double fr) const {
    if (!(fr >= 1.0))
        throw OutsideImageError("inverse_radius: the device region starts at radius 1");
    if (fr >= 2.0) return fr;
    if (fr >= 1.5) return (fr - (3.0 - 4.0 * rho_) / (2.0 * (1.0 - rho_))) * 4.0 * (1.0 - rho_);
    return 2.0 * rho_ * (fr - 0.5);
}

double RadialMap::derivative(double r) const {
    if (!(r >= 0.0)) throw std::invalid_argument("derivative: negative radius");
    if (r >= 2.0) return 1.0;
    if (r >= 2.0 * rho_) return 1.0 / (4.0 * (1.0 - rho_));
    if (r >= rho_) return 1.0 / (2.0 * rho_);
    return 1.0 / rho_;
}

Vec2 RadialMap::map_forward(Vec2 p) const {
    const double r = p.norm();
    if (r == 0.0) return {0.0, 0.0};
    const double f = forward_radius(r);
    return {p.x * f / r, p.y * f / r};
}

Vec2 RadialMap::map_inverse(Vec2 q) const {
    const double fr = q.norm();
    const double r = inverse_radius(fr);
    return {q.x * r / fr, q.y * r / fr};
}

Mat2 RadialMap::jacobian(Vec2 p) const {
    const double r = p.norm();
    if (r == 0.0) throw SingularPointError("jacobian: undefined at the origin");
    const double fp = derivative(r);
    const double ft = forward_radius(r) / r;
    const double cx = p.x / r, cy = p.y / r;
    return {fp * cx * cx + ft * cy * cy, (fp - ft) * cx * cy,
            (fp - ft) * cx * cy, fp * cy * cy + ft * cx * cx};
}

TensorFieldSample push_forward(const RadialMap& map, const layered::LayeredStructure& s,
                               Vec2 y) {
    const double ry = y.norm();
    const Vec2 x = map.map_inverse(y);
    const layered::Material m = s.scaled(map.rho()).material_at(x.norm());
    const double a = 1.0 / m.mu;
    const Mat2 df = map.jacobian(x);
    const double det = df.det();
    const Mat2 ap{a * (df.a11 * df.a11 + df.a12 * df.a12) / det,
                  a * (df.a11 * df.a21 + df.a12 * df.a22) / det,
                  a * (df.a21 * df.a11 + df.a22 * df.a12) / det,
                  a * (df.a21 * df.a21 + df.a22 * df.a22) / det};
    return {ry, std::atan2(y.y, y.x), ap, m.eps / det};
}

std::vector<TensorFieldSample> sample_grid(const RadialMap& map,
                                           const layered::LayeredStructure& s,
                                           const std::vector<double>& radii,
                                           const std::vector<double>& angles) {
    if (radii.empty() || angles.empty())
        throw std::invalid_argument("sample_grid: need at least one node per direction");
    std::vector<TensorFieldSample> out;
    out.reserve(radii.size() * angles.size());
    for (double r : radii)
        for (double a : angles)
            out.push_back(push_forward(map, s, {r * std::cos(a), r * std::sin(a)}));
    return out;
}

}  // namespace cloakforge::txoptics
