#pragma once

#include <vector>

#include "cloakforge/errors.hpp"
#include "cloakforge/layered.hpp"

namespace cloakforge::txoptics {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
    double norm() const;
};

/// Symmetric 2x2 real matrix (row-major).
struct Mat2 {
    double a11 = 0.0, a12 = 0.0, a21 = 0.0, a22 = 0.0;
    double det() const { return a11 * a22 - a12 * a21; }
};

/// Piecewise-radial blow-up: maps the disk of radius rho onto the unit disk,
/// fixes everything outside radius 2, and interpolates linearly on the two
/// annuli in between (breakpoints rho, 2*rho, 2).  rho is restricted to
/// (0, 1/2] so the branches stay ordered.
class RadialMap {
public:
    explicit RadialMap(double rho);

    double rho() const { return rho_; }

    /// Scalar radial profile f with f(rho)=1, f(2*rho)=3/2, f(r)=r for r>=2.
    double forward_radius(double r) const;
    /// Inverse profile; defined for f >= 1 (OutsideImageError below).
    double inverse_radius(double fr) const;
    /// One-sided derivative, taken from the outer branch at breakpoints.
    double derivative(double r) const;

    Vec2 map_forward(Vec2 p) const;
    Vec2 map_inverse(Vec2 q) const;

    /// DF = f'(r) rhat rhat^T + (f(r)/r) (I - rhat rhat^T); SingularPointError
    /// at the origin.
    Mat2 jacobian(Vec2 p) const;

private:
    double rho_;
};

/// Pushed-forward material tensors at one point of the device region:
/// A_push = DF A DF^T / det DF for the isotropic A = 1/mu of the
/// rho-scaled structure, and q_push = eps / det DF.
struct TensorFieldSample {
    double radius = 0.0;  // |y|
    double angle = 0.0;   // atan2 angle of y
    Mat2 a_push;
    double q_push = 0.0;
};

/// Evaluates the push-forward of the rho-scaled structure at y (|y| >= 1).
TensorFieldSample push_forward(const RadialMap& map, const layered::LayeredStructure& s,
                               Vec2 y);

/// Polar-grid evaluation at the given radii and angles, radius-major order.
std::vector<TensorFieldSample> sample_grid(const RadialMap& map,
                                           const layered::LayeredStructure& s,
                                           const std::vector<double>& radii,
                                           const std::vector<double>& angles);

}  // namespace cloakforge::txoptics
