#include "cloakforge/disk_bie.hpp"

#include <algorithm>
#include <cmath>

#include "cloakforge/specfun.hpp"

namespace cloakforge::bie {

namespace {

constexpr complexd kI(0.0, 1.0);

double wavenumber(const layered::Material& m, double omega) {
    return omega * std::sqrt(m.mu * m.eps);
}

void check(const DiskScatterer& d) {
    if (!(d.radius > 0.0) || !(d.omega > 0.0) || !(d.inside.mu > 0.0) ||
        !(d.inside.eps > 0.0) || !(d.outside.mu > 0.0) || !(d.outside.eps > 0.0))
        throw std::invalid_argument("DiskScatterer: all parameters must be positive");
}

}  // namespace

complexd single_layer_mode(double k, double R, int m, double r) {
    // Radiating kernel expanded on the circle: the mode integral picks
    // J_m at the smaller radius and H_m at the larger one.
    const double lo = std::min(r, R), hi = std::max(r, R);
    return -kI * (M_PI * R / 2.0) * specfun::bessel_j(m, k * lo) * specfun::hankel1(m, k * hi);
}

complexd single_layer_mode_deriv_outside(double k, double R, int m) {
    return -kI * (M_PI * R / 2.0) * k * specfun::bessel_j(m, k * R) * specfun::hankel1p(m, k * R);
}

complexd single_layer_mode_deriv_inside(double k, double R, int m) {
    return -kI * (M_PI * R / 2.0) * k * specfun::bessel_jp(m, k * R) * specfun::hankel1(m, k * R);
}

ModeDensities mode_densities(const DiskScatterer& d, int m) {
    check(d);
    const double k = wavenumber(d.inside, d.omega);
    const double k0 = wavenumber(d.outside, d.omega);
    const double R = d.radius;

    // Value continuity and (1/mu)-weighted flux continuity on the circle,
    // for the representation  u = S^k[phi] inside,  U + S^{k0}[psi] outside.
    const complexd a11 = single_layer_mode(k, R, m, R);
    const complexd a12 = -single_layer_mode(k0, R, m, R);
    const complexd a21 = single_layer_mode_deriv_inside(k, R, m) / d.inside.mu;
    const complexd a22 = -single_layer_mode_deriv_outside(k0, R, m) / d.outside.mu;
    const complexd b1 = specfun::bessel_j(m, k0 * R);
    const complexd b2 = k0 * specfun::bessel_jp(m, k0 * R) / d.outside.mu;

    const complexd det = a11 * a22 - a12 * a21;
    // Frobenius-based conditioning of the 2x2 system.
    const double nrm = std::sqrt(std::norm(a11) + std::norm(a12) + std::norm(a21) +
                                 std::norm(a22));
    if (std::abs(det) == 0.0 || nrm * nrm / std::abs(det) > 1e12)
        throw NearResonanceError("mode_densities: mode system is numerically singular");

    return {(b1 * a22 - a12 * b2) / det, (a11 * b2 - b1 * a21) / det};
}

complexd scattering_coefficient_bie(const DiskScatterer& d, int n, int m) {
    check(d);
    if (n != m) return complexd(0.0);  // Fourier orthogonality on the circle
    const double k0 = wavenumber(d.outside, d.omega);
    const ModeDensities md = mode_densities(d, m);
    return 2.0 * M_PI * d.radius * specfun::bessel_j(n, k0 * d.radius) * md.psi;
}

}  // namespace cloakforge::bie
