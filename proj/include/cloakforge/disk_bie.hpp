#pragma once

#include <complex>

#include "cloakforge/errors.hpp"
#include "cloakforge/layered.hpp"

namespace cloakforge::bie {

using complexd = std::complex<double>;

/// Single penetrable disk for the boundary-integral verification path.
struct DiskScatterer {
    double radius = 1.0;
    layered::Material inside{1.0, 1.0};
    layered::Material outside{1.0, 1.0};
    double omega = 1.0;
};

/// Angular-mode value of the single-layer potential with density e^{im theta}
/// on the circle of the given radius: the returned factor multiplies
/// e^{im theta_x} at field radius r (either side of the circle).
complexd single_layer_mode(double k, double circle_radius, int m, double r);

/// One-sided normal derivatives of the same potential on the circle.
complexd single_layer_mode_deriv_outside(double k, double circle_radius, int m);
complexd single_layer_mode_deriv_inside(double k, double circle_radius, int m);

/// Fourier coefficients of the transmission-system densities for the
/// incident field J_m(k0 |x|) e^{im theta}.
struct ModeDensities {
    complexd phi;
    complexd psi;
};

ModeDensities mode_densities(const DiskScatterer& d, int m);

/// W_{nm} from the defining boundary integral, evaluated in closed form on
/// the circle: exactly zero off the diagonal.
complexd scattering_coefficient_bie(const DiskScatterer& d, int n, int m);

}  // namespace cloakforge::bie
