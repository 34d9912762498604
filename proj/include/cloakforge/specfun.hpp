#pragma once

#include <complex>

namespace cloakforge::specfun {

/// Euler-Mascheroni constant to 20 digits.
inline constexpr double euler_gamma = 0.57721566490153286061;

/// Bessel functions of integer order for real argument t >= 0 (J) or t > 0
/// (Y, H).  Negative orders are reduced through C_{-n} = (-1)^n C_n.  All
/// functions are pure and thread-safe.
double bessel_j(int n, double t);
double bessel_y(int n, double t);

/// Derivatives with respect to the argument, via C_n' = C_{n-1} - (n/t) C_n
/// (and C_0' = -C_1).
double bessel_jp(int n, double t);
double bessel_yp(int n, double t);

std::complex<double> hankel1(int n, double t);
std::complex<double> hankel1p(int n, double t);

/// Extended-precision variants, used where downstream cancellation would
/// otherwise eat the double-precision budget.
long double bessel_j(int n, long double t);
long double bessel_y(int n, long double t);
long double bessel_jp(int n, long double t);
long double bessel_yp(int n, long double t);

/// J_n, Y_n and their derivatives at a single (n, t).
struct CylFunValue {
    int order;
    double argument;
    double j;
    double y;
    double jp;
    double yp;
};

CylFunValue cyl_values(int n, double t);

}  // namespace cloakforge::specfun
