#include "cloakforge/specfun.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <stdexcept>

namespace cloakforge::specfun {

namespace {

// boost::math policy: propagate errors as exceptions with the default
// promotion (double evaluated internally in long double).
template <typename T>
T sign_for(int n) {
    return (n % 2 == 0) ? T(1) : T(-1);
}

template <typename T>
T bessel_j_impl(int n, T t) {
    if (!std::isfinite(t) || t < T(0))
        throw std::invalid_argument("bessel_j: argument must be finite and non-negative");
    const int m = n < 0 ? -n : n;
    if (t == T(0)) return m == 0 ? T(1) : T(0);
    const T v = boost::math::cyl_bessel_j(m, t);
    return n < 0 ? sign_for<T>(m) * v : v;
}

template <typename T>
T bessel_y_impl(int n, T t) {
    if (!std::isfinite(t))
        throw std::invalid_argument("bessel_y: argument must be finite");
    if (t <= T(0)) throw std::domain_error("bessel_y: argument must be positive");
    const int m = n < 0 ? -n : n;
    const T v = boost::math::cyl_neumann(m, t);
    return n < 0 ? sign_for<T>(m) * v : v;
}

template <typename T>
T bessel_jp_impl(int n, T t) {
    if (n == 0) return -bessel_j_impl(1, t);
    if (t == T(0)) {
        // J_n'(0): +-1/2 for |n| = 1, else 0.
        if (n == 1) return T(0.5);
        if (n == -1) return T(-0.5);
        return T(0);
    }
    return bessel_j_impl(n - 1, t) - (T(n) / t) * bessel_j_impl(n, t);
}

template <typename T>
T bessel_yp_impl(int n, T t) {
    if (n == 0) return -bessel_y_impl(1, t);
    return bessel_y_impl(n - 1, t) - (T(n) / t) * bessel_y_impl(n, t);
}

}  // namespace

double bessel_j(int n, double t) { return bessel_j_impl(n, t); }
double bessel_y(int n, double t) { return bessel_y_impl(n, t); }
double bessel_jp(int n, double t) { return bessel_jp_impl(n, t); }
double bessel_yp(int n, double t) { return bessel_yp_impl(n, t); }

long double bessel_j(int n, long double t) { return bessel_j_impl(n, t); }
long double bessel_y(int n, long double t) { return bessel_y_impl(n, t); }
long double bessel_jp(int n, long double t) { return bessel_jp_impl(n, t); }
long double bessel_yp(int n, long double t) { return bessel_yp_impl(n, t); }

std::complex<double> hankel1(int n, double t) {
    return {bessel_j(n, t), bessel_y(n, t)};
}

std::complex<double> hankel1p(int n, double t) {
    return {bessel_jp(n, t), bessel_yp(n, t)};
}

CylFunValue cyl_values(int n, double t) {
    return {n, t, bessel_j(n, t), bessel_y(n, t), bessel_jp(n, t), bessel_yp(n, t)};
}

}  // namespace cloakforge::specfun
