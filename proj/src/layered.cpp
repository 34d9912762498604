#include "cloakforge/layered.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cloakforge/specfun.hpp"

namespace cloakforge::layered {

namespace {

bool material_positive(const Material& m) {
    return std::isfinite(m.mu) && std::isfinite(m.eps) && m.mu > 0.0 && m.eps > 0.0;
}

}  // namespace

LayeredStructure::LayeredStructure(std::vector<double> radii, std::vector<Material> layers,
                                   Core core, Material background)
    : radii_(std::move(radii)), layers_(std::move(layers)), core_(std::move(core)),
      background_(background) {
    if (radii_.empty())
        throw std::invalid_argument("LayeredStructure: at least the core radius is required");
    if (radii_.size() != layers_.size() + 1)
        throw std::invalid_argument("LayeredStructure: need exactly L+1 radii for L layers");
    double prev = std::numeric_limits<double>::infinity();
    for (double r : radii_) {
        if (!(r > 0.0) || !std::isfinite(r) || r >= prev)
            throw std::invalid_argument("LayeredStructure: radii must be finite, positive, strictly decreasing");
        prev = r;
    }
    for (const auto& m : layers_)
        if (!material_positive(m))
            throw std::invalid_argument("LayeredStructure: layer constants must be finite and positive");
    if (!material_positive(background_))
        throw std::invalid_argument("LayeredStructure: background constants must be finite and positive");
    if (const auto* p = std::get_if<PenetrableCore>(&core_))
        if (!material_positive(p->material))
            throw std::invalid_argument("LayeredStructure: core constants must be finite and positive");
}

Material LayeredStructure::material_at(double r) const {
    if (!(r >= 0.0)) throw std::invalid_argument("material_at: negative radius");
    if (r >= radii_.front()) return background_;
    for (size_t j = 0; j + 1 < radii_.size(); ++j)
        if (r >= radii_[j + 1]) return layers_[j];
    if (const auto* p = std::get_if<PenetrableCore>(&core_)) return p->material;
    throw std::invalid_argument("material_at: point lies inside an insulating core");
}

LayeredStructure LayeredStructure::scaled(double rho) const {
    if (!(rho > 0.0) || !std::isfinite(rho))
        throw std::invalid_argument("scaled: rho must be positive and finite");
    std::vector<double> r = radii_;
    for (double& x : r) x *= rho;
    return LayeredStructure(std::move(r), layers_, core_, background_);
}

bool LayeredStructure::is_matched() const {
    auto same = [&](const Material& m) {
        return m.mu == background_.mu && m.eps == background_.eps;
    };
    for (const auto& m : layers_)
        if (!same(m)) return false;
    if (const auto* p = std::get_if<PenetrableCore>(&core_)) return same(p->material);
    return false;  // an insulating core always scatters
}

Matrix2c interface_matrix(int n, double k, double r, double mu, double eps, Side) {
    if (!(k > 0.0) || !(r > 0.0) || !(mu > 0.0) || !(eps > 0.0))
        throw std::invalid_argument("interface_matrix: arguments must be positive");
    const double s = std::sqrt(eps / mu);
    const double kr = k * r;
    return {complexd(specfun::bessel_j(n, kr)), specfun::hankel1(n, kr),
            s * specfun::bessel_jp(n, kr), s * specfun::hankel1p(n, kr)};
}

namespace {

// Row-vector propagation of the transfer product.  Only the ratio of the two
// row entries is meaningful: the row is renormalized after each interface to
// keep entries representable (they grow like t^{-n-1} for small t).
template <typename T>
struct CylRow {
    std::complex<T> v1, v2;
};

template <typename T>
void normalize_row(CylRow<T>& row) {
    const T scale = std::max(std::abs(row.v1), std::abs(row.v2));
    if (scale > T(0) && std::isfinite(scale)) {
        row.v1 /= scale;
        row.v2 /= scale;
    }
}

template <typename T>
struct Mat2x2 {
    std::complex<T> a11, a12, a21, a22;
};

template <typename T>
Mat2x2<T> matching_matrix(int n, T k, T r, T mu, T eps) {
    const T s = std::sqrt(eps / mu);
    const T kr = k * r;
    return {std::complex<T>(specfun::bessel_j(n, kr), T(0)),
            std::complex<T>(specfun::bessel_j(n, kr), specfun::bessel_y(n, kr)),
            std::complex<T>(s * specfun::bessel_jp(n, kr), T(0)),
            std::complex<T>(s * specfun::bessel_jp(n, kr), s * specfun::bessel_yp(n, kr))};
}

// (p21, p22) up to a common scalar, for either core type.
template <typename T>
CylRow<T> transfer_row(const LayeredStructure& s, int n, T omega) {
    if (!(omega > T(0)) || !std::isfinite(omega))
        throw std::invalid_argument("transfer: omega must be positive and finite");
    n = n < 0 ? -n : n;

    const int L = s.layer_count();
    const auto wavenumber = [omega](const Material& m) {
        return omega * std::sqrt(T(m.mu) * T(m.eps));
    };

    const Material inner = s.innermost_medium();
    const T rc = T(s.core_radius());
    CylRow<T> row;
    if (s.has_neumann_core()) {
        const T kc = wavenumber(inner) * rc;
        row.v1 = std::complex<T>(specfun::bessel_jp(n, kc), T(0));
        row.v2 = std::complex<T>(specfun::bessel_jp(n, kc), specfun::bessel_yp(n, kc));
    } else {
        // Regular field inside the core: second row of adj(inner matrix)
        // applied to the outer-medium matrix at the core radius.
        const Material& cm = std::get<PenetrableCore>(s.core()).material;
        const T kc = wavenumber(cm) * rc;
        const T sc = std::sqrt(T(cm.eps) / T(cm.mu));
        const std::complex<T> c1(-sc * specfun::bessel_jp(n, kc), T(0));
        const std::complex<T> c2(specfun::bessel_j(n, kc), T(0));
        const Mat2x2<T> outer = matching_matrix(n, wavenumber(inner), rc, T(inner.mu), T(inner.eps));
        row.v1 = c1 * outer.a11 + c2 * outer.a21;
        row.v2 = c1 * outer.a12 + c2 * outer.a22;
    }
    normalize_row(row);

    // Walk outward: at radius r_j the adjugate of the layer-j matrix meets
    // the matrix of the medium outside it (layer j-1 or the background).
    for (int j = L; j >= 1; --j) {
        const Material& in = s.layers()[static_cast<size_t>(j - 1)];
        const Material& out = (j == 1) ? s.background() : s.layers()[static_cast<size_t>(j - 2)];
        const T rj = T(s.radii()[static_cast<size_t>(j - 1)]);
        const Mat2x2<T> Mi = matching_matrix(n, wavenumber(in), rj, T(in.mu), T(in.eps));
        const Mat2x2<T> Mo = matching_matrix(n, wavenumber(out), rj, T(out.mu), T(out.eps));
        // row * adj(Mi)
        CylRow<T> t1{row.v1 * Mi.a22 - row.v2 * Mi.a21, -row.v1 * Mi.a12 + row.v2 * Mi.a11};
        // * Mo
        row.v1 = t1.v1 * Mo.a11 + t1.v2 * Mo.a21;
        row.v2 = t1.v1 * Mo.a12 + t1.v2 * Mo.a22;
        normalize_row(row);
    }

    const T p22 = std::abs(row.v2);
    if (!std::isfinite(std::abs(row.v1)) || !std::isfinite(p22) || p22 < T(1e-300))
        throw DegenerateStructureError(
            "transfer: |p22| underflowed or became non-finite (numeric degeneration, "
            "the transfer product itself cannot vanish)");
    return row;
}

}  // namespace

std::pair<complexd, complexd> transfer_p(const LayeredStructure& s, int n, double omega) {
    if (!s.has_neumann_core())
        throw std::invalid_argument("transfer_p: defined for insulating cores; "
                                    "use scattering_coefficient for penetrable cores");
    const auto row = transfer_row<double>(s, n, omega);
    return {row.v1, row.v2};
}

complexd scattering_coefficient(const LayeredStructure& s, double omega, int n) {
    const auto row = transfer_row<double>(s, n, omega);
    return complexd(0.0, 4.0) * (-row.v1 / row.v2);
}

std::complex<long double> scattering_coefficient_ld(const LayeredStructure& s,
                                                    long double omega, int n) {
    const auto row = transfer_row<long double>(s, n, omega);
    return std::complex<long double>(0.0L, 4.0L) * (-row.v1 / row.v2);
}

ScatteringSpectrum compute_spectrum(const LayeredStructure& s, double omega, int n_max) {
    if (n_max < 0) throw std::invalid_argument("compute_spectrum: n_max must be >= 0");
    ScatteringSpectrum spec;
    spec.omega = omega;
    spec.n_max = n_max;
    spec.w.resize(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) spec.w[static_cast<size_t>(n)] = scattering_coefficient(s, omega, n);
    return spec;
}

complexd far_field(const ScatteringSpectrum& spec, double theta_in, double theta_out) {
    const double d = theta_out - theta_in;
    complexd acc = spec.w[0];
    for (int n = 1; n <= spec.n_max; ++n)
        acc += 2.0 * std::cos(n * d) * spec.w[static_cast<size_t>(n)];
    return acc;
}

complexd far_field(const LayeredStructure& s, double omega, double theta_in,
                   double theta_out, int n_max) {
    return far_field(compute_spectrum(s, omega, n_max), theta_in, theta_out);
}

double cross_section(const ScatteringSpectrum& spec) {
    double acc = std::norm(spec.w[0]);
    for (int n = 1; n <= spec.n_max; ++n) acc += 2.0 * std::norm(spec.w[static_cast<size_t>(n)]);
    return 2.0 * M_PI * acc;
}

double cross_section(const LayeredStructure& s, double omega, double /*theta_out*/, int n_max) {
    return cross_section(compute_spectrum(s, omega, n_max));
}

double optical_theorem_residual(const ScatteringSpectrum& spec) {
    double im_sum = spec.w[0].imag();
    double norm_sum = std::norm(spec.w[0]);
    for (int n = 1; n <= spec.n_max; ++n) {
        im_sum += 2.0 * spec.w[static_cast<size_t>(n)].imag();
        norm_sum += 2.0 * std::norm(spec.w[static_cast<size_t>(n)]);
    }
    if (norm_sum == 0.0) return 0.0;
    return std::abs(im_sum + 0.25 * norm_sum) / norm_sum;
}

double optical_theorem_residual(const LayeredStructure& s, double omega, int n_max) {
    return optical_theorem_residual(compute_spectrum(s, omega, n_max));
}

int auto_truncation(const LayeredStructure& s, double omega, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("auto_truncation: tol must be positive");
    constexpr int hard_cap = 200;
    const int floor_n = static_cast<int>(std::ceil(omega * s.outer_radius())) + 8;
    if (floor_n > hard_cap)
        throw NonConvergenceError("auto_truncation: required floor exceeds the order cap");
    if (std::isinf(tol)) return floor_n;

    double prev = std::abs(scattering_coefficient(s, omega, floor_n - 1));
    for (int n = floor_n; n <= hard_cap; ++n) {
        const double cur = std::abs(scattering_coefficient(s, omega, n));
        if (cur < tol && cur <= prev) return n;
        prev = cur;
    }
    throw NonConvergenceError("auto_truncation: no convergence below the order cap");
}

LayeredStructure scale_structure(const LayeredStructure& s, double rho) {
    return s.scaled(rho);
}

}  // namespace cloakforge::layered
