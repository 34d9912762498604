#pragma once

#include <complex>
#include <utility>
#include <variant>
#include <vector>

#include "cloakforge/errors.hpp"

namespace cloakforge::layered {

using complexd = std::complex<double>;

struct Material {
    double mu = 1.0;
    double eps = 1.0;
};

/// Perfectly insulating core: zero normal derivative on the core boundary.
/// Encoded as a tag, never as a numeric infinity.
struct NeumannCore {};

struct PenetrableCore {
    Material material;
};

using Core = std::variant<NeumannCore, PenetrableCore>;

/// Concentric annular layers A_j = { r_{j+1} <= |x| < r_j } around a core of
/// radius r_{L+1}, embedded in a homogeneous background.  radii are strictly
/// decreasing; layer j occupies the annulus between radii[j] and radii[j+1].
class LayeredStructure {
public:
    LayeredStructure(std::vector<double> radii, std::vector<Material> layers,
                     Core core, Material background = {1.0, 1.0});

    int layer_count() const { return static_cast<int>(layers_.size()); }
    const std::vector<double>& radii() const { return radii_; }
    const std::vector<Material>& layers() const { return layers_; }
    const Core& core() const { return core_; }
    const Material& background() const { return background_; }

    double outer_radius() const { return radii_.front(); }
    double core_radius() const { return radii_.back(); }
    bool has_neumann_core() const { return std::holds_alternative<NeumannCore>(core_); }

    /// Material of the annulus adjacent to the core from outside
    /// (the background when there are no layers).
    const Material& innermost_medium() const {
        return layers_.empty() ? background_ : layers_.back();
    }

    /// Piecewise material lookup by radius; throws std::invalid_argument for
    /// points inside an insulating core.
    Material material_at(double r) const;

    /// All radii multiplied by rho, materials unchanged.
    LayeredStructure scaled(double rho) const;

    /// True when every layer (and a penetrable core) equals the background.
    bool is_matched() const;

private:
    std::vector<double> radii_;
    std::vector<Material> layers_;
    Core core_;
    Material background_;
};

/// Diagonal scattering coefficients W_n at one frequency, n = 0..n_max.
/// Values for negative n follow from W_{-n} = W_n.
struct ScatteringSpectrum {
    double omega = 0.0;
    int n_max = 0;
    std::vector<complexd> w;  // w[n] for n = 0..n_max

    complexd at(int n) const { return w[static_cast<size_t>(n < 0 ? -n : n)]; }
};

/// 2x2 complex matrix, row-major.
struct Matrix2c {
    complexd a11, a12, a21, a22;

    complexd det() const { return a11 * a22 - a12 * a21; }
    Matrix2c adjugate() const { return {a22, -a12, -a21, a11}; }
    Matrix2c operator*(const Matrix2c& o) const {
        return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
                a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
    }
};

enum class Side { inner, outer };

/// Field-matching matrix [[J_n(kr), H_n(kr)], [s J_n'(kr), s H_n'(kr)]] with
/// s = sqrt(eps/mu) of the medium the side refers to.  Both sides share the
/// same form; the tag records which medium the constants belong to.
Matrix2c interface_matrix(int n, double k, double r, double mu, double eps,
                          Side side = Side::inner);

/// Second row (p21, p22) of the interface-transfer product for a structure
/// with an insulating core, up to a common nonzero scalar (the product is
/// rescaled per factor, which drops the overall prefactor but preserves the
/// ratio p21/p22).
std::pair<complexd, complexd> transfer_p(const LayeredStructure& s, int n, double omega);

/// W_n = 4i * (-p21/p22).  Handles both core types; negative n by symmetry.
complexd scattering_coefficient(const LayeredStructure& s, double omega, int n);

/// Extended-precision evaluation of the same quantity, for oracles that
/// difference W_n against its low-frequency series.
std::complex<long double> scattering_coefficient_ld(const LayeredStructure& s,
                                                    long double omega, int n);

ScatteringSpectrum compute_spectrum(const LayeredStructure& s, double omega, int n_max);

/// Far-field pattern sum_{|n| <= n_max} e^{i n (theta_out - theta_in)} W_n.
complexd far_field(const LayeredStructure& s, double omega, double theta_in,
                   double theta_out, int n_max);
complexd far_field(const ScatteringSpectrum& spec, double theta_in, double theta_out);

/// Angular-energy cross section 2*pi*sum |W_n|^2; independent of direction
/// for concentric structures (the argument is kept for interface parity).
double cross_section(const LayeredStructure& s, double omega, double theta_out, int n_max);
double cross_section(const ScatteringSpectrum& spec);

/// Energy-conservation residual |Im sum W_n + (1/4) sum |W_n|^2| normalized
/// by sum |W_n|^2 (0/0 -> 0).  For lossless media the scattered-wave mode
/// amplitudes satisfy |1 + 2 b_n| = 1, which with W_n = 4i b_n pins the
/// constant to exactly 1/4 at every frequency.
double optical_theorem_residual(const LayeredStructure& s, double omega, int n_max);
double optical_theorem_residual(const ScatteringSpectrum& spec);

/// Smallest truncation order with |W_n| below tol and past the decay knee;
/// never below ceil(omega*r_outer) + 8, hard cap 200 (NonConvergenceError).
int auto_truncation(const LayeredStructure& s, double omega, double tol);

LayeredStructure scale_structure(const LayeredStructure& s, double rho);

}  // namespace cloakforge::layered
