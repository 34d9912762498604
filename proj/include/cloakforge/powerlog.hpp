#pragma once

#include <complex>
#include <vector>

#include "cloakforge/errors.hpp"

namespace cloakforge::powerlog {

using complexd = std::complex<double>;

/// Truncated expansion sum c_{k,j} t^k (ln t)^j with kmin <= k <= kmax and
/// 0 <= j <= jmax.  ln t is a formal symbol: all arithmetic is exact
/// coefficient algebra, truncated in k at the guaranteed-valid window.
///
/// Window semantics: coefficients above kmax are unknown (the o(t^kmax)
/// remainder is never represented); reads there throw.  Reads below kmin
/// return zero, which the representation guarantees.  Binary operations
/// propagate the window conservatively from the operands' kmin/kmax, so a
/// trimmed kmin (see clamp_below) keeps products as wide as theory allows.
class PowerLogSeries {
public:
    PowerLogSeries(int kmin, int kmax, int jmax);

    static PowerLogSeries constant(complexd value, int kmax, int jmax);
    static PowerLogSeries monomial(complexd value, int k, int j, int kmax, int jmax);

    int kmin() const { return kmin_; }
    int kmax() const { return kmax_; }
    int jmax() const { return jmax_; }

    complexd coeff(int k, int j) const;
    void set_coeff(int k, int j, complexd value);

    /// Lowest power carrying a nonzero coefficient; kmax()+1 when empty.
    int lead() const;
    bool is_zero() const { return lead() > kmax_; }
    double max_abs() const;

    /// Drops rows below k0 (coefficients known to vanish identically, e.g.
    /// roundoff residue of a structural cancellation) and raises kmin.
    PowerLogSeries& clamp_below(int k0);

    /// Multiplication by t^dk; the window shifts along.
    PowerLogSeries shifted(int dk) const;

    /// Multiplication by the formal symbol ln t.
    PowerLogSeries log_shifted() const;

    PowerLogSeries operator-() const;
    PowerLogSeries& operator*=(complexd scale);

    /// Reciprocal via the geometric series.  Requires a nonzero leading
    /// coefficient free of log contamination (relative to the leading
    /// magnitude); valid window shrinks to kmax - 2*lead.
    PowerLogSeries inverse() const;

    /// Numeric evaluation at t > 0 over the stored window.
    complexd evaluate(double t) const;

    friend PowerLogSeries operator+(const PowerLogSeries& a, const PowerLogSeries& b);
    friend PowerLogSeries operator-(const PowerLogSeries& a, const PowerLogSeries& b);
    friend PowerLogSeries operator*(const PowerLogSeries& a, const PowerLogSeries& b);
    friend PowerLogSeries operator*(const PowerLogSeries& a, complexd s);
    friend PowerLogSeries operator*(complexd s, const PowerLogSeries& a);

private:
    size_t idx(int k, int j) const {
        return static_cast<size_t>(k - kmin_) * static_cast<size_t>(jmax_ + 1) +
               static_cast<size_t>(j);
    }

    int kmin_;
    int kmax_;
    int jmax_;
    std::vector<complexd> c_;
};

enum class CylKind { J, Y, H1, Jp, Yp, H1p };

/// Power-log series in t of the cylinder function evaluated at (scale * t),
/// from the ascending series (J), the digamma log-series (Y), and the
/// derivative recurrence C_n'(u) = C_{n-1}(u) - (n/u) C_n(u).
PowerLogSeries series_bessel(CylKind kind, int n, double scale, int kmax, int jmax);

}  // namespace cloakforge::powerlog
