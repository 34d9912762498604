#pragma once

#include <complex>
#include <vector>

#include "cloakforge/layered.hpp"
#include "cloakforge/powerlog.hpp"

namespace cloakforge::expansion {

using complexd = std::complex<double>;

/// Identifies one expansion coefficient of W_n: (l, j) = (0, 0) is the
/// leading coefficient of t^{2n}; otherwise the coefficient of
/// t^{2n + 2l} (ln t)^j.
struct CoeffLabel {
    int n = 0;
    int l = 0;
    int j = 0;
    friend bool operator==(const CoeffLabel&, const CoeffLabel&) = default;
    friend auto operator<=>(const CoeffLabel&, const CoeffLabel&) = default;
};

/// Low-frequency expansion coefficients of the diagonal scattering
/// coefficients in t = rho * omega:
///   W_n(t) = t^{2n} ( W_n^0 + sum_{l=1}^{N-n} sum_{j=0}^{M_{n,l}}
///                     W_n^{l,j} t^{2l} (ln t)^j ) + o(t^{2N}),
/// with M_{n,l} = (L+1)(N-n).
class ExpansionTable {
public:
    ExpansionTable(int order, int layer_count);

    int order() const { return order_; }
    int layer_count() const { return layers_; }
    int max_log_power(int n) const { return (layers_ + 1) * (order_ - n); }

    complexd leading(int n) const;         // W_n^0
    complexd coeff(int n, int l, int j) const;
    complexd coeff(const CoeffLabel& lab) const;
    void set_leading(int n, complexd v);
    void set_coeff(int n, int l, int j, complexd v);

    /// Every (n, l, j) slot of the table, leading coefficients first per n.
    std::vector<CoeffLabel> all_labels() const;

private:
    void check(int n, int l, int j) const;
    int order_;
    int layers_;
    // rows_[n][0] = leading; rows_[n][(l-1)*(M+1) + j + 1] = W_n^{l,j}
    std::vector<std::vector<complexd>> rows_;
};

/// The two meaningful entries of the interface-transfer product as power-log
/// series in t, with the common scalar prefactor dropped (it cancels in
/// p21/p22).  p21 leads at t^{n-1} (identically zero leading coefficient for
/// n = 0), p22 at t^{-n-1} with a log-free nonzero leading coefficient.
struct TransferSeries {
    powerlog::PowerLogSeries p21;
    powerlog::PowerLogSeries p22;
};

TransferSeries transfer_series(const layered::LayeredStructure& s, int n, int order,
                               int extra_window = 0);

/// Full W_n(t) series, 4i * (-p21 / p22), valid through t^{2 * order}.
powerlog::PowerLogSeries scattering_series(const layered::LayeredStructure& s, int n,
                                           int order, int extra_window = 0);

/// Reads the series coefficients into the table shape above.  Requires an
/// insulating core and order <= 4.  extra_window widens every internal
/// truncation (the result must not depend on it; used as a consistency
/// check).
ExpansionTable extract_expansion(const layered::LayeredStructure& s, int order,
                                 int extra_window = 0);

/// Labels of the coefficients that are not identically zero in (mu, eps),
/// determined by probing the extraction on a fixed set of generic
/// structures with the given layer count.
std::vector<CoeffLabel> nonzero_coefficient_list(int order, int layer_count);

}  // namespace cloakforge::expansion
