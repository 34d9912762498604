#include "cloakforge/expansion.hpp"

#include <algorithm>
#include <cmath>

namespace cloakforge::expansion {

using powerlog::CylKind;
using powerlog::PowerLogSeries;

ExpansionTable::ExpansionTable(int order, int layer_count)
    : order_(order), layers_(layer_count) {
    if (order < 0 || layer_count < 0)
        throw std::invalid_argument("ExpansionTable: order and layer count must be >= 0");
    rows_.resize(static_cast<size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        const int lcount = order - n;
        const int m = max_log_power(n);
        rows_[static_cast<size_t>(n)].assign(1 + static_cast<size_t>(lcount) * (m + 1),
                                             complexd(0.0));
    }
}

void ExpansionTable::check(int n, int l, int j) const {
    if (n < 0 || n > order_) throw std::out_of_range("ExpansionTable: n outside [0, N]");
    if (l == 0 && j == 0) return;
    if (l < 1 || l > order_ - n) throw std::out_of_range("ExpansionTable: l outside [1, N-n]");
    if (j < 0 || j > max_log_power(n)) throw std::out_of_range("ExpansionTable: j outside [0, M]");
}

complexd ExpansionTable::leading(int n) const {
    check(n, 0, 0);
    return rows_[static_cast<size_t>(n)][0];
}

complexd ExpansionTable::coeff(int n, int l, int j) const {
    check(n, l, j);
    if (l == 0 && j == 0) return leading(n);
    const int m = max_log_power(n);
    return rows_[static_cast<size_t>(n)][1 + static_cast<size_t>(l - 1) * (m + 1) + j];
}

complexd ExpansionTable::coeff(const CoeffLabel& lab) const {
    return coeff(lab.n, lab.l, lab.j);
}

void ExpansionTable::set_leading(int n, complexd v) {
    check(n, 0, 0);
    rows_[static_cast<size_t>(n)][0] = v;
}

void ExpansionTable::set_coeff(int n, int l, int j, complexd v) {
    check(n, l, j);
    if (l == 0 && j == 0) {
        set_leading(n, v);
        return;
    }
    const int m = max_log_power(n);
    rows_[static_cast<size_t>(n)][1 + static_cast<size_t>(l - 1) * (m + 1) + j] = v;
}

std::vector<CoeffLabel> ExpansionTable::all_labels() const {
    std::vector<CoeffLabel> labels;
    for (int n = 0; n <= order_; ++n) {
        labels.push_back({n, 0, 0});
        for (int l = 1; l <= order_ - n; ++l)
            for (int j = 0; j <= max_log_power(n); ++j) labels.push_back({n, l, j});
    }
    return labels;
}

namespace {

struct SeriesMat {
    PowerLogSeries a11, a12, a21, a22;
};

// [[J, H], [s J', s H']] at argument (scale * t), as series in t.
SeriesMat matching_series(int n, double scale, double mu, double eps, int kmax, int jmax) {
    const double s = std::sqrt(eps / mu);
    PowerLogSeries j = series_bessel(CylKind::J, n, scale, kmax, jmax);
    PowerLogSeries h = series_bessel(CylKind::H1, n, scale, kmax, jmax);
    PowerLogSeries jp = series_bessel(CylKind::Jp, n, scale, kmax, jmax);
    PowerLogSeries hp = series_bessel(CylKind::H1p, n, scale, kmax, jmax);
    return {std::move(j), std::move(h), complexd(s) * jp, complexd(s) * hp};
}

}  // namespace

TransferSeries transfer_series(const layered::LayeredStructure& s, int n, int order,
                               int extra_window) {
    if (!s.has_neumann_core())
        throw std::invalid_argument("transfer_series: requires an insulating core");
    if (n < 0 || order < 0 || n > order)
        throw std::invalid_argument("transfer_series: need 0 <= n <= order");

    const int L = s.layer_count();
    // Primitive series window; generous enough that the conservative window
    // propagation through 2L matrix factors still covers t^{2*order} in the
    // ratio.  Log capacity covers every product that can land in-window.
    const int kmax = 2 * order + n + 2 + L + std::max(0, extra_window);
    const int jmax = (2 * L + 2) * (order + 1) + 2;

    const auto scale_of = [](const layered::Material& m) { return std::sqrt(m.mu * m.eps); };

    const layered::Material inner = s.innermost_medium();
    const double rc = s.core_radius();

    PowerLogSeries v1 = series_bessel(CylKind::Jp, n, scale_of(inner) * rc, kmax, jmax);
    PowerLogSeries v2 = series_bessel(CylKind::H1p, n, scale_of(inner) * rc, kmax, jmax);

    for (int j = L; j >= 1; --j) {
        const layered::Material& in = s.layers()[static_cast<size_t>(j - 1)];
        const layered::Material& out =
            (j == 1) ? s.background() : s.layers()[static_cast<size_t>(j - 2)];
        const double rj = s.radii()[static_cast<size_t>(j - 1)];
        const SeriesMat Mi = matching_series(n, scale_of(in) * rj, in.mu, in.eps, kmax, jmax);
        const SeriesMat Mo = matching_series(n, scale_of(out) * rj, out.mu, out.eps, kmax, jmax);
        // row * adj(Mi) * Mo
        PowerLogSeries t1 = v1 * Mi.a22 - v2 * Mi.a21;
        PowerLogSeries t2 = v2 * Mi.a11 - v1 * Mi.a12;
        v1 = t1 * Mo.a11 + t2 * Mo.a21;
        v2 = t1 * Mo.a12 + t2 * Mo.a22;
        // The row keeps the transfer-product asymptotics t^{n-1} / t^{-n-1}
        // (the constant mode starts one order higher: an insulated structure
        // cannot scatter a constant, so the t^{-1} slot of p21 vanishes);
        // anything below is cancellation residue, dropped to keep the
        // conservative window propagation tight.
        v1.clamp_below(n == 0 ? 1 : n - 1);
        v2.clamp_below(-n - 1);
    }
    return {std::move(v1), std::move(v2)};
}

powerlog::PowerLogSeries scattering_series(const layered::LayeredStructure& s, int n,
                                           int order, int extra_window) {
    TransferSeries ts = transfer_series(s, n, order, extra_window);
    PowerLogSeries ratio = ts.p21 * ts.p22.inverse();
    ratio *= complexd(0.0, -4.0);
    ratio.clamp_below(n == 0 ? 0 : 2 * n);
    if (ratio.kmax() < 2 * order)
        throw Error("scattering_series: window propagation fell short of t^{2N}");
    return ratio;
}

ExpansionTable extract_expansion(const layered::LayeredStructure& s, int order,
                                 int extra_window) {
    if (order > 4)
        throw std::invalid_argument("extract_expansion: orders above 4 are not supported");
    ExpansionTable table(order, s.layer_count());
    for (int n = 0; n <= order; ++n) {
        const PowerLogSeries w = scattering_series(s, n, order, extra_window);
        table.set_leading(n, w.coeff(2 * n, 0));
        for (int l = 1; l <= order - n; ++l)
            for (int j = 0; j <= table.max_log_power(n); ++j)
                table.set_coeff(n, l, j, w.coeff(2 * n + 2 * l, j));
    }
    return table;
}

std::vector<CoeffLabel> nonzero_coefficient_list(int order, int layer_count) {
    if (order < 0 || layer_count < 0)
        throw std::invalid_argument("nonzero_coefficient_list: bad arguments");
    // Fixed generic probes: coefficients that vanish on all of them are
    // identically zero in (mu, eps).
    const double probes[][2] = {{1.7, 0.45}, {0.62, 2.9}, {3.3, 1.21}};
    std::vector<ExpansionTable> tables;
    for (const auto& p : probes) {
        std::vector<double> radii(static_cast<size_t>(layer_count) + 1);
        for (int i = 0; i <= layer_count; ++i)
            radii[static_cast<size_t>(i)] =
                2.0 - (layer_count == 0 ? 1.0 : static_cast<double>(i) / layer_count);
        std::vector<layered::Material> mats;
        for (int i = 0; i < layer_count; ++i)
            mats.push_back({p[0] + 0.31 * i, p[1] + 0.17 * i});
        layered::LayeredStructure probe(radii, mats, layered::NeumannCore{});
        tables.push_back(extract_expansion(probe, order));
    }

    double scale = 0.0;
    for (const auto& t : tables)
        for (const auto& lab : t.all_labels()) scale = std::max(scale, std::abs(t.coeff(lab)));

    const double threshold = std::max(1e-7 * scale, 1e-12);
    std::vector<CoeffLabel> result;
    for (const auto& lab : tables.front().all_labels()) {
        double mag = 0.0;
        for (const auto& t : tables) mag = std::max(mag, std::abs(t.coeff(lab)));
        if (mag > threshold) result.push_back(lab);
    }
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace cloakforge::expansion
