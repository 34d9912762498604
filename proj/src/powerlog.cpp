#include "cloakforge/powerlog.hpp"

#include <algorithm>
#include <cmath>

#include "cloakforge/specfun.hpp"

namespace cloakforge::powerlog {

PowerLogSeries::PowerLogSeries(int kmin, int kmax, int jmax)
    : kmin_(kmin), kmax_(kmax), jmax_(jmax) {
    if (kmax < kmin) throw std::invalid_argument("PowerLogSeries: kmax < kmin");
    if (jmax < 0) throw std::invalid_argument("PowerLogSeries: jmax < 0");
    c_.assign(static_cast<size_t>(kmax - kmin + 1) * static_cast<size_t>(jmax + 1),
              complexd(0.0));
}

PowerLogSeries PowerLogSeries::constant(complexd value, int kmax, int jmax) {
    return monomial(value, 0, 0, kmax, jmax);
}

PowerLogSeries PowerLogSeries::monomial(complexd value, int k, int j, int kmax, int jmax) {
    PowerLogSeries s(k, kmax, jmax);
    s.set_coeff(k, j, value);
    return s;
}

complexd PowerLogSeries::coeff(int k, int j) const {
    if (j < 0 || j > jmax_)
        throw std::out_of_range("PowerLogSeries::coeff: log power outside capacity");
    if (k > kmax_)
        throw std::out_of_range("PowerLogSeries::coeff: read beyond the valid window");
    if (k < kmin_) return complexd(0.0);
    return c_[idx(k, j)];
}

void PowerLogSeries::set_coeff(int k, int j, complexd value) {
    if (k < kmin_ || k > kmax_ || j < 0 || j > jmax_)
        throw std::out_of_range("PowerLogSeries::set_coeff: index outside the table");
    c_[idx(k, j)] = value;
}

int PowerLogSeries::lead() const {
    for (int k = kmin_; k <= kmax_; ++k)
        for (int j = 0; j <= jmax_; ++j)
            if (c_[idx(k, j)] != complexd(0.0)) return k;
    return kmax_ + 1;
}

double PowerLogSeries::max_abs() const {
    double m = 0.0;
    for (const auto& v : c_) m = std::max(m, std::abs(v));
    return m;
}

PowerLogSeries& PowerLogSeries::clamp_below(int k0) {
    if (k0 <= kmin_) return *this;
    const int nk = std::max(k0, kmin_);
    PowerLogSeries out(nk, kmax_, jmax_);
    for (int k = nk; k <= kmax_; ++k)
        for (int j = 0; j <= jmax_; ++j) out.c_[out.idx(k, j)] = c_[idx(k, j)];
    *this = std::move(out);
    return *this;
}

PowerLogSeries PowerLogSeries::shifted(int dk) const {
    PowerLogSeries out(kmin_ + dk, kmax_ + dk, jmax_);
    out.c_ = c_;
    return out;
}

PowerLogSeries PowerLogSeries::log_shifted() const {
    PowerLogSeries out(kmin_, kmax_, jmax_);
    for (int k = kmin_; k <= kmax_; ++k)
        for (int j = 0; j <= jmax_; ++j) {
            const complexd v = c_[idx(k, j)];
            if (v == complexd(0.0)) continue;
            if (j + 1 > jmax_)
                throw TruncationCapacityError("log_shifted: log power exceeds capacity");
            out.c_[out.idx(k, j + 1)] += v;
        }
    return out;
}

PowerLogSeries PowerLogSeries::operator-() const {
    PowerLogSeries out = *this;
    for (auto& v : out.c_) v = -v;
    return out;
}

PowerLogSeries& PowerLogSeries::operator*=(complexd scale) {
    for (auto& v : c_) v *= scale;
    return *this;
}

PowerLogSeries operator*(const PowerLogSeries& a, complexd s) {
    PowerLogSeries out = a;
    out *= s;
    return out;
}

PowerLogSeries operator*(complexd s, const PowerLogSeries& a) { return a * s; }

PowerLogSeries operator+(const PowerLogSeries& a, const PowerLogSeries& b) {
    const int kmin = std::min(a.kmin_, b.kmin_);
    const int kmax = std::min(a.kmax_, b.kmax_);
    const int jmax = std::max(a.jmax_, b.jmax_);
    if (kmax < kmin) throw std::invalid_argument("series add: windows are disjoint");
    PowerLogSeries out(kmin, kmax, jmax);
    for (int k = kmin; k <= kmax; ++k)
        for (int j = 0; j <= jmax; ++j) {
            complexd v(0.0);
            if (k >= a.kmin_ && j <= a.jmax_) v += a.c_[a.idx(k, j)];
            if (k >= b.kmin_ && j <= b.jmax_) v += b.c_[b.idx(k, j)];
            out.c_[out.idx(k, j)] = v;
        }
    return out;
}

PowerLogSeries operator-(const PowerLogSeries& a, const PowerLogSeries& b) {
    return a + (-b);
}

namespace {

struct Entry {
    int k;
    int j;
    complexd v;
};

}  // namespace

PowerLogSeries operator*(const PowerLogSeries& a, const PowerLogSeries& b) {
    // Unknown tails start above each factor's kmax, so the product is valid
    // up to min over cross terms of (kmax of one + kmin of the other).
    const int kmax = std::min(a.kmax_ + b.kmin_, b.kmax_ + a.kmin_);
    const int kmin = a.kmin_ + b.kmin_;
    const int jmax = std::max(a.jmax_, b.jmax_);
    if (kmax < kmin) throw std::invalid_argument("series mul: empty product window");

    // Sparse pass: the tables are dominated by zeros (parity structure and
    // unused log slots), so convolve nonzero entries only.
    std::vector<Entry> ea, eb;
    for (int k = a.kmin_; k <= a.kmax_; ++k)
        for (int j = 0; j <= a.jmax_; ++j)
            if (auto v = a.c_[a.idx(k, j)]; v != complexd(0.0)) ea.push_back({k, j, v});
    for (int k = b.kmin_; k <= b.kmax_; ++k)
        for (int j = 0; j <= b.jmax_; ++j)
            if (auto v = b.c_[b.idx(k, j)]; v != complexd(0.0)) eb.push_back({k, j, v});

    PowerLogSeries out(kmin, kmax, jmax);
    for (const auto& x : ea)
        for (const auto& y : eb) {
            if (x.k + y.k > kmax) continue;
            if (x.j + y.j > jmax)
                throw TruncationCapacityError("series mul: log power exceeds capacity");
            out.c_[out.idx(x.k + y.k, x.j + y.j)] += x.v * y.v;
        }
    return out;
}

PowerLogSeries PowerLogSeries::inverse() const {
    const int m = lead();
    if (m > kmax_) throw NotInvertibleError("inverse: series is identically zero");
    const complexd c0 = c_[idx(m, 0)];
    const double scale = [&] {
        double s = 0.0;
        for (int j = 0; j <= jmax_; ++j) s = std::max(s, std::abs(c_[idx(m, j)]));
        return s;
    }();
    if (std::abs(c0) == 0.0 || std::abs(c0) < 1e-10 * scale)
        throw NotInvertibleError("inverse: leading coefficient vanishes");
    // Log contamination far below the leading magnitude is cancellation
    // residue; genuine log content at the leading power is not invertible
    // in this basis.
    for (int j = 1; j <= jmax_; ++j)
        if (std::abs(c_[idx(m, j)]) > 1e-10 * std::abs(c0))
            throw NotInvertibleError("inverse: log term at the leading power");

    const int rel_window = kmax_ - m;
    if (rel_window < 1) {
        // Nothing beyond the leading term is known.
        PowerLogSeries out(-m, -m + rel_window, jmax_);
        out.set_coeff(-m, 0, 1.0 / c0);
        return out;
    }
    // x = a / (c0 t^m) - 1, relative series with lead >= 1.
    PowerLogSeries x(1, rel_window, jmax_);
    for (int k = 1; k <= rel_window && m + k <= kmax_; ++k)
        for (int j = 0; j <= jmax_; ++j) x.set_coeff(k, j, c_[idx(m + k, j)] / c0);

    PowerLogSeries acc = PowerLogSeries::constant(1.0, rel_window, jmax_);
    PowerLogSeries term = acc;
    const int xlead = x.lead();
    if (xlead <= rel_window) {
        for (int i = 1; i * xlead <= rel_window; ++i) {
            term = -(term * x);
            acc = acc + term;
            if (term.is_zero()) break;
        }
    }
    return (acc * (1.0 / c0)).shifted(-m);
}

complexd PowerLogSeries::evaluate(double t) const {
    if (!(t > 0.0)) throw std::invalid_argument("evaluate: t must be positive");
    const double lt = std::log(t);
    complexd acc(0.0);
    for (int k = kmin_; k <= kmax_; ++k) {
        complexd row(0.0);
        double lp = 1.0;
        for (int j = 0; j <= jmax_; ++j) {
            row += c_[idx(k, j)] * lp;
            lp *= lt;
        }
        acc += row * std::pow(t, k);
    }
    return acc;
}

namespace {

double psi_int(int m) {
    // digamma at positive integers: psi(1) = -gamma, psi(m) = -gamma + sum 1/l
    double v = -specfun::euler_gamma;
    for (int l = 1; l < m; ++l) v += 1.0 / l;
    return v;
}

double factorial(int m) {
    double v = 1.0;
    for (int l = 2; l <= m; ++l) v *= l;
    return v;
}

PowerLogSeries series_j(int n, double a, int kmax, int jmax) {
    // J_n(a t) = sum_m (-1)^m (a t / 2)^{n + 2m} / (m! (n+m)!)
    PowerLogSeries s(n, kmax, jmax);
    double sign = 1.0;
    for (int m = 0; n + 2 * m <= kmax; ++m) {
        const int k = n + 2 * m;
        s.set_coeff(k, 0, sign * std::pow(0.5 * a, k) / (factorial(m) * factorial(n + m)));
        sign = -sign;
    }
    return s;
}

PowerLogSeries series_y(int n, double a, int kmax, int jmax) {
    // Y_n(u) = -(1/pi) sum_{l<n} ((n-l-1)!/l!) (u/2)^{2l-n}
    //          + (2/pi) ln(u/2) J_n(u)
    //          - (1/pi) sum_l (psi(l+1)+psi(n+l+1)) (-1)^l (u/2)^{2l+n} / (l!(n+l)!)
    // with u = a t, so ln(u/2) = ln t + ln(a/2).
    if (jmax < 1) throw std::invalid_argument("series_bessel: Y needs jmax >= 1");
    PowerLogSeries s(-n, kmax, jmax);
    for (int l = 0; l < n; ++l) {
        const int k = 2 * l - n;
        if (k > kmax) break;
        s.set_coeff(k, 0, -(factorial(n - l - 1) / factorial(l)) * std::pow(0.5 * a, k) / M_PI);
    }
    const PowerLogSeries jn = series_j(n, a, kmax, jmax);
    const PowerLogSeries logpart =
        (2.0 / M_PI) * (jn.log_shifted() + std::log(0.5 * a) * jn);
    double sign = 1.0;
    PowerLogSeries tail(n, kmax, jmax);
    for (int l = 0; n + 2 * l <= kmax; ++l) {
        const int k = n + 2 * l;
        tail.set_coeff(k, 0, -sign * (psi_int(l + 1) + psi_int(n + l + 1)) *
                                 std::pow(0.5 * a, k) / (M_PI * factorial(l) * factorial(n + l)));
        sign = -sign;
    }
    return s + logpart + tail;
}

}  // namespace

PowerLogSeries series_bessel(CylKind kind, int n, double scale, int kmax, int jmax) {
    if (n < 0) throw std::invalid_argument("series_bessel: order must be >= 0");
    if (!(scale > 0.0)) throw std::invalid_argument("series_bessel: scale must be positive");
    const complexd i_unit(0.0, 1.0);
    switch (kind) {
        case CylKind::J:
            return series_j(n, scale, kmax, jmax);
        case CylKind::Y:
            return series_y(n, scale, kmax, jmax);
        case CylKind::H1:
            return series_j(n, scale, kmax, jmax) + i_unit * series_y(n, scale, kmax, jmax);
        case CylKind::Jp: {
            // J_n'(u) at u = a t:  J_{n-1}(a t) - (n / (a t)) J_n(a t)
            if (n == 0) return -series_j(1, scale, kmax + 1, jmax);
            return series_j(n - 1, scale, kmax + 1, jmax) -
                   (n / scale) * series_j(n, scale, kmax + 1, jmax).shifted(-1);
        }
        case CylKind::Yp: {
            if (n == 0) return -series_y(1, scale, kmax + 1, jmax);
            return series_y(n - 1, scale, kmax + 1, jmax) -
                   (n / scale) * series_y(n, scale, kmax + 1, jmax).shifted(-1);
        }
        case CylKind::H1p:
            return series_bessel(CylKind::Jp, n, scale, kmax, jmax) +
                   i_unit * series_bessel(CylKind::Yp, n, scale, kmax, jmax);
    }
    throw std::invalid_argument("series_bessel: unknown kind");
}

}  // namespace cloakforge::powerlog
