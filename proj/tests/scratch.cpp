#include <cstdio>
#include <cmath>
#include <complex>
#include "cloakforge/specfun.hpp"
#include "cloakforge/powerlog.hpp"

using namespace cloakforge;
using namespace cloakforge::powerlog;
using cd = std::complex<double>;

int main() {
    // L=1, n=1, structure (0.6, 4/3), radii (2,1): replicate the chain by hand
    int n = 1, N = 2;
    double mu1 = 0.6, eps1 = 4.0/3.0, r1 = 2.0, rc = 1.0;
    double a_in = std::sqrt(mu1*eps1), s1 = std::sqrt(eps1/mu1);
    double a_core = a_in * rc, a_ifc = a_in * r1, a_out = 1.0 * r1;
    int kmax = 2*N + n + 2 + 1, jmax = 12;
    double t = 1e-3;

    auto ev = [&](const PowerLogSeries& s){ return s.evaluate(t); };
    auto num = [&](double a, auto f){ return f(n, a*t); };

    PowerLogSeries v1 = series_bessel(CylKind::Jp, n, a_core, kmax, jmax);
    PowerLogSeries v2 = series_bessel(CylKind::H1p, n, a_core, kmax, jmax);
    // numeric seed
    cd nv1 = specfun::bessel_jp(n, a_core*t);
    cd nv2 = specfun::hankel1p(n, a_core*t);
    std::printf("seed v1: ser=(%.6e,%.6e) num=(%.6e,%.6e)\n", ev(v1).real(), ev(v1).imag(), nv1.real(), nv1.imag());
    std::printf("seed v2: ser=(%.6e,%.6e) num=(%.6e,%.6e)\n", ev(v2).real(), ev(v2).imag(), nv2.real(), nv2.imag());

    PowerLogSeries Ji  = series_bessel(CylKind::J,  n, a_ifc, kmax, jmax);
    PowerLogSeries Hi  = series_bessel(CylKind::H1, n, a_ifc, kmax, jmax);
    PowerLogSeries Jpi = cd(s1) * series_bessel(CylKind::Jp, n, a_ifc, kmax, jmax);
    PowerLogSeries Hpi = cd(s1) * series_bessel(CylKind::H1p, n, a_ifc, kmax, jmax);

    PowerLogSeries t1 = v1 * Hpi - v2 * Jpi;
    PowerLogSeries t2 = v2 * Ji - v1 * Hi;
    cd nJi = specfun::bessel_j(n, a_ifc*t), nHi = specfun::hankel1(n, a_ifc*t);
    cd nJpi = s1*specfun::bessel_jp(n, a_ifc*t), nHpi = s1*specfun::hankel1p(n, a_ifc*t);
    cd nt1 = nv1*nHpi - nv2*nJpi, nt2 = nv2*nJi - nv1*nHi;
    std::printf("t1: ser=(%.6e,%.6e) num=(%.6e,%.6e)  win[%d,%d]\n", ev(t1).real(), ev(t1).imag(), nt1.real(), nt1.imag(), t1.kmin(), t1.kmax());
    std::printf("t2: ser=(%.6e,%.6e) num=(%.6e,%.6e)  win[%d,%d]\n", ev(t2).real(), ev(t2).imag(), nt2.real(), nt2.imag(), t2.kmin(), t2.kmax());

    PowerLogSeries Jo  = series_bessel(CylKind::J,  n, a_out, kmax, jmax);
    PowerLogSeries Ho  = series_bessel(CylKind::H1, n, a_out, kmax, jmax);
    PowerLogSeries Jpo = series_bessel(CylKind::Jp, n, a_out, kmax, jmax);
    PowerLogSeries Hpo = series_bessel(CylKind::H1p, n, a_out, kmax, jmax);
    PowerLogSeries w1 = t1 * Jo + t2 * Jpo;
    PowerLogSeries w2 = t1 * Ho + t2 * Hpo;
    cd nJo = specfun::bessel_j(n, a_out*t), nHo = specfun::hankel1(n, a_out*t);
    cd nJpo = specfun::bessel_jp(n, a_out*t), nHpo = specfun::hankel1p(n, a_out*t);
    cd nw1 = nt1*nJo + nt2*nJpo, nw2 = nt1*nHo + nt2*nHpo;
    std::printf("w1: ser=(%.6e,%.6e) num=(%.6e,%.6e)  win[%d,%d]\n", ev(w1).real(), ev(w1).imag(), nw1.real(), nw1.imag(), w1.kmin(), w1.kmax());
    std::printf("w2: ser=(%.6e,%.6e) num=(%.6e,%.6e)  win[%d,%d]\n", ev(w2).real(), ev(w2).imag(), nw2.real(), nw2.imag(), w2.kmin(), w2.kmax());
    std::printf("ratio ser=(%.6e,%.6e) num=(%.6e,%.6e)\n",
        (ev(w1)/ev(w2)).real(), (ev(w1)/ev(w2)).imag(), (nw1/nw2).real(), (nw1/nw2).imag());
    return 0;
}
