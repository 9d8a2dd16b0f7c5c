#pragma once
// Twisted periods of the Hurwitz-space superpotential: the Lauricella closed
// form and the Euler line-integral (tanh-sinh) route.  Points of the mirror
// moduli space carry log(kappa) data, not bare kappa values: every power
// kappa^s is exp(s log kappa), which keeps analytic continuation along paths
// in the kappa variables unambiguous.

#include <functional>
#include <vector>

#include "core.hpp"
#include "geometry.hpp"
#include "special.hpp"

namespace ancrc {

struct SegmentHitsPuncture : std::runtime_error {
    explicit SegmentHitsPuncture(const std::string& w) : std::runtime_error(w) {}
};

struct PeriodParams {
    const AnGeometry* geo = nullptr;
    std::vector<cplx> log_kappa;  // log kappa_1 .. log kappa_n
    cplx log_kappa0 = 0.0;        // log kappa_0 (fundamental-class direction)
    cplx z{1.0, 0.0};

    cplx a() const { return static_cast<double>(geo->n() + 1) * geo->alpha1() / z; }
    cplx b() const { return geo->alpha_sum() / z; }
};

// log kappa data of the orbifold point, continued along the path rho:
// arg(kappa_j) = -2 pi j/(n+1)
inline std::vector<cplx> op_log_kappa(const AnGeometry& geo) {
    std::vector<cplx> lk(static_cast<size_t>(geo.n()));
    for (int j = 1; j <= geo.n(); ++j)
        lk[static_cast<size_t>(j - 1)] = -2.0 * kPi * kI * static_cast<double>(j) / static_cast<double>(geo.n() + 1);
    return lk;
}

// Pi_i via the Lauricella closed form: Gamma(a)Gamma(1-b)/Gamma(1+a-b) times
// kappa_i^{-a} prod_j kappa_j^{alpha1/z} times Phi(a,b,1+a-b; w) with
// arguments w = (kappa_m/kappa_i)_{m != i}, kappa_{n+1} = 1.
inline cplx twisted_period(const PeriodParams& pp, int i, double tol = 1e-12) {
    const AnGeometry& g = *pp.geo;
    const int n = g.n();
    if (i < 1 || i > n + 1) throw IndexOutOfRange("twisted_period: index");
    const cplx a = pp.a(), b = pp.b();
    const cplx pref = cgamma(a) * cgamma(1.0 - b) / cgamma(1.0 + a - b);
    cplx logmono = pp.log_kappa0 * (g.alpha1() / pp.z);
    for (const auto& lk : pp.log_kappa) logmono += lk * (g.alpha1() / pp.z);
    const cplx lki = (i <= n) ? pp.log_kappa[static_cast<size_t>(i - 1)] : cplx(0.0);

    FDParams fd;
    fd.a = a;
    fd.c = 1.0 + a - b;
    for (int m = 1; m <= n + 1; ++m) {
        if (m == i) continue;
        const cplx lkm = (m <= n) ? pp.log_kappa[static_cast<size_t>(m - 1)] : cplx(0.0);
        fd.b.push_back(b);
        fd.w.push_back(std::exp(lkm - lki));
    }
    return pref * std::exp(-a * lki) * std::exp(logmono) * lauricella_fd(fd, tol);
}

namespace detail {
// core Euler integral over the straight segment q in (0, kappa_i^{-1}) with
// an optional insertion factor; returns the full period normalization.
inline cplx period_line(const PeriodParams& pp, int i, const std::function<cplx(cplx)>* insertion, double tol,
                        int max_level) {
    const AnGeometry& g = *pp.geo;
    const int n = g.n();
    const cplx a = pp.a(), b = pp.b();
    const cplx logE = (i <= n) ? -pp.log_kappa[static_cast<size_t>(i - 1)] : cplx(0.0);
    const cplx E = std::exp(logE);

    std::vector<cplx> kap(static_cast<size_t>(n));
    for (int m = 1; m <= n; ++m) kap[static_cast<size_t>(m - 1)] = std::exp(pp.log_kappa[static_cast<size_t>(m - 1)]);

    for (int m = 1; m <= n + 1; ++m) {  // punctures off the open segment
        if (m == i) continue;
        const cplx P = (m <= n) ? 1.0 / kap[static_cast<size_t>(m - 1)] : cplx(1.0);
        const double tr = std::clamp((P / E).real(), 0.0, 1.0);
        if (std::abs(P - tr * E) < 1e-6 * std::max(1.0, std::abs(E)))
            throw SegmentHitsPuncture("period quadrature: puncture within 1e-6 of the segment");
    }

    auto f = [&](double s, double oms) -> cplx {
        // q^{a-1}(1-q kappa_i)^{-b} prod_{m != i} (1-q kappa_m)^{-b}, q = E s;
        // the i-th factor is exactly (1-s).
        cplx lg = (a - 1.0) * std::log(s) - b * std::log(oms);
        for (int m = 1; m <= n + 1; ++m) {
            if (m == i) continue;
            const cplx km = (m <= n) ? kap[static_cast<size_t>(m - 1)] : cplx(1.0);
            lg += -b * std::log(1.0 - E * s * km);
        }
        cplx val = std::exp(lg);
        if (insertion) val *= (*insertion)(E * s);
        return val;
    };
    const cplx I = tanh_sinh_01(f, tol, max_level);
    cplx logmono = pp.log_kappa0 * (g.alpha1() / pp.z);
    for (const auto& lk : pp.log_kappa) logmono += lk * (g.alpha1() / pp.z);
    return std::exp(logmono + a * logE) * I;
}
}  // namespace detail

// Euler line integral over [0, kappa_i^{-1}] in the sector Re(a) > 0,
// Re(b) < 1; agrees with twisted_period wherever both converge.
inline cplx twisted_period_quadrature(const PeriodParams& pp, int i, double tol = 1e-12, int max_level = 12) {
    if (pp.a().real() <= 0.0 || pp.b().real() >= 1.0)
        throw DomainNotCovered("twisted_period_quadrature: outside the sector Re(a)>0, Re(b)<1");
    return detail::period_line(pp, i, nullptr, tol, max_level);
}

// d Pi_i / d log(kappa_k), differentiated under the integral sign; k = 0 is
// the kappa_0 direction.  For k = i the endpoint motion cancels against the
// explicit kappa_i^{-a} prefactor as long as Re(b) < 0.
inline cplx twisted_period_quadrature_dlk(const PeriodParams& pp, int i, int k, double tol = 1e-12) {
    const AnGeometry& g = *pp.geo;
    const int n = g.n();
    const cplx a = pp.a(), b = pp.b();
    const cplx a1z = g.alpha1() / pp.z;
    if (k == 0) return a1z * detail::period_line(pp, i, nullptr, tol, 12);
    if (k < 1 || k > n) throw IndexOutOfRange("twisted_period_quadrature_dlk: kappa index");
    if (k == i) {
        if (b.real() >= 0.0)
            throw DomainNotCovered("twisted_period_quadrature_dlk: k = i needs Re(b) < 0 for the endpoint term to vanish");
        std::function<cplx(cplx)> ins = [&](cplx q) -> cplx {
            cplx s = 0.0;
            for (int m = 1; m <= n + 1; ++m) {
                if (m == i) continue;
                const cplx km = (m <= n) ? std::exp(pp.log_kappa[static_cast<size_t>(m - 1)]) : cplx(1.0);
                s += -b * q * km / (1.0 - q * km);
            }
            return s;
        };
        return (a1z - a) * detail::period_line(pp, i, nullptr, tol, 12) + detail::period_line(pp, i, &ins, tol, 12);
    }
    const cplx kk = std::exp(pp.log_kappa[static_cast<size_t>(k - 1)]);
    std::function<cplx(cplx)> ins = [&](cplx q) -> cplx { return b * q * kk / (1.0 - q * kk); };
    return a1z * detail::period_line(pp, i, nullptr, tol, 12) + detail::period_line(pp, i, &ins, tol, 12);
}

}  // namespace ancrc
