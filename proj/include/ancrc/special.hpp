#pragma once
// Complex special functions: log-Gamma (Lanczos + reflection), Gauss 2F1 with
// its |z|>1 connection formula, Lauricella F_D series and leading large-w
// asymptotics, Bernoulli polynomials, and a tanh-sinh quadrature engine for
// endpoint-singular line integrals.

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "core.hpp"

namespace ancrc {

struct GammaPole : std::runtime_error {
    GammaPole() : std::runtime_error("gamma pole: argument at a nonpositive integer") {}
    explicit GammaPole(const std::string& w) : std::runtime_error(w) {}
};
struct NearSingularPoint : std::runtime_error {
    explicit NearSingularPoint(const std::string& w) : std::runtime_error(w) {}
};
struct IntegerDifference : std::runtime_error {
    explicit IntegerDifference(const std::string& w) : std::runtime_error(w) {}
};
struct DomainNotCovered : std::runtime_error {
    explicit DomainNotCovered(const std::string& w) : std::runtime_error(w) {}
};

// ---------------------------------------------------------------------------
// log Gamma.  14-term Lanczos for Re z >= 0.5, reflection below; log(sin(pi z))
// is assembled from exponentials so large imaginary parts do not overflow.
// exp(log_gamma) is exact everywhere off the poles; below Re z = 0.5 the
// imaginary part follows the reflection composition rather than the principal
// sheet.
// ---------------------------------------------------------------------------
inline cplx log_sin(cplx x) {
    const cplx i{0.0, 1.0};
    if (x.imag() > 0.0)
        return i * kPi / 2.0 - std::log(2.0) - i * x + std::log(cplx(1.0) - std::exp(2.0 * i * x));
    return -i * kPi / 2.0 - std::log(2.0) + i * x + std::log(cplx(1.0) - std::exp(-2.0 * i * x));
}

inline bool near_nonpositive_integer(cplx z, double tol = 1e-12) {
    if (z.real() > 0.5) return false;
    const double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) < tol && std::abs(z.imag()) < tol;
}

inline cplx log_gamma(cplx z) {
    if (near_nonpositive_integer(z)) throw GammaPole{};
    if (z.real() < 0.5) return std::log(kPi) - log_sin(kPi * z) - log_gamma(1.0 - z);
    static const double coef[14] = {
        57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
        -0.491913816097620199,   3.39946499848118887e-5,  4.65236289270485756e-5,
        -9.83744753048795646e-5, 1.58088703224912494e-4,  -2.10264441724104883e-4,
        2.17439618115212643e-4,  -1.64318106536763890e-4, 8.44182239838527433e-5,
        -2.61908384015814087e-5, 3.68991826595316234e-6};
    cplx y = z;
    cplx tmp = z + 5.24218750000000000;
    tmp = (z + 0.5) * std::log(tmp) - tmp;
    cplx ser = 0.999999999999997092;
    for (int j = 0; j < 14; ++j) {
        y += 1.0;
        ser += coef[j] / y;
    }
    return tmp + std::log(2.5066282746310005 * ser / z);
}

inline cplx cgamma(cplx z) { return std::exp(log_gamma(z)); }

// ---------------------------------------------------------------------------
// Bernoulli numbers and polynomials
// ---------------------------------------------------------------------------
inline double bernoulli_number(int k) {
    constexpr int kMax = 34;
    static const std::array<double, kMax + 1> table = [] {
        std::array<double, kMax + 1> B{};
        std::array<std::array<double, kMax + 2>, kMax + 2> binom{};
        for (int m = 0; m <= kMax + 1; ++m) {
            binom[static_cast<size_t>(m)][0] = 1.0;
            for (int j = 1; j <= m; ++j)
                binom[static_cast<size_t>(m)][static_cast<size_t>(j)] =
                    binom[static_cast<size_t>(m - 1)][static_cast<size_t>(j - 1)] +
                    ((j <= m - 1) ? binom[static_cast<size_t>(m - 1)][static_cast<size_t>(j)] : 0.0);
        }
        B[0] = 1.0;
        for (int m = 1; m <= kMax; ++m) {
            double s = 0.0;
            for (int j = 0; j < m; ++j) s += binom[static_cast<size_t>(m + 1)][static_cast<size_t>(j)] * B[static_cast<size_t>(j)];
            B[static_cast<size_t>(m)] = -s / binom[static_cast<size_t>(m + 1)][static_cast<size_t>(m)];
        }
        return B;
    }();
    if (k < 0 || k > kMax) throw std::invalid_argument("bernoulli_number: order out of range");
    return table[static_cast<size_t>(k)];
}

inline cplx bernoulli_poly(int k, cplx x) {
    if (k < 0 || k > 30) throw std::invalid_argument("bernoulli_poly: need 0 <= k <= 30");
    cplx acc = 0.0;
    double binom = 1.0;
    for (int j = 0; j <= k; ++j) {  // sum_j C(k,j) B_j x^{k-j}
        acc += binom * bernoulli_number(j) * std::pow(x, static_cast<double>(k - j));
        binom = binom * static_cast<double>(k - j) / static_cast<double>(j + 1);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Gauss 2F1
// ---------------------------------------------------------------------------
namespace detail {
inline cplx hyp2f1_series(cplx a, cplx b, cplx c, cplx z, double tol) {
    cplx term = 1.0, acc = 1.0;
    int quiet = 0;
    for (int m = 0; m < 1000000; ++m) {
        term *= (a + static_cast<double>(m)) * (b + static_cast<double>(m)) /
                ((c + static_cast<double>(m)) * static_cast<double>(m + 1)) * z;
        acc += term;
        if (std::abs(term) < tol * std::max(1.0, std::abs(acc))) {
            if (++quiet >= 3) return acc;
        } else {
            quiet = 0;
        }
    }
    return acc;
}
}  // namespace detail

inline cplx gauss_2f1(cplx a, cplx b, cplx c, cplx z, double tol = 1e-14) {
    if (near_nonpositive_integer(c)) throw GammaPole{};
    if (std::abs(z) < 1e-300) return 1.0;
    if (std::abs(z - 1.0) < 1e-3) throw NearSingularPoint("gauss_2f1: z too close to 1");
    if (std::abs(z) <= 0.9) return detail::hyp2f1_series(a, b, c, z, tol);
    if (std::abs(z) >= 1.1) {
        const cplx ab = a - b;
        if (std::abs(ab.real() - std::round(ab.real())) < 1e-10 && std::abs(ab.imag()) < 1e-10)
            throw IntegerDifference("gauss_2f1 connection: a-b within 1e-10 of an integer");
        // principal branches of (-z)^{-a}, (-z)^{-b}; zero winding about z=1
        const cplx lz = std::log(-z);
        const cplx t1 = std::exp(-a * lz) * cgamma(c) * cgamma(b - a) / (cgamma(b) * cgamma(c - a)) *
                        detail::hyp2f1_series(a, a - c + 1.0, a - b + 1.0, 1.0 / z, tol);
        const cplx t2 = std::exp(-b * lz) * cgamma(c) * cgamma(a - b) / (cgamma(a) * cgamma(c - b)) *
                        detail::hyp2f1_series(b, b - c + 1.0, b - a + 1.0, 1.0 / z, tol);
        return t1 + t2;
    }
    throw NearSingularPoint("gauss_2f1: |z| in the uncovered annulus (0.9, 1.1)");
}

// ---------------------------------------------------------------------------
// Lauricella F_D
// ---------------------------------------------------------------------------
struct FDParams {
    cplx a;
    std::vector<cplx> b;
    cplx c;
    std::vector<cplx> w;
};

namespace detail {
// homogeneous coefficients of prod_j (1 - w_j t)^{-b_j} via the log-derivative
// recursion (m+1) h_{m+1} = sum_{r<=m} h_r q_{m-r},  q_s = sum_j b_j w_j^{s+1}
class FDHomogeneous {
  public:
    FDHomogeneous(std::vector<cplx> b, std::vector<cplx> w) : b_(std::move(b)), w_(std::move(w)), wp_(w_) {
        h_.push_back(1.0);
    }
    cplx h(size_t m) {
        while (h_.size() <= m) grow();
        return h_[m];
    }

  private:
    void grow() {
        const size_t m = h_.size() - 1;
        cplx q = 0.0;
        for (size_t j = 0; j < w_.size(); ++j) q += b_[j] * wp_[j];
        qs_.push_back(q);
        for (size_t j = 0; j < w_.size(); ++j) wp_[j] *= w_[j];
        cplx s = 0.0;
        for (size_t r = 0; r <= m; ++r) s += h_[r] * qs_[m - r];
        h_.push_back(s / static_cast<double>(m + 1));
    }
    std::vector<cplx> b_, w_, wp_, h_, qs_;
};
}  // namespace detail

inline cplx lauricella_fd(const FDParams& p, double tol = 1e-12) {
    const size_t N = p.w.size();
    if (N == 0) return 1.0;
    if (p.b.size() != N) throw std::invalid_argument("lauricella_fd: b/w size mismatch");
    if (near_nonpositive_integer(p.c)) throw GammaPole{};
    if (N == 1) return gauss_2f1(p.a, p.b[0], p.c, p.w[0], tol);

    double wmax = 0.0;
    size_t big = N, nbig = 0;
    for (size_t j = 0; j < N; ++j) {
        const double aw = std::abs(p.w[j]);
        wmax = std::max(wmax, aw);
        if (aw > 0.92) {
            big = j;
            ++nbig;
        }
    }

    if (wmax <= 0.92) {
        detail::FDHomogeneous H(p.b, p.w);
        cplx poch = 1.0, acc = 0.0;  // poch = (a)_M/(c)_M
        int quiet = 0;
        for (int M = 0; M < 1000000; ++M) {
            const cplx term = poch * H.h(static_cast<size_t>(M));
            acc += term;
            if (std::abs(term) < tol * std::max(1.0, std::abs(acc))) {
                if (++quiet >= 3) return acc;
            } else {
                quiet = 0;
            }
            poch *= (p.a + static_cast<double>(M)) / (p.c + static_cast<double>(M));
        }
        return acc;
    }

    if (nbig == 1) {
        // eq. of the appendix: sum w.r.t. the large variable first, leaving a
        // 2F1 evaluated through its connection formula when |w_big| > 1.1
        std::vector<cplx> ob, ow;
        for (size_t j = 0; j < N; ++j)
            if (j != big) {
                ob.push_back(p.b[j]);
                ow.push_back(p.w[j]);
            }
        detail::FDHomogeneous H(ob, ow);
        cplx poch = 1.0, acc = 0.0;
        int quiet = 0;
        for (int M = 0; M < 200000; ++M) {
            const cplx inner =
                gauss_2f1(p.a + static_cast<double>(M), p.b[big], p.c + static_cast<double>(M), p.w[big], tol);
            const cplx term = poch * H.h(static_cast<size_t>(M)) * inner;
            acc += term;
            if (std::abs(term) < tol * std::max(1.0, std::abs(acc))) {
                if (++quiet >= 3) return acc;
            } else {
                quiet = 0;
            }
            poch *= (p.a + static_cast<double>(M)) / (p.c + static_cast<double>(M));
        }
        return acc;
    }
    throw DomainNotCovered("lauricella_fd: arguments outside series and reduction domains");
}

// Leading asymptotics of F_D in the sector w_i ~ 0, w_i/w_j ~ 0 for j > i
// (the last variables large): the sum of N+1 monomials with principal-branch
// powers.  Subleading corrections are o(1) in the sector and not computed.
inline cplx fd_leading_asymptotics(const FDParams& p) {
    const int N = static_cast<int>(p.w.size());
    auto gpow = [](cplx w, cplx s) { return std::exp(s * std::log(-w)); };  // principal (-w)^s
    cplx acc = 0.0;
    cplx Sj = 0.0;  // sum of the last j b's
    for (int j = 0; j < N; ++j) {
        const cplx bNj = p.b[static_cast<size_t>(N - j - 1)];
        const cplx num = cgamma(p.c) * cgamma(p.a - Sj) * cgamma(Sj + bNj - p.a);
        const cplx den = cgamma(p.a) * cgamma(bNj) * cgamma(p.c - p.a);
        cplx mono = 1.0;
        for (int i = 1; i <= j; ++i) {
            const size_t idx = static_cast<size_t>(N - i);  // w_{N-i+1}
            mono *= gpow(p.w[idx], -p.b[idx]);
        }
        mono *= gpow(p.w[static_cast<size_t>(N - j - 1)], -(p.a - Sj));
        acc += num / den * mono;
        Sj += bNj;
    }
    cplx mono = 1.0;
    for (int i = 0; i < N; ++i) mono *= gpow(p.w[static_cast<size_t>(i)], -p.b[static_cast<size_t>(i)]);
    acc += mono * cgamma(p.c) * cgamma(p.a - Sj) / (cgamma(p.a) * cgamma(p.c - Sj));
    return acc;
}

// ---------------------------------------------------------------------------
// tanh-sinh quadrature on (0,1).  The integrand receives (s, 1-s) so endpoint
// powers can be formed without cancellation.  Levels halve h until two
// consecutive refinements agree to tol.
// ---------------------------------------------------------------------------
inline cplx tanh_sinh_01(const std::function<cplx(double, double)>& f, double tol = 1e-12, int max_level = 12,
                         double* achieved = nullptr) {
    const double tmax = 6.5;
    auto node = [](double t, double& s, double& oms, double& w) {
        const double u = kPi / 2.0 * std::sinh(t);
        const double e2 = std::exp(-2.0 * std::abs(u));
        const double small = e2 / (1.0 + e2), large = 1.0 / (1.0 + e2);
        s = (u >= 0.0) ? large : small;
        oms = (u >= 0.0) ? small : large;
        // weight (pi/2) cosh t / cosh^2 u, written through e2 to avoid overflow
        w = kPi / 2.0 * std::cosh(t) * 4.0 * e2 / ((1.0 + e2) * (1.0 + e2));
    };
    double h = 1.0;
    cplx acc;
    {
        double s, oms, w;
        node(0.0, s, oms, w);
        acc = f(s, oms) * w;
        for (double t = h; t <= tmax; t += h) {
            node(t, s, oms, w);
            acc += f(s, oms) * w;
            node(-t, s, oms, w);
            acc += f(s, oms) * w;
        }
        acc *= h;
    }
    cplx prev = acc;
    double err = std::abs(acc);
    for (int lev = 1; lev <= max_level; ++lev) {
        h /= 2.0;
        cplx add = 0.0;
        for (double t = h; t <= tmax; t += 2.0 * h) {
            double s, oms, w;
            node(t, s, oms, w);
            add += f(s, oms) * w;
            node(-t, s, oms, w);
            add += f(s, oms) * w;
        }
        acc = prev / 2.0 + add * h;
        err = std::abs(acc - prev);
        prev = acc;
        if (lev >= 3 && err < tol * std::max(1.0, std::abs(acc))) break;
    }
    if (achieved) *achieved = err;
    return acc;
}

}  // namespace ancrc
