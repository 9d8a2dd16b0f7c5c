#pragma once
// Complex scalar plumbing shared by every module: Laurent polynomials in z,
// dense complex matrices with a pivot-threshold inverse, and polynomial
// root-finding via companion-matrix eigenvalues.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace ancrc {

using cplx = std::complex<double>;
inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline const cplx kI{0.0, 1.0};

struct SingularMatrix : std::runtime_error {
    explicit SingularMatrix(const std::string& w) : std::runtime_error(w) {}
};
struct DegenerateLeadingCoefficient : std::runtime_error {
    explicit DegenerateLeadingCoefficient(const std::string& w) : std::runtime_error(w) {}
};
struct BasisMismatch : std::runtime_error {
    explicit BasisMismatch(const std::string& w) : std::runtime_error(w) {}
};
struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& w) : std::out_of_range(w) {}
};

// ---------------------------------------------------------------------------
// LaurentZ: finite Laurent polynomial sum_{k=lo}^{hi} c_{k-lo} z^k
// ---------------------------------------------------------------------------
class LaurentZ {
  public:
    LaurentZ() : lo_(0), c_{} {}
    LaurentZ(int lo, std::vector<cplx> coeffs) : lo_(lo), c_(std::move(coeffs)) { normalize(); }
    static LaurentZ constant(cplx v) { return LaurentZ(0, {v}); }
    static LaurentZ monomial(cplx v, int k) { return LaurentZ(k, {v}); }

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<cplx>& coeffs() const { return c_; }

    cplx coeff(int k) const {
        if (k < lo_ || k > hi()) return {};
        return c_[static_cast<size_t>(k - lo_)];
    }

    cplx eval(cplx z) const {
        // Horner on the polynomial part, then the z^{lo} prefactor.
        cplx acc = 0.0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
        return acc * std::pow(z, lo_);
    }

    LaurentZ truncated(int kmax) const {
        // drop all powers above z^kmax
        if (is_zero() || lo_ > kmax) return {};
        std::vector<cplx> out(c_.begin(), c_.begin() + std::min<size_t>(c_.size(), static_cast<size_t>(kmax - lo_ + 1)));
        return LaurentZ(lo_, std::move(out));
    }

    friend LaurentZ operator+(const LaurentZ& p, const LaurentZ& q) {
        if (p.is_zero()) return q;
        if (q.is_zero()) return p;
        int lo = std::min(p.lo_, q.lo_), hi = std::max(p.hi(), q.hi());
        std::vector<cplx> out(static_cast<size_t>(hi - lo + 1));
        for (int k = lo; k <= hi; ++k) out[static_cast<size_t>(k - lo)] = p.coeff(k) + q.coeff(k);
        return LaurentZ(lo, std::move(out));
    }
    friend LaurentZ operator-(const LaurentZ& p, const LaurentZ& q) { return p + (q * cplx(-1.0)); }
    friend LaurentZ operator*(const LaurentZ& p, cplx s) {
        std::vector<cplx> out = p.c_;
        for (auto& v : out) v *= s;
        return LaurentZ(p.lo_, std::move(out));
    }
    friend LaurentZ operator*(cplx s, const LaurentZ& p) { return p * s; }

    // exact convolution product; degree bounds add
    friend LaurentZ operator*(const LaurentZ& p, const LaurentZ& q) {
        if (p.is_zero() || q.is_zero()) return {};
        std::vector<cplx> out(p.c_.size() + q.c_.size() - 1);
        for (size_t i = 0; i < p.c_.size(); ++i)
            for (size_t j = 0; j < q.c_.size(); ++j) out[i + j] += p.c_[i] * q.c_[j];
        return LaurentZ(p.lo_ + q.lo_, std::move(out));
    }

    // exp of a Laurent polynomial with lo >= 1, truncated at z^kmax
    static LaurentZ exp_truncated(const LaurentZ& p, int kmax) {
        if (!p.is_zero() && p.lo() < 1)
            throw std::invalid_argument("exp_truncated needs a series with lo >= 1");
        LaurentZ acc = constant(1.0), term = constant(1.0);
        for (int m = 1; m <= kmax; ++m) {
            term = (term * p).truncated(kmax) * (1.0 / static_cast<double>(m));
            if (term.is_zero()) break;
            acc = acc + term;
        }
        return acc.truncated(kmax);
    }

  private:
    void normalize() {
        size_t lead = 0;
        while (lead < c_.size() && std::abs(c_[lead]) == 0.0) ++lead;
        if (lead == c_.size()) {
            c_.clear();
            lo_ = 0;
            return;
        }
        size_t tail = c_.size();
        while (tail > lead && std::abs(c_[tail - 1]) == 0.0) --tail;
        if (lead > 0 || tail < c_.size()) {
            c_ = std::vector<cplx>(c_.begin() + static_cast<long>(lead), c_.begin() + static_cast<long>(tail));
            lo_ += static_cast<int>(lead);
        }
    }
    int lo_;
    std::vector<cplx> c_;
};

// ---------------------------------------------------------------------------
// CMatrix: dense square complex matrix, row-major
// ---------------------------------------------------------------------------
class CMatrix {
  public:
    CMatrix() : n_(0) {}
    explicit CMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}
    static CMatrix identity(int n) {
        CMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
    static CMatrix diagonal(const std::vector<cplx>& d) {
        CMatrix m(static_cast<int>(d.size()));
        for (int i = 0; i < m.n_; ++i) m(i, i) = d[static_cast<size_t>(i)];
        return m;
    }

    int dim() const { return n_; }
    cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    cplx operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    CMatrix transpose() const {
        CMatrix t(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend CMatrix operator*(const CMatrix& x, const CMatrix& y) {
        CMatrix out(x.n_);
        for (int i = 0; i < x.n_; ++i)
            for (int k = 0; k < x.n_; ++k) {
                const cplx v = x(i, k);
                if (v == cplx{}) continue;
                for (int j = 0; j < x.n_; ++j) out(i, j) += v * y(k, j);
            }
        return out;
    }
    friend std::vector<cplx> operator*(const CMatrix& x, const std::vector<cplx>& v) {
        std::vector<cplx> out(static_cast<size_t>(x.n_));
        for (int i = 0; i < x.n_; ++i) {
            cplx s = 0.0;
            for (int j = 0; j < x.n_; ++j) s += x(i, j) * v[static_cast<size_t>(j)];
            out[static_cast<size_t>(i)] = s;
        }
        return out;
    }
    friend CMatrix operator+(const CMatrix& x, const CMatrix& y) {
        CMatrix out(x.n_);
        for (size_t i = 0; i < x.a_.size(); ++i) out.a_[i] = x.a_[i] + y.a_[i];
        return out;
    }
    friend CMatrix operator-(const CMatrix& x, const CMatrix& y) {
        CMatrix out(x.n_);
        for (size_t i = 0; i < x.a_.size(); ++i) out.a_[i] = x.a_[i] - y.a_[i];
        return out;
    }
    friend CMatrix operator*(const CMatrix& x, cplx s) {
        CMatrix out = x;
        for (auto& v : out.a_) v *= s;
        return out;
    }

    double norm_inf() const {
        double m = 0.0;
        for (const auto& v : a_) m = std::max(m, std::abs(v));
        return m;
    }

    // Gauss-Jordan with partial pivoting. SingularMatrix when the pivot
    // magnitude underflows 1e-13 * max|entry|.
    CMatrix inverse() const {
        const double floor = 1e-13 * std::max(norm_inf(), 1e-300);
        CMatrix a = *this, inv = identity(n_);
        for (int col = 0; col < n_; ++col) {
            int piv = col;
            for (int r = col + 1; r < n_; ++r)
                if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
            if (std::abs(a(piv, col)) < floor)
                throw SingularMatrix("matrix_inverse: pivot underflow at column " + std::to_string(col));
            if (piv != col)
                for (int j = 0; j < n_; ++j) {
                    std::swap(a(piv, j), a(col, j));
                    std::swap(inv(piv, j), inv(col, j));
                }
            const cplx d = a(col, col);
            for (int j = 0; j < n_; ++j) {
                a(col, j) /= d;
                inv(col, j) /= d;
            }
            for (int r = 0; r < n_; ++r) {
                if (r == col) continue;
                const cplx f = a(r, col);
                if (f == cplx{}) continue;
                for (int j = 0; j < n_; ++j) {
                    a(r, j) -= f * a(col, j);
                    inv(r, j) -= f * inv(col, j);
                }
            }
        }
        return inv;
    }

    std::vector<cplx> solve(const std::vector<cplx>& rhs) const { return inverse() * rhs; }

  private:
    int n_;
    std::vector<cplx> a_;
};

inline CMatrix matrix_inverse(const CMatrix& m) { return m.inverse(); }

inline LaurentZ laurent_mul(const LaurentZ& p, const LaurentZ& q) { return p * q; }

// ---------------------------------------------------------------------------
// poly_roots: all roots of c_0 + c_1 z + ... + c_d z^d, companion-matrix
// eigenvalues followed by one Newton polish per root.
// ---------------------------------------------------------------------------
inline cplx poly_eval(const std::vector<cplx>& c, cplx z) {
    cplx acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

inline std::vector<cplx> poly_roots(const std::vector<cplx>& coeffs) {
    double cmax = 0.0;
    for (const auto& v : coeffs) cmax = std::max(cmax, std::abs(v));
    std::vector<cplx> c = coeffs;
    while (c.size() > 1 && std::abs(c.back()) <= 1e-13 * cmax) c.pop_back();
    const int d = static_cast<int>(c.size()) - 1;
    if (d < 1 || std::abs(c.back()) <= 1e-13 * cmax)
        throw DegenerateLeadingCoefficient("poly_roots: leading coefficient below threshold");

    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) comp(i, d - 1) = -c[static_cast<size_t>(i)] / c.back();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);

    std::vector<cplx> dc(static_cast<size_t>(d));
    for (int k = 1; k <= d; ++k) dc[static_cast<size_t>(k - 1)] = static_cast<double>(k) * c[static_cast<size_t>(k)];

    std::vector<cplx> roots(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        cplx r = es.eigenvalues()(i);
        for (int it = 0; it < 3; ++it) {
            const cplx f = poly_eval(c, r), df = poly_eval(dc, r);
            if (std::abs(df) < 1e-280) break;
            const cplx step = f / df;
            if (!std::isfinite(std::abs(step))) break;
            r -= step;
        }
        roots[static_cast<size_t>(i)] = r;
    }
    return roots;
}

}  // namespace ancrc
