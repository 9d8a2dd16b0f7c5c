#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "ancrc/core.hpp"

using namespace ancrc;

namespace {
std::mt19937_64 rng(20240811u);
cplx rand_cplx(double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> d(lo, hi);
    return {d(rng), d(rng)};
}
}  // namespace

TEST_CASE("laurent: inverse monomials multiply to one") {
    const LaurentZ z = LaurentZ::monomial(1.0, 1);
    const LaurentZ zinv = LaurentZ::monomial(1.0, -1);
    const LaurentZ p = z * zinv;
    REQUIRE(p.lo() == 0);
    REQUIRE(p.hi() == 0);
    REQUIRE(std::abs(p.coeff(0) - 1.0) < 1e-15);
}

TEST_CASE("laurent: (1+z)(1-z) = 1 - z^2") {
    const LaurentZ p(0, {1.0, 1.0});
    const LaurentZ q(0, {1.0, -1.0});
    const LaurentZ r = p * q;
    REQUIRE(std::abs(r.coeff(0) - 1.0) < 1e-15);
    REQUIRE(std::abs(r.coeff(1)) < 1e-15);
    REQUIRE(std::abs(r.coeff(2) + 1.0) < 1e-15);
}

TEST_CASE("laurent: product matches pointwise evaluation") {
    for (int rep = 0; rep < 5; ++rep) {
        std::vector<cplx> pc(6), qc(5);
        for (auto& v : pc) v = rand_cplx();
        for (auto& v : qc) v = rand_cplx();
        const LaurentZ p(-2, pc), q(-1, qc);
        const LaurentZ r = p * q;
        for (int s = 0; s < 5; ++s) {
            const cplx z = rand_cplx(0.3, 1.5);
            const cplx lhs = r.eval(z), rhs = p.eval(z) * q.eval(z);
            REQUIRE(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(rhs)));
        }
    }
}

TEST_CASE("laurent: associativity and commutativity on random triples") {
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<cplx> pc(4), qc(3), rc(5);
        for (auto& v : pc) v = rand_cplx();
        for (auto& v : qc) v = rand_cplx();
        for (auto& v : rc) v = rand_cplx();
        const LaurentZ p(-1, pc), q(0, qc), r(-3, rc);
        const LaurentZ ab_c = (p * q) * r, a_bc = p * (q * r);
        const LaurentZ pq = p * q, qp = q * p;
        for (int k = ab_c.lo(); k <= ab_c.hi(); ++k)
            REQUIRE(std::abs(ab_c.coeff(k) - a_bc.coeff(k)) < 1e-12);
        for (int k = pq.lo(); k <= pq.hi(); ++k) REQUIRE(std::abs(pq.coeff(k) - qp.coeff(k)) < 1e-12);
    }
}

TEST_CASE("matrix: identity and diagonal inverses") {
    REQUIRE((CMatrix::identity(3) - CMatrix::identity(3).inverse()).norm_inf() < 1e-15);
    CMatrix d = CMatrix::diagonal({cplx(2.0), cplx(4.0)});
    CMatrix dinv = d.inverse();
    REQUIRE(std::abs(dinv(0, 0) - 0.5) < 1e-15);
    REQUIRE(std::abs(dinv(1, 1) - 0.25) < 1e-15);
}

TEST_CASE("matrix: random well-conditioned inverse residual") {
    for (int rep = 0; rep < 5; ++rep) {
        CMatrix m(5);
        for (int i = 0; i < 5; ++i) {
            for (int j = 0; j < 5; ++j) m(i, j) = rand_cplx();
            m(i, i) += 4.0;  // diagonally dominant
        }
        const CMatrix r = m * m.inverse() - CMatrix::identity(5);
        REQUIRE(r.norm_inf() < 1e-10);
        const CMatrix rr = m.inverse().inverse() - m;
        REQUIRE(rr.norm_inf() < 1e-9 * m.norm_inf());
    }
}

TEST_CASE("matrix: singular pivot is detected") {
    CMatrix m(2);
    m(0, 0) = 1.0;
    m(0, 1) = 2.0;
    m(1, 0) = 2.0;
    m(1, 1) = 4.0;
    REQUIRE_THROWS_AS(m.inverse(), SingularMatrix);
}

TEST_CASE("poly_roots: quadratic and multiple roots") {
    auto r = poly_roots({cplx(-1.0), cplx(0.0), cplx(1.0)});  // z^2 - 1
    std::sort(r.begin(), r.end(), [](cplx a, cplx b) { return a.real() < b.real(); });
    REQUIRE(std::abs(r[0] + 1.0) < 1e-12);
    REQUIRE(std::abs(r[1] - 1.0) < 1e-12);

    auto r3 = poly_roots({cplx(0.0), cplx(0.0), cplx(0.0), cplx(1.0)});  // z^3
    for (const auto& root : r3) REQUIRE(std::abs(root) < 1e-5);
}

TEST_CASE("poly_roots: recovers a known factored form") {
    std::vector<cplx> roots;
    for (int i = 0; i < 6; ++i) roots.push_back(rand_cplx(-2.0, 2.0) + cplx(0.0, 0.3 * i));
    std::vector<cplx> c{1.0};
    for (const auto& r : roots) {
        std::vector<cplx> nc(c.size() + 1);
        for (size_t i = 0; i < c.size(); ++i) {
            nc[i + 1] += c[i];
            nc[i] -= r * c[i];
        }
        c = nc;
    }
    auto found = poly_roots(c);
    for (const auto& r : roots) {
        double best = 1e9;
        for (const auto& f : found) best = std::min(best, std::abs(f - r));
        REQUIRE(best < 1e-9);
    }
    for (const auto& f : found) REQUIRE(std::abs(poly_eval(c, f)) < 1e-9 * 64.0);
}

TEST_CASE("poly_roots: degenerate leading coefficient") {
    REQUIRE_THROWS_AS(poly_roots({cplx(1.0), cplx(1e-20)}), DegenerateLeadingCoefficient);
}
